use alloc::vec::Vec;

use crate::sample::{check_input, Natural, Sample};
use crate::wedge::{ArgPolicy, ExtremaResult, WedgeFilter, WindowParams};
use crate::{Error, Result};

/// Row-major 2D array.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Grid<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::GridShape { rows, cols, len: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r)).expect("same element count")
    }
}

/// Max and min over every `w_col x w_row` rectangle (`w_row` along a row,
/// `w_col` down a column) that fits inside the grid.
///
/// Filters each row, then each column of the row results. Output grids have
/// `rows - w_col + 1` rows and `cols - w_row + 1` columns.
pub fn filter2d<T: Sample>(g: &Grid<T>, w_row: usize, w_col: usize) -> Result<(Grid<T>, Grid<T>)> {
    let too_big = Error::WindowExceedsGrid { w_row, w_col, rows: g.rows, cols: g.cols };
    if w_row > g.cols || w_col > g.rows {
        return Err(too_big);
    }
    let pr = WindowParams::new(w_row)?;
    let pc = WindowParams::new(w_col)?;
    check_input(&g.data)?;

    let out_cols = g.cols - w_row + 1;
    let out_rows = g.rows - w_col + 1;

    let mut row_max = Vec::with_capacity(g.rows * out_cols);
    let mut row_min = Vec::with_capacity(g.rows * out_cols);
    let mut f = WedgeFilter::with_comparator(pr, ArgPolicy::WedgeFront, Natural);
    for r in 0..g.rows {
        f.reset();
        for &x in g.row(r) {
            if let Some(e) = f.push(x)? {
                row_max.push(e.max);
                row_min.push(e.min);
            }
        }
    }

    let max = columns(&row_max, g.rows, out_cols, pc, |e| e.max)?;
    let min = columns(&row_min, g.rows, out_cols, pc, |e| e.min)?;
    Ok((Grid::new(out_rows, out_cols, max)?, Grid::new(out_rows, out_cols, min)?))
}

/// Filters each column of a row-major `rows x cols` buffer, keeping one
/// side of each result.
fn columns<T: Sample>(
    src: &[T],
    rows: usize,
    cols: usize,
    params: WindowParams,
    pick: impl Fn(&ExtremaResult<T>) -> T,
) -> Result<Vec<T>> {
    let out_rows = rows + 1 - params.width();
    let mut out = alloc::vec![src[0]; out_rows * cols];
    let mut f = WedgeFilter::with_comparator(params, ArgPolicy::WedgeFront, Natural);
    for c in 0..cols {
        f.reset();
        for r in 0..rows {
            if let Some(e) = f.push(src[r * cols + c])? {
                let top = e.window_end as usize + 1 - params.width();
                out[top * cols + c] = pick(&e);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_by_two() {
        let g = Grid::new(2, 2, vec![1, 2, 3, 4]).unwrap();
        let (mx, mn) = filter2d(&g, 2, 2).unwrap();
        assert_eq!((mx.rows(), mx.cols(), mx.data()), (1, 1, &[4][..]));
        assert_eq!(mn.data(), &[1]);
    }

    #[test]
    fn constant_grid() {
        let g = Grid::new(3, 4, vec![5.5; 12]).unwrap();
        let (mx, mn) = filter2d(&g, 2, 3).unwrap();
        assert_eq!((mx.rows(), mx.cols()), (1, 3));
        assert!(mx.data().iter().chain(mn.data()).all(|&x| x == 5.5));
    }

    #[test]
    fn rectangular_window_orientation() {
        // 2 rows x 3 cols; a 1-row, 3-column window spans a whole row
        let g = Grid::new(2, 3, vec![1, 9, 2, 7, 0, 3]).unwrap();
        let (mx, mn) = filter2d(&g, 3, 1).unwrap();
        assert_eq!((mx.rows(), mx.cols()), (2, 1));
        assert_eq!(mx.data(), &[9, 7]);
        assert_eq!(mn.data(), &[1, 0]);
    }

    #[test]
    fn window_too_large() {
        let g = Grid::new(2, 3, vec![0; 6]).unwrap();
        assert!(matches!(filter2d(&g, 1, 3), Err(Error::WindowExceedsGrid { .. })));
        assert!(matches!(filter2d(&g, 4, 1), Err(Error::WindowExceedsGrid { .. })));
        assert_eq!(filter2d(&g, 0, 1), Err(Error::ZeroWindow));
    }

    #[test]
    fn bad_shape() {
        assert_eq!(Grid::new(2, 2, vec![1, 2, 3]), Err(Error::GridShape { rows: 2, cols: 2, len: 3 }));
    }

    #[test]
    fn transpose_round_trip() {
        let g = Grid::from_fn(3, 5, |r, c| r * 10 + c).unwrap();
        assert_eq!(g.transpose().get(4, 2), 24);
        assert_eq!(g.transpose().transpose(), g);
    }
}
