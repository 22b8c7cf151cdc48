use crate::sample::{check_input, Sample};
use crate::series::ExtremaSeries;
use crate::wedge::WindowParams;
use crate::Result;

/// Brute-force per-window extrema, earliest position on ties.
///
/// Deliberately shares no code with the filters.
pub fn oracle_run<T: Sample>(a: &[T], params: WindowParams) -> Result<ExtremaSeries<T>> {
    params.check_len(a.len())?;
    check_input(a)?;
    let w = params.width();
    let mut out = ExtremaSeries::with_capacity(a.len() + 1 - w, true);
    let args = out.args.as_mut().expect("allocated with args");
    for j in 0..=a.len() - w {
        let window = &a[j..j + w];
        let hi = (0..w).fold(0, |best, k| if window[k] > window[best] { k } else { best });
        let lo = (0..w).fold(0, |best, k| if window[k] < window[best] { k } else { best });
        out.max.push(window[hi]);
        out.min.push(window[lo]);
        args.argmax.push(j + hi);
        args.argmin.push(j + lo);
    }
    Ok(out)
}

/// One window's output as reported in a mismatch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum<T> {
    pub max: T,
    pub min: T,
    pub argmax: Option<usize>,
    pub argmin: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict<T> {
    Equal,
    LengthMismatch { left: usize, right: usize },
    /// First window where the series differ.
    Mismatch { window: usize, left: Extremum<T>, right: Extremum<T> },
}

impl<T> Verdict<T> {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

fn at<T: Sample>(s: &ExtremaSeries<T>, j: usize) -> Extremum<T> {
    Extremum {
        max: s.max[j],
        min: s.min[j],
        argmax: s.args.as_ref().map(|a| a.argmax[j]),
        argmin: s.args.as_ref().map(|a| a.argmin[j]),
    }
}

/// Exact comparison of two outputs; values bitwise for floats.
///
/// With `compare_args`, positions must match too, and a series without
/// positions never matches one with them.
pub fn verify_equal<T: Sample>(x: &ExtremaSeries<T>, y: &ExtremaSeries<T>, compare_args: bool) -> Verdict<T> {
    if x.len() != y.len() || x.min.len() != x.max.len() || y.min.len() != y.max.len() {
        return Verdict::LengthMismatch { left: x.len(), right: y.len() };
    }
    for j in 0..x.len() {
        let (l, r) = (at(x, j), at(y, j));
        let values = l.max.same(&r.max) && l.min.same(&r.min);
        let args = !compare_args || (l.argmax.is_some() && l.argmax == r.argmax && l.argmin == r.argmin);
        if !(values && args) {
            return Verdict::Mismatch { window: j, left: l, right: r };
        }
    }
    Verdict::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ArgSeries;
    use alloc::vec;

    fn params(w: usize) -> WindowParams {
        WindowParams::new(w).unwrap()
    }

    #[test]
    fn examples() {
        let s = oracle_run(&[1.0, 3.0, 2.0, 5.0, 4.0], params(3)).unwrap();
        assert_eq!(s.max, [3.0, 5.0, 5.0]);
        assert_eq!(s.min, [1.0, 2.0, 2.0]);

        let s = oracle_run(&[2, 1, 2, 1], params(2)).unwrap();
        assert_eq!(s.max, [2, 2, 2]);
        assert_eq!(s.min, [1, 1, 1]);
        assert_eq!(s.args.unwrap().argmax, [0, 2, 2]);

        let s = oracle_run(&[3, 9, -2, 9, 0], params(5)).unwrap();
        assert_eq!((s.max.as_slice(), s.min.as_slice()), (&[9][..], &[-2][..]));
        assert_eq!(s.args.unwrap().argmax, [1]);
    }

    #[test]
    fn equal_series() {
        let s = oracle_run(&[4, 1, 3, 3, 0, 2], params(2)).unwrap();
        assert_eq!(verify_equal(&s, &s.clone(), true), Verdict::Equal);
    }

    #[test]
    fn first_divergence_is_reported() {
        let a: alloc::vec::Vec<i32> = (0..12).collect();
        let s = oracle_run(&a, params(3)).unwrap();
        let mut t = s.clone();
        t.max[7] = 100;
        t.max[9] = 100;
        match verify_equal(&s, &t, false) {
            Verdict::Mismatch { window, left, right } => {
                assert_eq!(window, 7);
                assert_eq!((left.max, right.max), (9, 100));
            }
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn args_only_checked_on_request() {
        let s = ExtremaSeries { max: vec![1], min: vec![0], args: Some(ArgSeries { argmax: vec![0], argmin: vec![1] }) };
        let mut t = s.clone();
        t.args.as_mut().unwrap().argmin[0] = 0;
        assert!(verify_equal(&s, &t, false).is_equal());
        assert!(!verify_equal(&s, &t, true).is_equal());
        assert!(!verify_equal(&s, &t.without_args(), true).is_equal());
    }

    #[test]
    fn length_mismatch_is_a_verdict() {
        let s = oracle_run(&[1, 2, 3], params(2)).unwrap();
        let t = oracle_run(&[1, 2, 3], params(3)).unwrap();
        assert_eq!(verify_equal(&s, &t, false), Verdict::LengthMismatch { left: 2, right: 1 });
    }
}
