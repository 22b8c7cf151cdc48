use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window width must be at least 1")]
    ZeroWindow,
    #[error("window width {w} is below the minimum {min} for this algorithm")]
    WindowTooSmall { w: usize, min: usize },
    #[error("this algorithm only supports w = {required}, got {w}")]
    FixedWidth { w: usize, required: usize },
    #[error("window larger than input (w = {w}, n = {n})")]
    WindowTooLarge { w: usize, n: usize },
    #[error("incomparable value at position {position}")]
    Incomparable { position: u64 },
    #[error("invalid signal: {0}")]
    InvalidSignal(&'static str),
    #[error("grid data has {len} values, expected {rows}x{cols}")]
    GridShape { rows: usize, cols: usize, len: usize },
    #[error("window {w_row}x{w_col} (row x col) exceeds grid {rows}x{cols}")]
    WindowExceedsGrid { w_row: usize, w_col: usize, rows: usize, cols: usize },
}
