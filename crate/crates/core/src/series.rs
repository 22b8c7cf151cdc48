use alloc::vec::Vec;

/// Positions attaining each window's extrema, as offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArgSeries {
    pub argmax: Vec<usize>,
    pub argmin: Vec<usize>,
}

/// Batch filter output. Entry `j` covers `a[j..j + w]`.
///
/// `args` is `None` for algorithms that track values only.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExtremaSeries<T> {
    pub max: Vec<T>,
    pub min: Vec<T>,
    pub args: Option<ArgSeries>,
}

impl<T> ExtremaSeries<T> {
    pub(crate) fn with_capacity(windows: usize, args: bool) -> Self {
        Self {
            max: Vec::with_capacity(windows),
            min: Vec::with_capacity(windows),
            args: args.then(|| ArgSeries {
                argmax: Vec::with_capacity(windows),
                argmin: Vec::with_capacity(windows),
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.max.len()
    }

    pub fn is_empty(&self) -> bool {
        self.max.is_empty()
    }

    /// Drops positions, keeping values.
    pub fn without_args(mut self) -> Self {
        self.args = None;
        self
    }
}
