use core::fmt::Debug;

/// An element that can flow through the filters.
///
/// Filters assume a strict total order. Types with unordered values (float
/// NaN) report them through [`Sample::is_comparable`] so they can be rejected
/// on ingestion.
pub trait Sample: Copy + PartialOrd + Debug {
    fn is_comparable(&self) -> bool {
        true
    }

    /// Exact equality used when checking outputs; bitwise for floats.
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

macro_rules! ordered_sample {
    ($($t:ty),*) => { $(impl Sample for $t {})* };
}

ordered_sample!(i8, i16, i32, i64, i128, isize, u8, u16, u32, u64, u128, usize);

impl Sample for f64 {
    fn is_comparable(&self) -> bool {
        !self.is_nan()
    }

    fn same(&self, other: &Self) -> bool {
        self.to_bits() == other.to_bits()
    }
}

impl Sample for f32 {
    fn is_comparable(&self) -> bool {
        !self.is_nan()
    }

    fn same(&self, other: &Self) -> bool {
        self.to_bits() == other.to_bits()
    }
}

/// Strict order predicate. Every value comparison made by the filters goes
/// through one of these, which makes it the single point of instrumentation.
pub trait Compare<T> {
    fn less(&mut self, x: &T, y: &T) -> bool;
}

/// The type's own `<`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Natural;

impl<T: PartialOrd> Compare<T> for Natural {
    #[inline(always)]
    fn less(&mut self, x: &T, y: &T) -> bool {
        x < y
    }
}

impl<T, C: Compare<T> + ?Sized> Compare<T> for &mut C {
    #[inline(always)]
    fn less(&mut self, x: &T, y: &T) -> bool {
        (**self).less(x, y)
    }
}

pub(crate) fn check_input<T: Sample>(a: &[T]) -> crate::Result<()> {
    match a.iter().position(|x| !x.is_comparable()) {
        Some(p) => Err(crate::Error::Incomparable { position: p as u64 }),
        None => Ok(()),
    }
}
