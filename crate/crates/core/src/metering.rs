use core::fmt;
use core::str::FromStr;

use crate::baselines::{naive_run_with, vhgw_emit_lag, vhgw_run_with};
use crate::sample::{check_input, Compare, Natural, Sample};
use crate::series::ExtremaSeries;
use crate::w3::run_w3_with;
use crate::wedge::{ArgPolicy, WedgeFilter, WindowParams};
use crate::Result;

/// Counts calls to an inner order predicate.
///
/// Counting never changes the outcome or the number of comparisons.
#[derive(Debug, Clone, Default)]
pub struct OrderProbe<C = Natural> {
    count: u64,
    inner: C,
}

impl OrderProbe<Natural> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<C> OrderProbe<C> {
    pub fn wrap(inner: C) -> Self {
        Self { count: 0, inner }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn reset(&mut self) {
        self.count = 0;
    }
}

impl<T, C: Compare<T>> Compare<T> for OrderProbe<C> {
    #[inline(always)]
    fn less(&mut self, x: &T, y: &T) -> bool {
        self.count += 1;
        self.inner.less(x, y)
    }
}

/// Monotonic time source for wall-clock measurements.
pub trait Clock {
    type Mark;
    fn mark(&self) -> Self::Mark;
    fn seconds_since(&self, mark: &Self::Mark) -> f64;
}

/// Clock that always reads zero, for builds without a time source.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    type Mark = ();
    fn mark(&self) {}
    fn seconds_since(&self, _: &()) -> f64 {
        0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Wedge,
    Naive,
    Vhgw,
    W3,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Wedge, Algorithm::Naive, Algorithm::Vhgw, Algorithm::W3];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Wedge => "wedge",
            Algorithm::Naive => "naive",
            Algorithm::Vhgw => "vhgw",
            Algorithm::W3 => "w3",
        }
    }

    /// Whether the algorithm reports extremum positions.
    pub fn has_args(self) -> bool {
        self != Algorithm::Vhgw
    }

    /// Runs the algorithm with a caller-supplied comparator.
    pub fn run<T: Sample, C: Compare<T>>(self, a: &[T], params: WindowParams, cmp: C) -> Result<ExtremaSeries<T>> {
        match self {
            Algorithm::Wedge => crate::wedge::wedge_run_with(a, params, ArgPolicy::Earliest, cmp),
            Algorithm::Naive => naive_run_with(a, params, cmp),
            Algorithm::Vhgw => vhgw_run_with(a, params, cmp),
            Algorithm::W3 => {
                if params.width() != 3 {
                    return Err(crate::Error::FixedWidth { w: params.width(), required: 3 });
                }
                run_w3_with(a, cmp)
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = &'static str;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "wedge" => Ok(Algorithm::Wedge),
            "naive" => Ok(Algorithm::Naive),
            "vhgw" => Ok(Algorithm::Vhgw),
            "w3" => Ok(Algorithm::W3),
            _ => Err("unknown algorithm (expected wedge, naive, vhgw or w3)"),
        }
    }
}

/// Measurements of one filter run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunMetrics {
    pub n: usize,
    pub w: usize,
    pub comparisons: u64,
    /// size(U) + size(L) maximum; only meaningful for the wedge.
    pub peak_wedge_size: Option<usize>,
    /// Elements ingested after a window completes before it is emitted.
    pub emit_lag_max: usize,
    pub wall_time_s: f64,
}

impl RunMetrics {
    pub fn comparisons_per_element(&self) -> f64 {
        self.comparisons as f64 / self.n as f64
    }
}

/// Runs `algo` with every comparison routed through one [`OrderProbe`].
///
/// The wall time comes from a second, uninstrumented pass timed with `clock`
/// so that counting overhead does not skew timings between algorithms.
pub fn metered_run<T: Sample, K: Clock>(
    algo: Algorithm,
    a: &[T],
    params: WindowParams,
    clock: &K,
) -> Result<(ExtremaSeries<T>, RunMetrics)> {
    let mut probe = OrderProbe::new();
    let (series, peak, lag) = match algo {
        Algorithm::Wedge => {
            params.check_len(a.len())?;
            check_input(a)?;
            let mut filter = WedgeFilter::with_comparator(params, ArgPolicy::Earliest, &mut probe);
            let mut out = ExtremaSeries::with_capacity(a.len() + 1 - params.width(), true);
            let mut lag = 0;
            for &x in a {
                if let Some(r) = filter.push(x)? {
                    lag = lag.max((filter.pushed() - 1 - r.window_end) as usize);
                    out.max.push(r.max);
                    out.min.push(r.min);
                    let args = out.args.as_mut().expect("allocated with args");
                    args.argmax.push(r.argmax as usize);
                    args.argmin.push(r.argmin as usize);
                }
            }
            let peak = filter.peak_wedge_len();
            (out, Some(peak), lag)
        }
        Algorithm::Vhgw => (algo.run(a, params, &mut probe)?, None, vhgw_emit_lag(a.len(), params.width())),
        _ => (algo.run(a, params, &mut probe)?, None, 0),
    };
    let wall_time_s = timed_run(algo, a, params, clock)?;
    let metrics = RunMetrics {
        n: a.len(),
        w: params.width(),
        comparisons: probe.count(),
        peak_wedge_size: peak,
        emit_lag_max: lag,
        wall_time_s,
    };
    Ok((series, metrics))
}

/// Wall time of one uninstrumented run, excluding input preparation.
pub fn timed_run<T: Sample, K: Clock>(algo: Algorithm, a: &[T], params: WindowParams, clock: &K) -> Result<f64> {
    let start = clock.mark();
    let out = algo.run(a, params, Natural)?;
    let secs = clock.seconds_since(&start);
    core::hint::black_box(out);
    Ok(secs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn probe_counts_every_call() {
        let mut p = OrderProbe::new();
        assert!(p.less(&1, &2));
        assert_eq!(p.count(), 1);
        assert!(!p.less(&2, &2));
        assert_eq!(p.count(), 2);
        p.reset();
        assert_eq!(p.count(), 0);
    }

    #[test]
    fn naive_count_example() {
        let a: Vec<f64> = (0..100).map(|i| ((i * 37) % 101) as f64).collect();
        let (_, m) = metered_run(Algorithm::Naive, &a, WindowParams::new(10).unwrap(), &NoClock).unwrap();
        assert_eq!(m.comparisons, 1638);
        assert_eq!(m.emit_lag_max, 0);
    }

    #[test]
    fn ramp_within_two_n() {
        let a: Vec<f64> = (0..1000).map(f64::from).collect();
        let (_, m) = metered_run(Algorithm::Wedge, &a, WindowParams::new(50).unwrap(), &NoClock).unwrap();
        assert!(m.comparisons <= 2000);
        assert_eq!(m.emit_lag_max, 0);
        assert!(m.peak_wedge_size.unwrap() <= 51);
    }

    #[test]
    fn metered_matches_plain() {
        let a: Vec<i32> = (0..300).map(|i| (i * 7919) % 61).collect();
        let p = WindowParams::new(3).unwrap();
        for algo in Algorithm::ALL {
            let (s, _) = metered_run(algo, &a, p, &NoClock).unwrap();
            assert_eq!(s, algo.run(&a, p, Natural).unwrap(), "{algo}");
        }
    }

    #[test]
    fn names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>(), Ok(algo));
        }
        assert!("gil-kimmel".parse::<Algorithm>().is_err());
    }
}
