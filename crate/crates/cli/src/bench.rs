use std::io::Write;
use std::time::Instant;

use maxmin_core::{generate, metered_run, timed_run, Clock, SignalSpec, WindowParams};

use crate::args::BenchAlgo;
use crate::error::{CliError, CliResult};

pub const HEADER: &str = "algo,signal,n,w,seed,comparisons,cmp_per_elem,peak_wedge,emit_lag,wall_time_s";

/// `std::time::Instant` as a [`Clock`].
#[derive(Debug, Clone, Copy, Default)]
pub struct MonotonicClock;

impl Clock for MonotonicClock {
    type Mark = Instant;

    fn mark(&self) -> Instant {
        Instant::now()
    }

    fn seconds_since(&self, mark: &Instant) -> f64 {
        mark.elapsed().as_secs_f64()
    }
}

/// One CSV row. Empty cells are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algo: String,
    pub signal: String,
    pub n: usize,
    pub w: usize,
    pub seed: u64,
    pub comparisons: Option<u64>,
    pub cmp_per_elem: f64,
    pub peak_wedge: Option<usize>,
    pub emit_lag: usize,
    pub wall_time_s: Option<f64>,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        fn cell<T: ToString>(x: Option<T>) -> String {
            x.map(|v| v.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.algo,
            self.signal,
            self.n,
            self.w,
            self.seed,
            cell(self.comparisons),
            self.cmp_per_elem,
            cell(self.peak_wedge),
            self.emit_lag,
            cell(self.wall_time_s),
        )
    }
}

/// Gil-Kimmel comparisons per element for the combined filter, leading terms.
pub fn gil_kimmel_bound(w: usize) -> f64 {
    let w = w as f64;
    3.0 + 2.0 * w.log2() / w
}

/// Runs every (algorithm, width) pair over one generated signal.
///
/// Comparison counts come from one metered pass; wall time is the minimum
/// over `repeats` uninstrumented passes, run one after another.
pub fn bench<K: Clock>(spec: &SignalSpec, widths: &[usize], algos: &[BenchAlgo], repeats: usize, clock: &K) -> CliResult<Vec<BenchRow>> {
    if repeats == 0 {
        return Err(CliError::Usage("--repeats must be at least 1".into()));
    }
    if widths.is_empty() || algos.is_empty() {
        return Err(CliError::Usage("need at least one window and one algorithm".into()));
    }
    let a = generate(spec)?;
    let mut rows = Vec::new();
    for &algo in algos {
        for &w in widths {
            let mut row = BenchRow {
                algo: String::new(),
                signal: spec.kind.to_string(),
                n: spec.n,
                w,
                seed: spec.seed,
                comparisons: None,
                cmp_per_elem: 0.0,
                peak_wedge: None,
                emit_lag: w,
                wall_time_s: None,
            };
            match algo {
                BenchAlgo::GilKimmel => {
                    row.algo = "gil-kimmel".into();
                    row.cmp_per_elem = gil_kimmel_bound(w);
                }
                BenchAlgo::Run(algo) => {
                    let params = WindowParams::new(w)?;
                    let (_, m) = metered_run(algo, &a, params, clock)?;
                    let mut best = m.wall_time_s;
                    for _ in 1..repeats {
                        best = best.min(timed_run(algo, &a, params, clock)?);
                    }
                    row.algo = algo.name().into();
                    row.comparisons = Some(m.comparisons);
                    row.cmp_per_elem = m.comparisons_per_element();
                    row.peak_wedge = m.peak_wedge_size;
                    row.emit_lag = m.emit_lag_max;
                    row.wall_time_s = Some(best);
                }
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn write_report(out: &mut (impl Write + ?Sized), rows: &[BenchRow]) -> CliResult<()> {
    writeln!(out, "{HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.to_csv())?;
    }
    Ok(())
}
