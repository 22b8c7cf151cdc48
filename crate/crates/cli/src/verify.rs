use std::fmt;

use maxmin_core::{
    metered_run, naive_run, oracle_run, run_w3, verify_equal, vhgw_run, wedge_run, wedge_run_with, Algorithm, ArgPolicy,
    ExtremaSeries, NoClock, OrderProbe, Verdict, WindowParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type RunFn = fn(&[f64], WindowParams) -> maxmin_core::Result<ExtremaSeries<f64>>;

/// Window widths a candidate accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Widths {
    Any,
    AtLeastTwo,
    /// Always run at this width (when the input is long enough).
    Fixed(usize),
}

/// An algorithm checked against the oracle.
#[derive(Debug, Clone, Copy)]
pub struct Candidate {
    pub name: &'static str,
    pub run: RunFn,
    pub compare_args: bool,
    pub widths: Widths,
}

pub fn default_candidates() -> Vec<Candidate> {
    vec![
        Candidate { name: "wedge", run: wedge_run, compare_args: true, widths: Widths::Any },
        Candidate { name: "naive", run: naive_run, compare_args: true, widths: Widths::Any },
        Candidate { name: "vhgw", run: vhgw_run, compare_args: false, widths: Widths::AtLeastTwo },
        Candidate { name: "w3", run: |a, _| run_w3(a), compare_args: true, widths: Widths::Fixed(3) },
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub trial: usize,
    pub n: usize,
    pub w: usize,
    pub check: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trial {} (n={}, w={}): {}: {}", self.trial, self.n, self.w, self.check, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub trials: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} ok", self.passed, self.trials)
    }
}

/// A random input: length 1..=256, half the time from {0..7} to force ties.
pub fn random_case(rng: &mut impl Rng) -> (Vec<f64>, usize) {
    let n = rng.random_range(1..=256);
    let w = rng.random_range(1..=n);
    let a = if rng.random_bool(0.5) {
        (0..n).map(|_| f64::from(rng.random_range(0u8..8))).collect()
    } else {
        (0..n).map(|_| rng.random_range(-1.0e3..1.0e3)).collect()
    };
    (a, w)
}

fn adjacent_ties(a: &[f64]) -> u64 {
    a.windows(2).filter(|p| p[0] == p[1]).count() as u64
}

fn check_bounds(a: &[f64], p: WindowParams, fail: &mut impl FnMut(&str, String)) {
    let (n, w) = (a.len() as u64, p.width());
    let run = |algo| metered_run(algo, a, p, &NoClock).map(|(_, m)| m);

    match run(Algorithm::Wedge) {
        Ok(m) => {
            if m.comparisons + 1 > 3 * n + adjacent_ties(a) {
                fail("wedge comparisons", format!("{} > 3n - 1 + adjacent ties", m.comparisons));
            }
            if m.peak_wedge_size.unwrap_or(0) > w + 1 {
                fail("wedge size", format!("{:?} > w + 1", m.peak_wedge_size));
            }
            if m.emit_lag_max != 0 {
                fail("wedge latency", format!("emit lag {}", m.emit_lag_max));
            }
        }
        Err(e) => fail("wedge", e.to_string()),
    }

    let mut probe = OrderProbe::new();
    if let Err(e) = wedge_run_with(a, p, ArgPolicy::WedgeFront, &mut probe) {
        fail("wedge-front", e.to_string());
    } else if probe.count() > 3 * n {
        fail("wedge-front comparisons", format!("{} > 3n", probe.count()));
    }

    match run(Algorithm::Naive) {
        Ok(m) if m.comparisons == (a.len() - w + 1) as u64 * 2 * (w as u64 - 1) => {}
        Ok(m) => fail("naive comparisons", format!("{} != (n-w+1)*2(w-1)", m.comparisons)),
        Err(e) => fail("naive", e.to_string()),
    }

    if a.len() >= 3 {
        match run_w3_count(a) {
            Ok(c) if c <= 2 * n => {}
            Ok(c) => fail("w3 comparisons", format!("{c} > 2n")),
            Err(e) => fail("w3", e.to_string()),
        }
    }

    if w >= 2 && a.len().is_multiple_of(w) {
        match run(Algorithm::Vhgw) {
            Ok(m) if m.comparisons as f64 <= (6.0 - 8.0 / w as f64) * n as f64 => {}
            Ok(m) => fail("vhgw comparisons", format!("{} > (6 - 8/w)n", m.comparisons)),
            Err(e) => fail("vhgw", e.to_string()),
        }
    }
}

fn run_w3_count(a: &[f64]) -> maxmin_core::Result<u64> {
    let mut probe = OrderProbe::new();
    maxmin_core::run_w3_with(a, &mut probe)?;
    Ok(probe.count())
}

/// Runs `trials` random cases through every candidate and the bound checks.
pub fn verify_suite(trials: usize, seed: u64, candidates: &[Candidate]) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport { trials, ..Default::default() };
    for trial in 0..trials {
        let (a, w) = random_case(&mut rng);
        let before = report.failures.len();
        let mut fail = |check: &str, detail: String| {
            report.failures.push(Failure { trial, n: a.len(), w, check: check.to_string(), detail })
        };

        for c in candidates {
            let w = match c.widths {
                Widths::Any => w,
                Widths::AtLeastTwo if w >= 2 => w,
                Widths::Fixed(k) if a.len() >= k => k,
                _ => continue,
            };
            let p = WindowParams::new(w).expect("w >= 1");
            let truth = oracle_run(&a, p).expect("valid case");
            match (c.run)(&a, p) {
                Ok(s) => match verify_equal(&s, &truth, c.compare_args) {
                    Verdict::Equal => {}
                    v => fail(c.name, format!("w={w}: {v:?}")),
                },
                Err(e) => fail(c.name, e.to_string()),
            }
        }
        check_bounds(&a, WindowParams::new(w).expect("w >= 1"), &mut fail);

        if report.failures.len() == before {
            report.passed += 1;
        }
    }
    report
}
