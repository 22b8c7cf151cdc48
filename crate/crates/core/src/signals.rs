use core::f64::consts::PI;
use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignalKind {
    Uniform,
    Sine,
    RampUp,
    RampDown,
    Constant,
    Piecewise,
    Alternating,
}

impl SignalKind {
    pub const ALL: [SignalKind; 7] = [
        SignalKind::Uniform,
        SignalKind::Sine,
        SignalKind::RampUp,
        SignalKind::RampDown,
        SignalKind::Constant,
        SignalKind::Piecewise,
        SignalKind::Alternating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SignalKind::Uniform => "uniform",
            SignalKind::Sine => "sine",
            SignalKind::RampUp => "ramp_up",
            SignalKind::RampDown => "ramp_down",
            SignalKind::Constant => "constant",
            SignalKind::Piecewise => "piecewise",
            SignalKind::Alternating => "alternating",
        }
    }
}

impl fmt::Display for SignalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SignalKind {
    type Err = &'static str;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        SignalKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or("unknown signal (expected uniform, sine, ramp_up, ramp_down, constant, piecewise or alternating)")
    }
}

/// Deterministic description of a test signal.
///
/// Fields a kind does not use are ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalSpec {
    pub kind: SignalKind,
    pub n: usize,
    pub seed: u64,
    /// Samples per sine cycle.
    pub period: usize,
    /// Number of monotone runs in a piecewise signal.
    pub segments: usize,
    /// Value of a constant signal.
    pub level: f64,
}

impl SignalSpec {
    pub fn new(kind: SignalKind, n: usize) -> Self {
        Self { kind, n, seed: 0, period: 10_000, segments: 8, level: 0.0 }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn period(mut self, period: usize) -> Self {
        self.period = period;
        self
    }

    pub fn segments(mut self, segments: usize) -> Self {
        self.segments = segments;
        self
    }

    pub fn level(mut self, level: f64) -> Self {
        self.level = level;
        self
    }
}

/// Uniform in [0, 1) with 53 random bits.
fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Generates the signal. Same spec, same values, on every platform.
pub fn generate(spec: &SignalSpec) -> Result<Vec<f64>> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::InvalidSignal("n must be at least 1"));
    }
    let out = match spec.kind {
        SignalKind::Uniform => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            (0..n).map(|_| unit(&mut rng)).collect()
        }
        SignalKind::Sine => {
            if spec.period < 2 {
                return Err(Error::InvalidSignal("sine period must be at least 2"));
            }
            let p = spec.period as f64;
            (0..n).map(|i| libm::sin(2.0 * PI * i as f64 / p)).collect()
        }
        SignalKind::RampUp => (0..n).map(|i| i as f64).collect(),
        SignalKind::RampDown => (0..n).map(|i| (n - 1 - i) as f64).collect(),
        SignalKind::Constant => {
            if spec.level.is_nan() {
                return Err(Error::InvalidSignal("constant level must not be NaN"));
            }
            alloc::vec![spec.level; n]
        }
        SignalKind::Alternating => (0..n).map(|i| (i % 2) as f64).collect(),
        SignalKind::Piecewise => {
            let s = spec.segments;
            if s == 0 || s > n {
                return Err(Error::InvalidSignal("piecewise segments must be in 1..=n"));
            }
            // strictly monotone runs of alternating direction, steps in [0.5, 1.5)
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut out = Vec::with_capacity(n);
            let mut cur = 0.0;
            for k in 0..s {
                let (lo, hi) = (k * n / s, (k + 1) * n / s);
                for _ in lo..hi {
                    let step = 0.5 + unit(&mut rng);
                    cur += if k % 2 == 0 { step } else { -step };
                    out.push(cur);
                }
            }
            out
        }
    };
    Ok(out)
}
