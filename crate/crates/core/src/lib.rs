//! Sliding-window max-min filters.
//!
//! The main type is [`WedgeFilter`], a streaming filter that keeps a monotonic
//! wedge (two index deques) over the current window and emits the window
//! maximum and minimum on the push that completes each window. It spends at
//! most three comparisons per element, two on monotonic input.
//!
//! Alongside it live the naive scan and van Herk–Gil–Werman baselines, a
//! comparison-counting probe, deterministic test signals, a brute-force
//! oracle, and a separable 2D filter.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod baselines;
mod deque;
mod error;
mod grid;
mod metering;
mod oracle;
mod sample;
mod series;
mod signals;
mod w3;
mod wedge;

pub use baselines::{naive_run, naive_run_with, vhgw_emit_lag, vhgw_run, vhgw_run_with};
pub use deque::IndexDeque;
pub use error::{Error, Result};
pub use grid::{filter2d, Grid};
pub use metering::{metered_run, timed_run, Algorithm, Clock, NoClock, OrderProbe, RunMetrics};
pub use oracle::{oracle_run, verify_equal, Extremum, Verdict};
pub use sample::{Compare, Natural, Sample};
pub use series::{ArgSeries, ExtremaSeries};
pub use signals::{generate, SignalKind, SignalSpec};
pub use w3::{run_w3, run_w3_with};
pub use wedge::{wedge_run, wedge_run_with, ArgPolicy, ExtremaResult, WedgeFilter, WindowParams};
