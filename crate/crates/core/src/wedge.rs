use alloc::vec;
use alloc::vec::Vec;

use crate::deque::IndexDeque;
use crate::sample::{check_input, Compare, Natural, Sample};
use crate::series::ExtremaSeries;
use crate::{Error, Result};

/// Window width, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindowParams {
    w: usize,
}

impl WindowParams {
    pub fn new(w: usize) -> Result<Self> {
        if w == 0 {
            return Err(Error::ZeroWindow);
        }
        Ok(Self { w })
    }

    pub fn width(self) -> usize {
        self.w
    }

    pub(crate) fn check_len(self, n: usize) -> Result<()> {
        if n < self.w {
            return Err(Error::WindowTooLarge { w: self.w, n });
        }
        Ok(())
    }
}

/// How the filter reports the position of a tied minimum.
///
/// The maximum's position is always the earliest one in the window. The
/// wedge drops an index from the minima deque whenever the next value is
/// equal to it, so its front can sit at the end of a run of equal minima.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArgPolicy {
    /// Earliest position attaining the minimum. Ties between adjacent values
    /// are resolved on emission, which costs extra comparisons only when the
    /// input has adjacent equal values.
    #[default]
    Earliest,
    /// Whatever the front of the minima deque holds. No extra comparisons.
    WedgeFront,
}

/// One completed window. Positions count pushes from 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremaResult<T> {
    pub window_end: u64,
    pub max: T,
    pub min: T,
    pub argmax: u64,
    pub argmin: u64,
}

const UNKNOWN: u64 = u64::MAX;

/// Streaming max-min filter over a monotonic wedge.
///
/// Each push ingests one value and, once `w` values have been seen, returns
/// the extrema of the window ending at that value. At most three comparisons
/// are spent per element (two on monotonic input) and the wedge never holds
/// more than `w + 1` indices.
#[derive(Debug, Clone)]
pub struct WedgeFilter<T, C = Natural> {
    w: usize,
    next: u64,
    upper: IndexDeque,
    lower: IndexDeque,
    values: Vec<T>,
    // start of the run of equal values ending at each position, or UNKNOWN
    // when only a[p] <= a[p - 1] is known
    run_start: Vec<u64>,
    mask: usize,
    policy: ArgPolicy,
    cmp: C,
    peak: usize,
}

impl<T: Sample> WedgeFilter<T, Natural> {
    pub fn new(params: WindowParams) -> Self {
        Self::with_comparator(params, ArgPolicy::Earliest, Natural)
    }
}

impl<T: Sample, C: Compare<T>> WedgeFilter<T, C> {
    pub fn with_comparator(params: WindowParams, policy: ArgPolicy, cmp: C) -> Self {
        let w = params.width();
        let ring = (w + 1).next_power_of_two();
        let tracked = if w == 1 { 0 } else { ring };
        Self {
            w,
            next: 0,
            upper: IndexDeque::with_capacity(if w == 1 { 1 } else { w + 1 }),
            lower: IndexDeque::with_capacity(if w == 1 { 1 } else { w + 1 }),
            values: Vec::with_capacity(tracked),
            run_start: if policy == ArgPolicy::Earliest { vec![0; tracked] } else { Vec::new() },
            mask: ring - 1,
            policy,
            cmp,
            peak: 0,
        }
    }

    pub fn params(&self) -> WindowParams {
        WindowParams { w: self.w }
    }

    pub fn policy(&self) -> ArgPolicy {
        self.policy
    }

    /// Number of values ingested so far.
    pub fn pushed(&self) -> u64 {
        self.next
    }

    /// Current size(U) + size(L).
    pub fn wedge_len(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    /// Largest wedge size seen at the top of an ingest step.
    pub fn peak_wedge_len(&self) -> usize {
        self.peak
    }

    /// Maxima candidates, front to back.
    pub fn upper(&self) -> impl Iterator<Item = u64> + '_ {
        self.upper.iter()
    }

    /// Minima candidates, front to back.
    pub fn lower(&self) -> impl Iterator<Item = u64> + '_ {
        self.lower.iter()
    }

    /// Stored value at a position still inside the buffer.
    pub fn value_at(&self, pos: u64) -> Option<T> {
        if self.w == 1 || pos >= self.next || self.next - pos > self.mask as u64 + 1 {
            return None;
        }
        Some(self.values[pos as usize & self.mask])
    }

    pub fn comparator(&self) -> &C {
        &self.cmp
    }

    pub fn into_comparator(self) -> C {
        self.cmp
    }

    pub fn reset(&mut self) {
        self.next = 0;
        self.upper.clear();
        self.lower.clear();
        self.values.clear();
        self.peak = 0;
    }

    /// Ingests `x`. Returns the window ending at `x` once it is complete.
    ///
    /// NaN-like values are rejected and leave the filter untouched.
    pub fn push(&mut self, x: T) -> Result<Option<ExtremaResult<T>>> {
        if !x.is_comparable() {
            return Err(Error::Incomparable { position: self.next });
        }
        let i = self.next;
        self.next += 1;
        if self.w == 1 {
            return Ok(Some(ExtremaResult { window_end: i, max: x, min: x, argmax: i, argmin: i }));
        }

        let slot = i as usize & self.mask;
        if self.values.len() <= slot {
            self.values.push(x);
        } else {
            self.values[slot] = x;
        }

        self.peak = self.peak.max(self.upper.len() + self.lower.len());

        if i > 0 {
            let prev = self.values[(i - 1) as usize & self.mask];
            if self.cmp.less(&prev, &x) {
                self.upper.pop_back();
                while let Some(b) = self.upper.back() {
                    if !self.cmp.less(&self.values[b as usize & self.mask], &x) {
                        break;
                    }
                    self.upper.pop_back();
                }
                self.set_run_start(i, i);
            } else {
                self.lower.pop_back();
                let mut strict = false;
                while let Some(b) = self.lower.back() {
                    if !self.cmp.less(&x, &self.values[b as usize & self.mask]) {
                        break;
                    }
                    self.lower.pop_back();
                    strict = true;
                }
                self.set_run_start(i, if strict { i } else { UNKNOWN });
            }
        } else {
            self.set_run_start(0, 0);
        }
        self.upper.push_back(i);
        self.lower.push_back(i);

        let w = self.w as u64;
        if i >= w {
            let expired = i - w;
            if self.upper.front() == Some(expired) {
                self.upper.pop_front();
            } else if self.lower.front() == Some(expired) {
                self.lower.pop_front();
            }
        }

        if i + 1 < w {
            return Ok(None);
        }
        let argmax = self.upper.front().expect("wedge holds the newest index");
        let front = self.lower.front().expect("wedge holds the newest index");
        let argmin = match self.policy {
            ArgPolicy::Earliest => self.earliest_run_start(front, i + 1 - w),
            ArgPolicy::WedgeFront => front,
        };
        Ok(Some(ExtremaResult {
            window_end: i,
            max: self.values[argmax as usize & self.mask],
            min: self.values[front as usize & self.mask],
            argmax,
            argmin,
        }))
    }

    #[inline(always)]
    fn set_run_start(&mut self, pos: u64, start: u64) {
        if self.policy == ArgPolicy::Earliest {
            self.run_start[pos as usize & self.mask] = start;
        }
    }

    fn earliest_run_start(&mut self, pos: u64, window_start: u64) -> u64 {
        let (values, mask) = (&self.values, self.mask);
        earliest_run_start(&mut self.run_start, mask, pos, window_start, |p| values[p as usize & mask], &mut self.cmp)
    }
}

/// First position, not before `window_start`, of the run of equal values
/// ending at `pos`. Memoizes what it learns in `run_start`.
fn earliest_run_start<T: Sample, C: Compare<T>>(
    run_start: &mut [u64],
    mask: usize,
    pos: u64,
    window_start: u64,
    value: impl Fn(u64) -> T,
    cmp: &mut C,
) -> u64 {
    let mut p = pos;
    let start = loop {
        if p <= window_start {
            break window_start;
        }
        let known = run_start[p as usize & mask];
        if known != UNKNOWN {
            break known.max(window_start);
        }
        if cmp.less(&value(p), &value(p - 1)) {
            run_start[p as usize & mask] = p;
            break p;
        }
        p -= 1;
    };
    for q in p + 1..=pos {
        run_start[q as usize & mask] = start;
    }
    start
}

/// Runs the wedge filter over a whole slice with earliest-tie positions.
pub fn wedge_run<T: Sample>(a: &[T], params: WindowParams) -> Result<ExtremaSeries<T>> {
    wedge_run_with(a, params, ArgPolicy::Earliest, Natural)
}

/// [`wedge_run`] with an explicit tie policy and comparator.
///
/// Spends exactly the comparisons [`WedgeFilter::push`] would, but reads the
/// slice in place instead of copying it through the filter's ring.
pub fn wedge_run_with<T: Sample, C: Compare<T>>(
    a: &[T],
    params: WindowParams,
    policy: ArgPolicy,
    mut cmp: C,
) -> Result<ExtremaSeries<T>> {
    params.check_len(a.len())?;
    check_input(a)?;
    let (n, w) = (a.len(), params.width());
    let mut out = ExtremaSeries::with_capacity(n + 1 - w, true);
    let mut args = out.args.take().expect("allocated with args");
    if w == 1 {
        out.max.extend_from_slice(a);
        out.min.extend_from_slice(a);
        args.argmax.extend(0..n);
        args.argmin.extend(0..n);
        out.args = Some(args);
        return Ok(out);
    }

    let mut upper = IndexDeque::with_capacity(w + 1);
    let mut lower = IndexDeque::with_capacity(w + 1);
    let ring = (w + 1).next_power_of_two();
    let mask = ring - 1;
    let earliest = policy == ArgPolicy::Earliest;
    let mut run_start = if earliest { vec![0; ring] } else { Vec::new() };
    let at = |p: u64| a[p as usize];

    upper.push_back(0);
    lower.push_back(0);
    for i in 1..n as u64 {
        let x = at(i);
        if cmp.less(&at(i - 1), &x) {
            upper.pop_back();
            while let Some(b) = upper.back() {
                if !cmp.less(&at(b), &x) {
                    break;
                }
                upper.pop_back();
            }
            if earliest {
                run_start[i as usize & mask] = i;
            }
        } else {
            lower.pop_back();
            let mut strict = false;
            while let Some(b) = lower.back() {
                if !cmp.less(&x, &at(b)) {
                    break;
                }
                lower.pop_back();
                strict = true;
            }
            if earliest {
                run_start[i as usize & mask] = if strict { i } else { UNKNOWN };
            }
        }
        upper.push_back(i);
        lower.push_back(i);

        let w = w as u64;
        if i >= w {
            let expired = i - w;
            if upper.front() == Some(expired) {
                upper.pop_front();
            } else if lower.front() == Some(expired) {
                lower.pop_front();
            }
        }
        if i + 1 < w {
            continue;
        }
        let argmax = upper.front().expect("wedge holds the newest index");
        let front = lower.front().expect("wedge holds the newest index");
        let argmin = if earliest { earliest_run_start(&mut run_start, mask, front, i + 1 - w, at, &mut cmp) } else { front };
        out.max.push(at(argmax));
        out.min.push(at(front));
        args.argmax.push(argmax as usize);
        args.argmin.push(argmin as usize);
    }
    out.args = Some(args);
    Ok(out)
}
