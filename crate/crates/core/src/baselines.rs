use alloc::vec;
use alloc::vec::Vec;

use crate::sample::{check_input, Compare, Natural, Sample};
use crate::series::ExtremaSeries;
use crate::wedge::WindowParams;
use crate::{Error, Result};

/// Scans every window in full: `2(w - 1)` comparisons per window.
pub fn naive_run<T: Sample>(a: &[T], params: WindowParams) -> Result<ExtremaSeries<T>> {
    naive_run_with(a, params, Natural)
}

pub fn naive_run_with<T: Sample, C: Compare<T>>(a: &[T], params: WindowParams, mut cmp: C) -> Result<ExtremaSeries<T>> {
    params.check_len(a.len())?;
    check_input(a)?;
    let w = params.width();
    let windows = a.len() + 1 - w;
    let mut out = ExtremaSeries::with_capacity(windows, true);
    let args = out.args.as_mut().expect("allocated with args");
    for (j, win) in a.windows(w).enumerate() {
        let (mut hi, mut lo) = (0, 0);
        for k in 1..w {
            if cmp.less(&win[hi], &win[k]) {
                hi = k;
            }
            if cmp.less(&win[k], &win[lo]) {
                lo = k;
            }
        }
        out.max.push(win[hi]);
        out.min.push(win[lo]);
        args.argmax.push(j + hi);
        args.argmin.push(j + lo);
    }
    Ok(out)
}

/// Cumulative extrema over one block and a prefix of the next.
struct BlockBuffers<T> {
    suffix_max: Vec<T>,
    suffix_min: Vec<T>,
    prefix_max: Vec<T>,
    prefix_min: Vec<T>,
}

/// van Herk–Gil–Werman filter. Values only; `args` is `None`.
///
/// Window `j` splits at the next multiple of `w` into a suffix of one block
/// and a prefix of the next. On inputs whose length is a multiple of `w` this
/// spends at most `6 - 8/w` comparisons per element. A short trailing block
/// is handled with truncated prefix arrays rather than padding.
pub fn vhgw_run<T: Sample>(a: &[T], params: WindowParams) -> Result<ExtremaSeries<T>> {
    vhgw_run_with(a, params, Natural)
}

pub fn vhgw_run_with<T: Sample, C: Compare<T>>(a: &[T], params: WindowParams, mut cmp: C) -> Result<ExtremaSeries<T>> {
    let w = params.width();
    if w < 2 {
        return Err(Error::WindowTooSmall { w, min: 2 });
    }
    params.check_len(a.len())?;
    check_input(a)?;
    let n = a.len();
    let mut out = ExtremaSeries::with_capacity(n + 1 - w, false);
    let mut buf = BlockBuffers {
        suffix_max: vec![a[0]; w],
        suffix_min: vec![a[0]; w],
        prefix_max: vec![a[0]; w],
        prefix_min: vec![a[0]; w],
    };

    let mut b = 0;
    while b + w <= n {
        // windows starting at b..=last
        let last = (b + w - 1).min(n - w);

        buf.suffix_max[w - 1] = a[b + w - 1];
        buf.suffix_min[w - 1] = a[b + w - 1];
        for k in (0..w - 1).rev() {
            let x = a[b + k];
            // ties keep the earlier element
            buf.suffix_max[k] = if cmp.less(&x, &buf.suffix_max[k + 1]) { buf.suffix_max[k + 1] } else { x };
            buf.suffix_min[k] = if cmp.less(&buf.suffix_min[k + 1], &x) { buf.suffix_min[k + 1] } else { x };
        }

        let spill = last - b;
        if spill > 0 {
            buf.prefix_max[0] = a[b + w];
            buf.prefix_min[0] = a[b + w];
            for k in 1..spill {
                let x = a[b + w + k];
                buf.prefix_max[k] = if cmp.less(&buf.prefix_max[k - 1], &x) { x } else { buf.prefix_max[k - 1] };
                buf.prefix_min[k] = if cmp.less(&x, &buf.prefix_min[k - 1]) { x } else { buf.prefix_min[k - 1] };
            }
        }

        out.max.push(buf.suffix_max[0]);
        out.min.push(buf.suffix_min[0]);
        for o in 1..=spill {
            let (s, p) = (buf.suffix_max[o], buf.prefix_max[o - 1]);
            out.max.push(if cmp.less(&s, &p) { p } else { s });
            let (s, p) = (buf.suffix_min[o], buf.prefix_min[o - 1]);
            out.min.push(if cmp.less(&p, &s) { p } else { s });
        }
        b += w;
    }
    Ok(out)
}

/// Largest delay, in elements, between a window completing and its result
/// being produced by [`vhgw_run`], which emits all windows starting in a
/// block once the last of them completes.
pub fn vhgw_emit_lag(n: usize, w: usize) -> usize {
    if n < w {
        return 0;
    }
    (w - 1).min(n - w)
}
