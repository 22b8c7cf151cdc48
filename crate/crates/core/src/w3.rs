use crate::sample::{check_input, Compare, Natural, Sample};
use crate::series::ExtremaSeries;
use crate::{Error, Result};

/// Order of two consecutive values.
#[derive(Clone, Copy)]
enum Rel {
    Rise,
    Flat,
    Fall,
}

/// Max-min filter for `w = 3` with at most two comparisons per element.
///
/// Carries the exact relation between the last two values forward, which
/// together with two comparisons against the new value is enough to locate
/// both extrema of the window, earliest on ties.
pub fn run_w3<T: Sample>(a: &[T]) -> Result<ExtremaSeries<T>> {
    run_w3_with(a, Natural)
}

pub fn run_w3_with<T: Sample, C: Compare<T>>(a: &[T], mut cmp: C) -> Result<ExtremaSeries<T>> {
    if a.len() < 3 {
        return Err(Error::WindowTooLarge { w: 3, n: a.len() });
    }
    check_input(a)?;
    let mut out = ExtremaSeries::with_capacity(a.len() - 2, true);
    let args = out.args.as_mut().expect("allocated with args");

    let mut rel = if cmp.less(&a[0], &a[1]) {
        Rel::Rise
    } else if cmp.less(&a[1], &a[0]) {
        Rel::Fall
    } else {
        Rel::Flat
    };

    for i in 2..a.len() {
        let (u, v, x) = (i - 2, i - 1, i);
        // (argmax, argmin, relation of a[v] to a[x])
        let (hi, lo, next) = match rel {
            Rel::Rise => {
                if cmp.less(&a[x], &a[v]) {
                    if cmp.less(&a[x], &a[u]) {
                        (v, x, Rel::Fall)
                    } else {
                        (v, u, Rel::Fall)
                    }
                } else if cmp.less(&a[v], &a[x]) {
                    (x, u, Rel::Rise)
                } else {
                    (v, u, Rel::Flat)
                }
            }
            Rel::Flat => {
                if cmp.less(&a[u], &a[x]) {
                    (x, u, Rel::Rise)
                } else if cmp.less(&a[x], &a[u]) {
                    (u, x, Rel::Fall)
                } else {
                    (u, u, Rel::Flat)
                }
            }
            Rel::Fall => {
                if cmp.less(&a[v], &a[x]) {
                    if cmp.less(&a[u], &a[x]) {
                        (x, v, Rel::Rise)
                    } else {
                        (u, v, Rel::Rise)
                    }
                } else if cmp.less(&a[x], &a[v]) {
                    (u, x, Rel::Fall)
                } else {
                    (u, v, Rel::Flat)
                }
            }
        };
        out.max.push(a[hi]);
        out.min.push(a[lo]);
        args.argmax.push(hi);
        args.argmin.push(lo);
        rel = next;
    }
    Ok(out)
}
