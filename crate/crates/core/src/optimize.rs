//! Derivative-free one-dimensional solvers used by the protocol module.

use crate::scalar::{cast, Scalar};

const MAX_ITER: usize = 200;

/// Bisection root of `f` on `[lo, hi]`, which must bracket a sign change.
/// Stops once `|f(mid)| <= residual_tol` (or the interval degenerates).
pub(crate) fn bisect_root<T, F>(mut lo: T, mut hi: T, f: F, residual_tol: T) -> T
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let f_lo = f(lo);
    let f_hi = f(hi);
    assert!(
        (f_lo <= T::zero()) != (f_hi <= T::zero()),
        "bisection needs a sign change on the bracket"
    );
    let half = cast::<T>(0.5);
    let mut mid = (lo + hi) * half;
    for _ in 0..MAX_ITER {
        mid = (lo + hi) * half;
        let f_mid = f(mid);
        if f_mid.abs() <= residual_tol || mid == lo || mid == hi {
            return mid;
        }
        if (f_mid <= T::zero()) == (f_lo <= T::zero()) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    mid
}

/// Golden-section minimum of a unimodal `f` on `[a, b]`.
/// Returns `(x_min, f_min)` once the interval is narrower than `width_tol`.
pub(crate) fn golden_section_min<T, F>(mut a: T, mut b: T, f: F, width_tol: T) -> (T, T)
where
    T: Scalar,
    F: Fn(T) -> T,
{
    // inverse golden ratio complement: 2 - phi = (3 - sqrt 5) / 2
    let resp = (cast::<T>(3.0) - cast::<T>(5.0).sqrt()) * cast::<T>(0.5);
    let mut x1 = a + resp * (b - a);
    let mut x2 = b - resp * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..MAX_ITER {
        if (b - a).abs() <= width_tol {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + resp * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - resp * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
