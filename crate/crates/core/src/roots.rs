//! Bracketed bisection used by the inversion and implicit-equation solvers.

use crate::error::{ModelError, Result};

/// Absolute tolerance on the bracket width.
pub const BRACKET_TOL: f64 = 1e-12;
/// Iteration cap for every bisection in the crate.
pub const MAX_ITER: usize = 200;

/// Finds a root of `f` in `[lo, hi]` by bisection.
///
/// The endpoints must have residuals of opposite sign (or one of them must be
/// exactly zero). Iteration stops once the bracket is narrower than `tol` or
/// after `max_iter` halvings; the midpoint of the final bracket is returned.
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a);
    let fb = f(b);
    if !fa.is_finite() || !fb.is_finite() || fa.signum() == fb.signum() && fa != 0.0 && fb != 0.0 {
        return Err(ModelError::Bracket {
            lo: a,
            hi: b,
            f_lo: fa,
            f_hi: fb,
        });
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    for _ in 0..max_iter {
        if b - a <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Bisection with the crate-wide tolerance and iteration cap.
pub fn bisect_default<F>(f: F, lo: f64, hi: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    bisect(f, lo, hi, BRACKET_TOL, MAX_ITER)
}

/// Central finite difference of `f` at `x` with step `h`.
pub fn central_difference<F>(f: F, x: f64, h: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    (f(x + h) - f(x - h)) / (2.0 * h)
}
