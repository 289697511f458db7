//! Independent reference computations used as test oracles.
//!
//! Nothing here calls into the crate's closed forms; every value is obtained
//! by brute force (bisection, grid search, finite differences) from the
//! model's primitive definitions.

#![allow(dead_code)]

/// Plain bisection on a sign-changing bracket.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(
        f_lo * f(hi) <= 0.0,
        "oracle bracket does not straddle a root"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-15 * (1.0 + mid.abs()) {
            break;
        }
        let fm = f(mid);
        if (fm < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Central difference of `ln g` with respect to `ln x`.
pub fn log_elasticity(g: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (g(x * h.exp()).ln() - g(x * (-h).exp()).ln()) / (2.0 * h)
}

/// Maximizes `obj` over `[lo, hi]` on a grid of spacing `step`, then refines
/// by fitting a parabola through the best point and its neighbours.
pub fn grid_search_max(obj: impl Fn(f64) -> f64, lo: f64, hi: f64, step: f64) -> (f64, f64) {
    let n = ((hi - lo) / step).ceil() as usize;
    let at = |i: usize| if i >= n { hi } else { lo + step * i as f64 };
    let mut best = (0usize, f64::NEG_INFINITY);
    for i in 0..=n {
        let v = obj(at(i));
        if v > best.1 {
            best = (i, v);
        }
    }
    let (i, v) = best;
    if i == 0 || i == n {
        return (at(i), v);
    }
    let (x0, x1, x2) = (at(i - 1), at(i), at(i + 1));
    let (f0, f1, f2) = (obj(x0), v, obj(x2));
    let denom = f0 - 2.0 * f1 + f2;
    if denom >= 0.0 {
        return (x1, f1);
    }
    let x = x1 + 0.5 * step * (f0 - f2) / denom;
    let x = x.clamp(x0, x2);
    (x, obj(x))
}

/// Entrepreneur objective `(1-s)((φ-1)/w + s)`.
pub fn objective(s: f64, w: f64, phi: f64) -> f64 {
    (1.0 - s) * ((phi - 1.0) / w + s)
}

/// Constrained optimum of the entrepreneur problem by grid search at the
/// given resolution; `None` when even `s = 1` violates the constraint.
pub fn entrepreneur_by_grid(w: f64, phi: f64, lambda: f64, step: f64) -> Option<(f64, f64)> {
    let lower = ((1.0 - lambda * phi) / w).max(0.0);
    if lower > 1.0 {
        return None;
    }
    Some(grid_search_max(|s| objective(s, w, phi), lower, 1.0, step))
}

/// Two-branch utility index of an entrepreneur, written out case by case.
pub fn entrepreneur_utility(w: f64, phi: f64, lambda: f64) -> f64 {
    if w >= 1.0 - (2.0 * lambda - 1.0) * phi {
        0.25 * (1.0 + (phi - 1.0) / w).powi(2)
    } else if w >= 1.0 - lambda * phi {
        (1.0 - (1.0 - lambda * phi) / w) * (1.0 - lambda) * phi / w
    } else {
        f64::NEG_INFINITY
    }
}

/// Rent making entrepreneurs indifferent to lending, by bisection on
/// `U^b(w, φ, λ) = 1/4` over `φ ∈ (1, 1/λ)`.
pub fn rent_by_indifference(w: f64, lambda: f64) -> f64 {
    bisect(
        |phi| entrepreneur_utility(w, phi, lambda).max(-1.0) - 0.25,
        1.0 + 1e-9,
        1.0 / lambda - 1e-9,
    )
}

/// National saving rate solved from credit-market clearing given `s^b`:
/// `s w (1 - s^b w) = (1 - s w) w / 2`.
pub fn saving_from_clearing(w: f64, sb: f64) -> f64 {
    bisect(
        |s| s * w * (1.0 - sb * w) - (1.0 - s * w) * w / 2.0,
        0.0,
        1.0 / w,
    )
}

/// Cobb-Douglas wage `(1-α) A k^α`, written independently.
pub fn cd_wage(k: f64, tfp: f64, alpha: f64) -> f64 {
    (1.0 - alpha) * tfp * k.powf(alpha)
}

/// Deterministic log-spaced grid on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Interior points of `(lo, hi)`, endpoints excluded.
pub fn open_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (1..=n)
        .map(|i| lo + (hi - lo) * i as f64 / (n + 1) as f64)
        .collect()
}
