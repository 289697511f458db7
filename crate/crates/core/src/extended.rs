//! Generalized model with time discount `β` and minimum investment size `I`.
//!
//! Lifetime utility is `ln c₁ + β ln c₂` and a project needs at least `I` units
//! of the final good. Every object depends on the wage only through `w/I`.
//! For `β ≠ 1` the equilibrium rent solves an implicit equation with no
//! closed form, so it is found by bracketed bisection.

use serde::Serialize;

use crate::equilibrium::{check_lambda, EconomyParams, BRANCH_EPS};
use crate::error::{ModelError, Result};
use crate::production::Production;
use crate::roots;

/// Investor saving rate `β/(1+β)`.
pub fn investor_saving_rate(beta: f64) -> f64 {
    beta / (1.0 + beta)
}

/// Investor utility index `β^β / (1+β)^(1+β)`.
pub fn investor_utility(beta: f64) -> f64 {
    beta.powf(beta) / (1.0 + beta).powf(1.0 + beta)
}

/// Normalized wage `(1+β)(1-λ)/β` above which the constraint stops binding.
pub fn plateau_threshold(lambda: f64, beta: f64) -> f64 {
    (1.0 + beta) * (1.0 - lambda) / beta
}

/// Residual of the indifference condition
/// `(1 - (1-λφ)/x)((1-λ)φ/x)^β - β^β/(1+β)^(1+β)` at normalized wage `x = w/I`.
///
/// When the first factor is negative the constraint cannot be met; the
/// residual is then reported as `-U^ℓ` so that it stays monotone in `φ`.
pub fn implicit_residual(phi: f64, w_over_i: f64, lambda: f64, beta: f64) -> f64 {
    let slack = 1.0 - (1.0 - lambda * phi) / w_over_i;
    let target = investor_utility(beta);
    if slack <= 0.0 {
        return slack - target;
    }
    slack * ((1.0 - lambda) * phi / w_over_i).powf(beta) - target
}

fn check_params(w_over_i: f64, lambda: f64, beta: f64) -> Result<()> {
    check_lambda(lambda)?;
    if !(beta.is_finite() && beta > 0.0) {
        return Err(ModelError::domain("beta", beta, "finite and > 0"));
    }
    if !(w_over_i.is_finite() && w_over_i > 0.0) {
        return Err(ModelError::domain("w/I", w_over_i, "finite and > 0"));
    }
    Ok(())
}

/// True when `w/I` lies below the plateau threshold.
pub fn is_binding(w_over_i: f64, lambda: f64, beta: f64) -> bool {
    w_over_i < plateau_threshold(lambda, beta) - BRANCH_EPS
}

/// Equilibrium rent at normalized wage `w/I`.
pub fn rent_extended(w_over_i: f64, lambda: f64, beta: f64) -> Result<f64> {
    check_params(w_over_i, lambda, beta)?;
    if !is_binding(w_over_i, lambda, beta) {
        return Ok(1.0);
    }
    let f = |phi: f64| implicit_residual(phi, w_over_i, lambda, beta);
    let lo = 1.0;
    let f_lo = f(lo);
    if f_lo >= 0.0 {
        // Only reachable within rounding of the plateau threshold.
        return Ok(1.0);
    }
    let mut hi = 1.0 / lambda - 1e-9;
    // Shrink from the 1/λ side until the bracket straddles the root.
    let mut f_hi = f(hi);
    let mut shrinks = 0;
    while f_hi < 0.0 && shrinks < roots::MAX_ITER {
        hi = lo + 0.5 * (hi - lo);
        f_hi = f(hi);
        shrinks += 1;
    }
    if f_hi < 0.0 {
        return Err(ModelError::Bracket {
            lo,
            hi: 1.0 / lambda - 1e-9,
            f_lo,
            f_hi: f(1.0 / lambda - 1e-9),
        });
    }
    roots::bisect(f, lo, hi, 0.0, roots::MAX_ITER)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtendedEquilibrium {
    pub wage: f64,
    pub investment_size: f64,
    pub beta: f64,
    pub w_over_i: f64,
    pub rent: f64,
    pub entrepreneur_saving: f64,
    pub investor_saving: f64,
    pub saving_rate: f64,
    /// `π/I = s·(w/I)`.
    pub fraction: f64,
}

/// Assembles the extended equilibrium at wage `w` for the economy's `β` and `I`.
pub fn extended_equilibrium<P: Production>(
    w: f64,
    params: &EconomyParams<P>,
) -> Result<ExtendedEquilibrium> {
    extended_equilibrium_at(w, params.investment_size(), params.lambda(), params.beta())
}

/// As [`extended_equilibrium`] with the parameters passed explicitly.
pub fn extended_equilibrium_at(
    w: f64,
    investment_size: f64,
    lambda: f64,
    beta: f64,
) -> Result<ExtendedEquilibrium> {
    if !(investment_size.is_finite() && investment_size > 0.0) {
        return Err(ModelError::domain("I", investment_size, "finite and > 0"));
    }
    let x = w / investment_size;
    let phi = rent_extended(x, lambda, beta)?;
    let investor_saving = investor_saving_rate(beta);
    let (entrepreneur_saving, saving_rate) = if is_binding(x, lambda, beta) {
        (
            (1.0 - lambda * phi) / x,
            beta / (beta * x + (1.0 + beta) * lambda * phi),
        )
    } else {
        (investor_saving, investor_saving)
    };
    Ok(ExtendedEquilibrium {
        wage: w,
        investment_size,
        beta,
        w_over_i: x,
        rent: phi,
        entrepreneur_saving,
        investor_saving,
        saving_rate,
        fraction: saving_rate * x,
    })
}

/// Credit-market excess supply `(s w/I)(I - s^b w) - (1 - s w/I) β w/(1+β)`.
pub fn extended_clearing_residual(eq: &ExtendedEquilibrium) -> f64 {
    let m = eq.fraction;
    let w = eq.wage;
    m * (eq.investment_size - eq.entrepreneur_saving * w) - (1.0 - m) * eq.investor_saving * w
}
