//! Static within-period equilibrium at a given wage.
//!
//! Young agents choose between lending at the market rate (investors) and
//! borrowing to run a unit-size project (entrepreneurs) whose revenue can be
//! pledged only up to a fraction `λ`. The entrepreneurial rent `φ` adjusts so
//! that both occupations yield the same lifetime utility, and the fraction of
//! entrepreneurs adjusts so that the credit market clears.
//!
//! Below the plateau threshold `w = 2(1-λ)` the credit constraint binds and
//! all objects follow from the auxiliary radical
//! `ψ(w, λ) = sqrt(1 - 2w + w²/(1-λ))`; at and above it the rent is 1 and
//! both occupations save half of the wage.

use serde::Serialize;

use crate::error::{ModelError, Result};
use crate::production::{CobbDouglas, Production, WAGE_CEILING};

/// Utility index `max (1-s) s` of an investor.
pub const INVESTOR_UTILITY: f64 = 0.25;
/// Saving rate of investors in the base model.
pub const INVESTOR_SAVING_RATE: f64 = 0.5;
/// Wages within this distance below `2(1-λ)` are evaluated on the constant branch.
pub const BRANCH_EPS: f64 = 1e-12;

/// Full parameterization of one economy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EconomyParams<P = CobbDouglas> {
    lambda: f64,
    project_yield: f64,
    production: P,
    beta: f64,
    investment_size: f64,
}

impl<P: Production> EconomyParams<P> {
    /// Base-model economy (`β = 1`, `I = 1`).
    pub fn new(lambda: f64, project_yield: f64, production: P) -> Result<Self> {
        check_lambda(lambda)?;
        if !(project_yield.is_finite() && project_yield > 0.0) {
            return Err(ModelError::domain("R", project_yield, "finite and > 0"));
        }
        let r_plus = production.r_plus()?;
        if project_yield >= r_plus {
            return Err(ModelError::Domain {
                name: "R",
                value: project_yield,
                expected: "below R+ so that w(R) < 2",
            });
        }
        Ok(EconomyParams {
            lambda,
            project_yield,
            production,
            beta: 1.0,
            investment_size: 1.0,
        })
    }

    pub fn with_discount(mut self, beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(ModelError::domain("beta", beta, "finite and > 0"));
        }
        self.beta = beta;
        Ok(self)
    }

    pub fn with_investment_size(mut self, size: f64) -> Result<Self> {
        if !(size.is_finite() && size > 0.0) {
            return Err(ModelError::domain("I", size, "finite and > 0"));
        }
        self.investment_size = size;
        Ok(self)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn project_yield(&self) -> f64 {
        self.project_yield
    }

    pub fn production(&self) -> &P {
        &self.production
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn investment_size(&self) -> f64 {
        self.investment_size
    }
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda < 1.0 {
        Ok(())
    } else {
        Err(ModelError::domain(
            "lambda",
            lambda,
            "strictly inside (0, 1)",
        ))
    }
}

pub(crate) fn check_wage(w: f64) -> Result<()> {
    if w > 0.0 && w < WAGE_CEILING {
        Ok(())
    } else {
        Err(ModelError::domain("w", w, "strictly inside (0, 2)"))
    }
}

/// Wage `2(1-λ)` above which the credit constraint stops binding.
pub fn plateau_threshold(lambda: f64) -> f64 {
    2.0 * (1.0 - lambda)
}

/// True when `w` lies on the binding branch `w < 2(1-λ)`.
pub fn is_binding(w: f64, lambda: f64) -> bool {
    w < plateau_threshold(lambda) - BRANCH_EPS
}

/// The auxiliary radical `ψ(w, λ)`, defined for `0 < w < 2(1-λ)`.
///
/// The radicand equals `λ + (w - (1-λ))²/(1-λ)`, so it is bounded below by `λ`
/// with the minimum at `w = 1-λ`.
pub fn psi(w: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    if !(w > 0.0 && w < plateau_threshold(lambda)) {
        return Err(ModelError::domain(
            "w",
            w,
            "strictly inside (0, 2(1-lambda))",
        ));
    }
    Ok(psi_unchecked(w, lambda))
}

fn psi_unchecked(w: f64, lambda: f64) -> f64 {
    let gap = w - (1.0 - lambda);
    (lambda + gap * gap / (1.0 - lambda)).sqrt()
}

/// Equilibrium entrepreneurial rent `φ(w, λ)`.
pub fn rent(w: f64, lambda: f64) -> Result<f64> {
    check_wage(w)?;
    check_lambda(lambda)?;
    if is_binding(w, lambda) {
        Ok((1.0 - w + psi_unchecked(w, lambda)) / (2.0 * lambda))
    } else {
        Ok(1.0)
    }
}

/// Outcome of an entrepreneur's saving problem at a given rent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntrepreneurChoice {
    Feasible {
        saving_rate: f64,
        utility: f64,
    },
    /// Even saving the entire wage leaves the credit constraint violated.
    ConstraintUnattainable {
        required_rate: f64,
    },
}

impl EntrepreneurChoice {
    pub fn saving_rate(&self) -> Option<f64> {
        match *self {
            EntrepreneurChoice::Feasible { saving_rate, .. } => Some(saving_rate),
            EntrepreneurChoice::ConstraintUnattainable { .. } => None,
        }
    }

    pub fn utility(&self) -> Option<f64> {
        match *self {
            EntrepreneurChoice::Feasible { utility, .. } => Some(utility),
            EntrepreneurChoice::ConstraintUnattainable { .. } => None,
        }
    }
}

/// Objective `(1-s)((φ-1)/w + s)` of the entrepreneur's saving problem.
pub fn entrepreneur_objective(s: f64, w: f64, phi: f64) -> f64 {
    (1.0 - s) * ((phi - 1.0) / w + s)
}

/// Optimal saving rate and utility index of an entrepreneur facing `(w, φ, λ)`.
///
/// The unconstrained optimum `(1 - (φ-1)/w)/2` is raised to the credit
/// constraint `(1 - λφ)/w` when that binds and clipped to `[0, 1]`.
pub fn optimal_entrepreneur_saving(w: f64, phi: f64, lambda: f64) -> Result<EntrepreneurChoice> {
    if !(w.is_finite() && w > 0.0) {
        return Err(ModelError::domain("w", w, "finite and > 0"));
    }
    if !(phi.is_finite() && phi >= 1.0) {
        return Err(ModelError::domain("phi", phi, "finite and >= 1"));
    }
    check_lambda(lambda)?;
    let constrained = (1.0 - lambda * phi) / w;
    if constrained > 1.0 {
        return Ok(EntrepreneurChoice::ConstraintUnattainable {
            required_rate: constrained,
        });
    }
    let unconstrained = 0.5 * (1.0 - (phi - 1.0) / w);
    let s = unconstrained.max(constrained).clamp(0.0, 1.0);
    Ok(EntrepreneurChoice::Feasible {
        saving_rate: s,
        utility: entrepreneur_objective(s, w, phi),
    })
}

/// Equilibrium saving rate of entrepreneurs `s^b(w, λ) = (1 - λφ)/w`.
///
/// Evaluated through the indifference identity `(1 - λφ)/w = 1 - w/(4(1-λ)φ)`,
/// which avoids the cancellation in `1 - λφ` as `w → 0`.
pub fn entrepreneur_saving_rate(w: f64, lambda: f64) -> Result<f64> {
    let phi = rent(w, lambda)?;
    if is_binding(w, lambda) {
        Ok(1.0 - w / (4.0 * (1.0 - lambda) * phi))
    } else {
        Ok(INVESTOR_SAVING_RATE)
    }
}

/// Equilibrium national saving rate `s(w, λ) = 1/(1 + ψ)` on the binding branch.
pub fn national_saving_rate(w: f64, lambda: f64) -> Result<f64> {
    check_wage(w)?;
    check_lambda(lambda)?;
    if is_binding(w, lambda) {
        Ok(1.0 / (1.0 + psi_unchecked(w, lambda)))
    } else {
        Ok(INVESTOR_SAVING_RATE)
    }
}

/// Fraction of young agents who become entrepreneurs, `π = s·w`.
pub fn entrepreneur_fraction(w: f64, lambda: f64) -> Result<f64> {
    Ok(national_saving_rate(w, lambda)? * w)
}

/// Elasticity `w s₁/s` of the national saving rate with respect to the wage.
///
/// Zero on the plateau.
pub fn saving_elasticity_w(w: f64, lambda: f64) -> Result<f64> {
    let s = national_saving_rate(w, lambda)?;
    if !is_binding(w, lambda) {
        return Ok(0.0);
    }
    Ok(s * s * w / (1.0 - s) * (1.0 - w / (1.0 - lambda)))
}

/// Elasticity `λ s₂/s` of the national saving rate with respect to `λ`.
///
/// Zero on the plateau.
pub fn saving_elasticity_lambda(w: f64, lambda: f64) -> Result<f64> {
    let s = national_saving_rate(w, lambda)?;
    if !is_binding(w, lambda) {
        return Ok(0.0);
    }
    let ratio = w / (1.0 - lambda);
    Ok(-(lambda * s * s) / (2.0 * (1.0 - s)) * ratio * ratio)
}

/// Equilibrium bundle at one date.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquilibriumState {
    pub wage: f64,
    pub rent: f64,
    pub entrepreneur_saving: f64,
    pub investor_saving: f64,
    pub saving_rate: f64,
    pub fraction: f64,
    pub capital: f64,
    pub output: f64,
}

impl EquilibriumState {
    /// Builds the equilibrium at wage `w`; capital and output follow from the
    /// production function.
    pub fn new<P: Production>(w: f64, lambda: f64, production: &P) -> Result<Self> {
        let rent = rent(w, lambda)?;
        let entrepreneur_saving = entrepreneur_saving_rate(w, lambda)?;
        let saving_rate = national_saving_rate(w, lambda)?;
        let capital = production.capital_of_wage(w)?;
        Ok(EquilibriumState {
            wage: w,
            rent,
            entrepreneur_saving,
            investor_saving: INVESTOR_SAVING_RATE,
            saving_rate,
            fraction: saving_rate * w,
            capital,
            output: production.output(capital),
        })
    }
}

/// Credit-market excess supply `π(1 - s^b w) - (1-π) w/2`.
///
/// Left side is entrepreneurs' borrowing, right side investors' lending.
pub fn clearing_residual(state: &EquilibriumState) -> f64 {
    let w = state.wage;
    state.fraction * (1.0 - state.entrepreneur_saving * w)
        - (1.0 - state.fraction) * state.investor_saving * w
}
