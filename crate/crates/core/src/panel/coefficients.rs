use serde::Serialize;

use crate::equilibrium::{check_lambda, saving_elasticity_lambda, saving_elasticity_w};
use crate::error::{ModelError, Result};
use crate::production::Production;
use crate::roots::central_difference;

/// Relative step for the partial derivatives of `F(y, λ)`.
pub const FD_REL_STEP: f64 = 1e-6;
/// Allowed `|F(ŷ, λ̂)|` at the expansion point.
pub const EXPANSION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElasticityCoefficients {
    /// Income elasticity of the saving rate.
    pub gamma: f64,
    /// Credit elasticity of the saving rate.
    pub theta: f64,
}

/// `γ = (w s₁/s) · y (w∘f⁻¹)'(y)/(w∘f⁻¹)(y)` at wage `w`.
pub fn gamma_coefficient<P: Production>(w: f64, lambda: f64, production: &P) -> Result<f64> {
    let saving = saving_elasticity_w(w, lambda)?;
    let y = production.output(production.capital_of_wage(w)?);
    Ok(saving * production.wage_output_elasticity(y)?)
}

/// `θ = λ s₂/s` at wage `w`.
pub fn theta_coefficient(w: f64, lambda: f64) -> Result<f64> {
    saving_elasticity_lambda(w, lambda)
}

pub fn elasticity_coefficients<P: Production>(
    w: f64,
    lambda: f64,
    production: &P,
) -> Result<ElasticityCoefficients> {
    Ok(ElasticityCoefficients {
        gamma: gamma_coefficient(w, lambda, production)?,
        theta: theta_coefficient(w, lambda)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InteractionCoefficients {
    pub gamma_prime: f64,
    /// Coefficient on `Δln y · λ_i`.
    pub delta: f64,
    /// Coefficient on `Δln y · y_i`.
    pub zeta: f64,
    /// Output at which the income elasticity vanishes, `(w∘f⁻¹)(ŷ) = 1 - λ̂`.
    pub y_hat: f64,
    pub lambda_hat: f64,
    /// `F(ŷ, λ̂)`, zero up to rounding.
    pub f_at_expansion: f64,
}

/// Expands `F(y, λ) = γ((w∘f⁻¹)(y), λ)` to first order around `(ŷ, λ̂)`.
pub fn interaction_coefficients<P: Production>(
    lambda_hat: f64,
    production: &P,
) -> Result<InteractionCoefficients> {
    check_lambda(lambda_hat)?;
    let y_hat = production.output(production.capital_of_wage(1.0 - lambda_hat)?);
    let f = |y: f64, lambda: f64| -> f64 {
        production
            .wage_of_output(y)
            .and_then(|w| gamma_coefficient(w, lambda, production))
            .unwrap_or(f64::NAN)
    };
    let f_at_expansion = f(y_hat, lambda_hat);
    if f_at_expansion.is_nan() || f_at_expansion.abs() > EXPANSION_TOL {
        return Err(ModelError::Inversion(format!(
            "F(y_hat, lambda_hat) = {f_at_expansion:e} at y_hat = {y_hat}; expected 0"
        )));
    }
    let f1 = central_difference(|y| f(y, lambda_hat), y_hat, FD_REL_STEP * y_hat);
    let f2 = central_difference(|l| f(y_hat, l), lambda_hat, FD_REL_STEP * lambda_hat);
    if !(f1.is_finite() && f2.is_finite()) {
        return Err(ModelError::Inversion(
            "partial derivatives of F are not finite at the expansion point".into(),
        ));
    }
    Ok(InteractionCoefficients {
        gamma_prime: -y_hat * f1 - lambda_hat * f2,
        delta: f2,
        zeta: f1,
        y_hat,
        lambda_hat,
        f_at_expansion,
    })
}
