//! From the model to the panel regression.
//!
//! Log-linearizing `s(w, λ)` gives `Δln s ≈ γ Δln y + θ Δln λ`, with `γ` and
//! `θ` the model's income and credit elasticities of the saving rate. A
//! first-order expansion of `γ` around the point where it vanishes yields the
//! interaction specification `(γ' + δ λ_i + ζ y_i) Δln y + θ' Δln λ`.
//!
//! This module computes those coefficients analytically, generates synthetic
//! panels from simulated economies and estimates both specifications with a
//! two-way fixed-effects within estimator.

mod coefficients;
mod estimate;
mod generate;
mod io;

use serde::{Deserialize, Serialize};

pub use coefficients::{
    elasticity_coefficients, gamma_coefficient, interaction_coefficients, theta_coefficient,
    ElasticityCoefficients, InteractionCoefficients, EXPANSION_TOL, FD_REL_STEP,
};
pub use estimate::{
    sign_report, split_by_income, two_way_demean, within_fe_ols, Estimates, FeFit, SignCheck,
    SignReport, DEMEAN_TOL,
};
pub use generate::{generate_panel, CountrySpec, SyntheticWorld, WorldBuilder, REDRAW_CAP};
pub use io::{read_panel_csv, write_panel_csv, PANEL_HEADER};

/// One first-differenced country-year cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PanelObservation {
    pub country: u32,
    pub year: u32,
    /// `Δln s`
    pub dlns: f64,
    /// `Δln y`
    pub dlny: f64,
    /// `Δln λ`
    pub dlnlam: f64,
    /// Country mean of output per capita.
    pub y_bar: f64,
    /// Country mean of pledgeability.
    pub lam_bar: f64,
}
