//! Transitional wage dynamics, interior steady states and the small open economy.
//!
//! With full depreciation next period's capital is `R·π(w_t, λ)`, so the wage
//! follows `w_{t+1} = w(R·π(w_t, λ))`. The map is increasing in `w_t`, hence
//! every trajectory is monotone.

use rayon::prelude::*;
use serde::Serialize;

use crate::equilibrium::{
    check_lambda, check_wage, entrepreneur_fraction, national_saving_rate, rent,
    saving_elasticity_w, EconomyParams, EquilibriumState,
};
use crate::error::{ModelError, Result};
use crate::production::{Production, WAGE_CEILING};
use crate::roots;

pub const DEFAULT_GRID_N: usize = 10_000;
pub const MIN_GRID_N: usize = 1_000;
/// Distance kept from the ends of the steady-state scan interval.
pub const SCAN_MARGIN: f64 = 1e-9;
/// Step of the central difference used to classify stability.
pub const SLOPE_STEP: f64 = 1e-7;
/// Default convergence tolerance on `|w_t - w_{t-1}|`.
pub const CONVERGENCE_TOL: f64 = 1e-10;

/// One period of the closed-economy wage map.
pub fn step<P: Production>(w: f64, params: &EconomyParams<P>) -> Result<f64> {
    let fraction = entrepreneur_fraction(w, params.lambda())?;
    Ok(params.production().wage(params.project_yield() * fraction))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Convergence {
    /// `|w_t - w_{t-1}| < tol` first held at `period`.
    Converged {
        period: usize,
    },
    HorizonExhausted,
}

/// Equilibrium sequence for `t = 0..=T`.
#[derive(Debug, Clone, Serialize)]
pub struct Trajectory<P> {
    pub params: EconomyParams<P>,
    pub states: Vec<EquilibriumState>,
}

impl<P> Trajectory<P> {
    pub fn wages(&self) -> impl Iterator<Item = f64> + '_ {
        self.states.iter().map(|s| s.wage)
    }

    pub fn convergence(&self, tol: f64) -> Convergence {
        self.states
            .windows(2)
            .position(|pair| (pair[1].wage - pair[0].wage).abs() < tol)
            .map(|i| Convergence::Converged { period: i + 1 })
            .unwrap_or(Convergence::HorizonExhausted)
    }

    /// Non-strict monotonicity of the wage, capital and output sequences.
    pub fn is_monotone(&self) -> bool {
        let series: [fn(&EquilibriumState) -> f64; 3] = [|s| s.wage, |s| s.capital, |s| s.output];
        series.iter().all(|get| {
            let v: Vec<f64> = self.states.iter().map(get).collect();
            v.windows(2).all(|p| p[1] >= p[0]) || v.windows(2).all(|p| p[1] <= p[0])
        })
    }

    pub fn last(&self) -> &EquilibriumState {
        self.states
            .last()
            .expect("trajectory holds at least two states")
    }
}

/// Simulates `horizon` periods of the closed economy starting from `w0`.
pub fn simulate<P: Production + Clone>(
    w0: f64,
    horizon: usize,
    params: &EconomyParams<P>,
) -> Result<Trajectory<P>> {
    check_wage(w0)?;
    if horizon < 1 {
        return Err(ModelError::domain("T", horizon as f64, ">= 1"));
    }
    let lambda = params.lambda();
    let production = params.production();
    let mut states = Vec::with_capacity(horizon + 1);
    let mut w = w0;
    states.push(EquilibriumState::new(w, lambda, production)?);
    for _ in 0..horizon {
        w = step(w, params)?;
        states.push(EquilibriumState::new(w, lambda, production)?);
    }
    Ok(Trajectory {
        params: params.clone(),
        states,
    })
}

/// `Π(w, λ) = w⁻¹(w) / π(w, λ)`; interior steady states solve `Π = R`.
pub fn capital_per_entrepreneur<P: Production>(w: f64, params: &EconomyParams<P>) -> Result<f64> {
    let k = params.production().capital_of_wage(w)?;
    Ok(k / entrepreneur_fraction(w, params.lambda())?)
}

/// Elasticity `w Π₁/Π` of the steady-state locus; positive everywhere is
/// sufficient for a unique interior steady state.
pub fn uniqueness_criterion<P: Production>(w: f64, params: &EconomyParams<P>) -> Result<f64> {
    let capital_elasticity = params.production().capital_wage_elasticity(w)?;
    Ok(capital_elasticity - 1.0 - saving_elasticity_w(w, params.lambda())?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteadyState {
    #[serde(rename = "w")]
    pub wage: f64,
    #[serde(rename = "k")]
    pub capital: f64,
    #[serde(rename = "y")]
    pub output: f64,
    #[serde(rename = "s")]
    pub saving_rate: f64,
    #[serde(rename = "pi")]
    pub fraction: f64,
    /// Slope of the wage map at the fixed point.
    pub map_slope: f64,
    pub stable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CornerSteadyState {
    #[serde(rename = "w")]
    pub wage: f64,
    pub note: &'static str,
}

impl Default for CornerSteadyState {
    fn default() -> Self {
        CornerSteadyState {
            wage: 0.0,
            note: "w = 0 is always a steady state since pi(0) = 0 and w(0) = 0",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SteadyStateReport {
    /// Interior fixed points in increasing order.
    pub interior: Vec<SteadyState>,
    /// The uniqueness criterion holds on the whole scan range.
    pub unique: bool,
    /// Minimum of the uniqueness criterion over the scan grid.
    pub criterion_min: f64,
    pub corner: CornerSteadyState,
    pub scan_interval: [f64; 2],
    pub grid_n: usize,
}

/// Enumerates interior steady states by scanning `Π(w, λ) - R` for sign changes
/// and refining every bracket by bisection.
pub fn steady_states<P: Production>(
    params: &EconomyParams<P>,
    grid_n: usize,
) -> Result<SteadyStateReport> {
    if grid_n < MIN_GRID_N {
        return Err(ModelError::domain("grid_n", grid_n as f64, ">= 1000"));
    }
    let r = params.project_yield();
    let upper = WAGE_CEILING.min(params.production().wage(r));
    let lo = SCAN_MARGIN;
    let hi = upper - SCAN_MARGIN;
    let residual = |w: f64| capital_per_entrepreneur(w, params).map(|pi| pi - r);

    let mut interior = Vec::new();
    let mut criterion_min = f64::INFINITY;
    let h = (hi - lo) / grid_n as f64;
    let mut w_prev = lo;
    let mut g_prev = residual(lo)?;
    criterion_min = criterion_min.min(uniqueness_criterion(lo, params)?);
    if g_prev == 0.0 {
        interior.push(lo);
    }
    for i in 1..=grid_n {
        let w = if i == grid_n { hi } else { lo + h * i as f64 };
        let g = residual(w)?;
        criterion_min = criterion_min.min(uniqueness_criterion(w, params)?);
        if g == 0.0 {
            interior.push(w);
        } else if g_prev != 0.0 && g.signum() != g_prev.signum() {
            let root = roots::bisect_default(|x| residual(x).unwrap_or(f64::NAN), w_prev, w)?;
            interior.push(root);
        }
        w_prev = w;
        g_prev = g;
    }

    let interior = interior
        .into_iter()
        .map(|w| describe_fixed_point(w, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(SteadyStateReport {
        interior,
        unique: criterion_min > 0.0,
        criterion_min,
        corner: CornerSteadyState::default(),
        scan_interval: [lo, hi],
        grid_n,
    })
}

fn describe_fixed_point<P: Production>(w: f64, params: &EconomyParams<P>) -> Result<SteadyState> {
    let state = EquilibriumState::new(w, params.lambda(), params.production())?;
    let h = SLOPE_STEP.min(0.5 * w).min(0.5 * (WAGE_CEILING - w));
    let slope = (step(w + h, params)? - step(w - h, params)?) / (2.0 * h);
    Ok(SteadyState {
        wage: w,
        capital: state.capital,
        output: state.output,
        saving_rate: state.saving_rate,
        fraction: state.fraction,
        map_slope: slope,
        stable: slope.abs() < 1.0,
    })
}

/// Steady-state reports for many economies, computed in parallel.
pub fn steady_states_many<P: Production>(
    params: &[EconomyParams<P>],
    grid_n: usize,
) -> Vec<Result<SteadyStateReport>> {
    params
        .par_iter()
        .map(|p| steady_states(p, grid_n))
        .collect()
}

/// Small-open-economy wage map: capital satisfies `f'(k') = r*·φ(w, λ)/R`.
pub fn open_economy_step<P: Production>(
    w: f64,
    r_star: f64,
    params: &EconomyParams<P>,
) -> Result<f64> {
    check_wage(w)?;
    check_lambda(params.lambda())?;
    if !(r_star.is_finite() && r_star > 0.0) {
        return Err(ModelError::domain("r*", r_star, "finite and > 0"));
    }
    let target = r_star * rent(w, params.lambda())? / params.project_yield();
    let k = params.production().capital_of_marginal(target)?;
    Ok(params.production().wage(k))
}

/// Iterates the open-economy map; fails once the wage leaves `(0, 2)`.
pub fn open_economy_path<P: Production>(
    w0: f64,
    r_star: f64,
    horizon: usize,
    params: &EconomyParams<P>,
) -> Result<Vec<f64>> {
    let mut path = Vec::with_capacity(horizon + 1);
    let mut w = w0;
    check_wage(w)?;
    path.push(w);
    for _ in 0..horizon {
        w = open_economy_step(w, r_star, params)?;
        path.push(w);
    }
    Ok(path)
}

/// National saving rate along a wage path.
pub fn saving_path(wages: &[f64], lambda: f64) -> Result<Vec<f64>> {
    wages
        .iter()
        .map(|&w| national_saving_rate(w, lambda))
        .collect()
}
