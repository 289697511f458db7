use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::PanelObservation;
use crate::equilibrium::{entrepreneur_fraction, national_saving_rate, EconomyParams};
use crate::error::{ModelError, Result};
use crate::production::{CobbDouglas, Production, WAGE_CEILING};

/// Maximum redraws of a period's shocks before giving up.
pub const REDRAW_CAP: usize = 100;

/// One simulated economy of a synthetic world.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountrySpec {
    pub id: u32,
    pub lambda: f64,
    pub tfp: f64,
    pub alpha: f64,
    pub project_yield: f64,
    /// Wage at `t = 0`.
    pub initial_wage: f64,
    /// Deterministic per-period change in `ln λ`.
    pub lambda_drift: f64,
}

/// A set of economies plus the shock process that perturbs them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticWorld {
    pub countries: Vec<CountrySpec>,
    /// Standard deviation of the log TFP shock.
    pub sigma: f64,
    /// Standard deviation of the iid noise around the `ln λ` drift path.
    pub lambda_noise: f64,
    /// Number of simulated periods after `t = 0`.
    pub horizon: usize,
}

/// Builds a two-cluster world: even ids are poor (steady-state wage below
/// `1-λ`), odd ids rich (between `1-λ` and `2(1-λ)`).
///
/// Each country's `R` is chosen so that its drawn wage is the steady state,
/// and the country starts there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorldBuilder {
    pub n_countries: usize,
    pub horizon: usize,
    pub sigma: f64,
    /// Defaults to `sigma` when unset.
    pub lambda_noise: Option<f64>,
    pub lambda_range: (f64, f64),
    /// Steady-state wage of poor countries as a multiple of `1-λ`.
    pub poor_position: (f64, f64),
    /// Steady-state wage of rich countries as a multiple of `1-λ`.
    pub rich_position: (f64, f64),
    pub max_lambda_drift: f64,
    pub alpha: f64,
    pub tfp: f64,
}

impl Default for WorldBuilder {
    fn default() -> Self {
        WorldBuilder {
            n_countries: 60,
            horizon: 40,
            sigma: 0.01,
            lambda_noise: None,
            lambda_range: (0.3, 0.7),
            poor_position: (0.35, 0.85),
            rich_position: (1.15, 1.75),
            max_lambda_drift: 0.002,
            alpha: 0.33,
            tfp: 1.0,
        }
    }
}

impl WorldBuilder {
    pub fn build(&self, seed: u64) -> Result<SyntheticWorld> {
        if self.n_countries < 2 {
            return Err(ModelError::domain("N", self.n_countries as f64, ">= 2"));
        }
        let (lam_lo, lam_hi) = self.lambda_range;
        if !(lam_lo > 0.0 && lam_lo <= lam_hi && lam_hi < 1.0) {
            return Err(ModelError::domain(
                "lambda range",
                lam_lo,
                "0 < lo <= hi < 1",
            ));
        }
        for (lo, hi) in [self.poor_position, self.rich_position] {
            if !(lo > 0.0 && lo <= hi && hi < 2.0) {
                return Err(ModelError::domain("position range", lo, "0 < lo <= hi < 2"));
            }
        }
        if !(self.max_lambda_drift.is_finite() && self.max_lambda_drift >= 0.0) {
            return Err(ModelError::domain(
                "lambda drift",
                self.max_lambda_drift,
                ">= 0",
            ));
        }
        let production = CobbDouglas::new(self.tfp, self.alpha)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut countries = Vec::with_capacity(self.n_countries);
        for id in 0..self.n_countries as u32 {
            let lambda = lam_lo + (lam_hi - lam_lo) * rng.random::<f64>();
            let (lo, hi) = if id % 2 == 0 {
                self.poor_position
            } else {
                self.rich_position
            };
            let position = lo + (hi - lo) * rng.random::<f64>();
            let drift = self.max_lambda_drift * (2.0 * rng.random::<f64>() - 1.0);
            let w_star = position * (1.0 - lambda);
            let k_star = production.capital_of_wage(w_star)?;
            let project_yield = k_star / entrepreneur_fraction(w_star, lambda)?;
            EconomyParams::new(lambda, project_yield, production)?;
            countries.push(CountrySpec {
                id,
                lambda,
                tfp: self.tfp,
                alpha: self.alpha,
                project_yield,
                initial_wage: w_star,
                lambda_drift: drift,
            });
        }
        Ok(SyntheticWorld {
            countries,
            sigma: self.sigma,
            lambda_noise: self.lambda_noise.unwrap_or(self.sigma),
            horizon: self.horizon,
        })
    }
}

/// Simulates every country under multiplicative TFP shocks and emits
/// first-differenced logs, ordered by country then year.
///
/// Each country draws from its own ChaCha stream derived from `(seed, id)`,
/// so the output does not depend on thread scheduling.
pub fn generate_panel(world: &SyntheticWorld, seed: u64) -> Result<Vec<PanelObservation>> {
    if world.countries.is_empty() {
        return Err(ModelError::Panel("world has no countries".into()));
    }
    if world.horizon < 1 {
        return Err(ModelError::domain("T", world.horizon as f64, ">= 1"));
    }
    if !(world.sigma.is_finite() && world.sigma >= 0.0) {
        return Err(ModelError::domain("sigma", world.sigma, "finite and >= 0"));
    }
    if !(world.lambda_noise.is_finite() && world.lambda_noise >= 0.0) {
        return Err(ModelError::domain(
            "lambda noise",
            world.lambda_noise,
            "finite and >= 0",
        ));
    }
    let per_country = world
        .countries
        .par_iter()
        .map(|c| simulate_country(c, world, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_country.into_iter().flatten().collect())
}

struct Levels {
    output: f64,
    saving: f64,
    lambda: f64,
}

fn simulate_country(
    spec: &CountrySpec,
    world: &SyntheticWorld,
    seed: u64,
) -> Result<Vec<PanelObservation>> {
    let base = CobbDouglas::new(spec.tfp, spec.alpha)?;
    let params = EconomyParams::new(spec.lambda, spec.project_yield, base)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(spec.id) + 1);

    let mut capital = base.capital_of_wage(spec.initial_wage)?;
    let mut levels = Vec::with_capacity(world.horizon + 1);
    for t in 0..=world.horizon {
        let mut accepted = None;
        for _ in 0..REDRAW_CAP {
            let eps: f64 = rng.sample(StandardNormal);
            let eta: f64 = rng.sample(StandardNormal);
            let tfp = spec.tfp * (world.sigma * eps).exp();
            let lambda =
                spec.lambda * (spec.lambda_drift * t as f64 + world.lambda_noise * eta).exp();
            let production = base.with_tfp(tfp)?;
            let wage = production.wage(capital);
            if wage > 0.0 && wage < WAGE_CEILING && lambda > 0.0 && lambda < 1.0 {
                accepted = Some((production.output(capital), wage, lambda));
                break;
            }
        }
        let (output, wage, lambda) = accepted.ok_or(ModelError::RedrawCap {
            country: spec.id,
            period: t,
        })?;
        let saving = national_saving_rate(wage, lambda)?;
        levels.push(Levels {
            output,
            saving,
            lambda,
        });
        capital = params.project_yield() * saving * wage;
    }

    let n = levels.len() as f64;
    let y_bar = levels.iter().map(|l| l.output).sum::<f64>() / n;
    let lam_bar = levels.iter().map(|l| l.lambda).sum::<f64>() / n;
    Ok(levels
        .windows(2)
        .enumerate()
        .map(|(i, pair)| PanelObservation {
            country: spec.id,
            year: i as u32 + 1,
            dlns: (pair[1].saving / pair[0].saving).ln(),
            dlny: (pair[1].output / pair[0].output).ln(),
            dlnlam: (pair[1].lambda / pair[0].lambda).ln(),
            y_bar,
            lam_bar,
        })
        .collect())
}
