use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::PanelObservation;
use crate::error::{ModelError, Result};
use crate::production::Production;

/// Convergence tolerance of the alternating two-way demeaning.
pub const DEMEAN_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 10_000;
/// A demeaned column whose norm falls below this (per sqrt(n)) is treated as zero.
const ZERO_COLUMN_TOL: f64 = 1e-12;
/// Relative residual norm below which a column is collinear with earlier ones.
const COLLINEAR_TOL: f64 = 1e-9;

/// Removes country and year means from every column, alternating until the
/// largest remaining group mean is below [`DEMEAN_TOL`]. Returns the number
/// of sweeps.
pub fn two_way_demean(countries: &[u32], years: &[u32], columns: &mut [Vec<f64>]) -> usize {
    let index = |ids: &[u32]| -> (Vec<usize>, usize) {
        let distinct: BTreeMap<u32, usize> = ids
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, id)| (id, i))
            .collect();
        (ids.iter().map(|id| distinct[id]).collect(), distinct.len())
    };
    let (c_idx, n_c) = index(countries);
    let (y_idx, n_y) = index(years);

    let remove_means = |col: &mut [f64], groups: &[usize], n_groups: usize| -> f64 {
        let mut sum = vec![0.0; n_groups];
        let mut count = vec![0usize; n_groups];
        for (&g, &v) in groups.iter().zip(col.iter()) {
            sum[g] += v;
            count[g] += 1;
        }
        let means: Vec<f64> = sum.iter().zip(&count).map(|(s, &c)| s / c as f64).collect();
        for (&g, v) in groups.iter().zip(col.iter_mut()) {
            *v -= means[g];
        }
        means.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    };

    let mut sweeps = 0;
    for col in columns.iter_mut() {
        let mut n = 0;
        loop {
            let a = remove_means(col, &c_idx, n_c);
            let b = remove_means(col, &y_idx, n_y);
            n += 1;
            if a.max(b) < DEMEAN_TOL || n >= MAX_SWEEPS {
                break;
            }
        }
        sweeps = sweeps.max(n);
    }
    sweeps
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "specification", rename_all = "snake_case")]
pub enum Estimates {
    Baseline {
        gamma: f64,
        theta: f64,
    },
    Interactions {
        gamma_prime: f64,
        delta: f64,
        zeta: f64,
        theta_prime: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeFit {
    pub estimates: Estimates,
    pub regressors: Vec<&'static str>,
    pub coefficients: Vec<f64>,
    pub n_obs: usize,
    pub n_countries: usize,
    pub n_years: usize,
    pub demeaning_sweeps: usize,
    pub r_squared_within: f64,
}

/// Two-way fixed-effects within estimator for `Δln s` on `Δln y` and `Δln λ`,
/// optionally with the interactions `Δln y·λ_i` and `Δln y·y_i`.
pub fn within_fe_ols(panel: &[PanelObservation], with_interactions: bool) -> Result<FeFit> {
    let countries: Vec<u32> = panel.iter().map(|o| o.country).collect();
    let years: Vec<u32> = panel.iter().map(|o| o.year).collect();
    let n_countries = countries.iter().collect::<BTreeSet<_>>().len();
    let n_years = years.iter().collect::<BTreeSet<_>>().len();
    if n_countries < 2 || n_years < 2 {
        return Err(ModelError::Panel(format!(
            "need at least 2 countries and 2 years, got {n_countries} and {n_years}"
        )));
    }
    if let Some(o) = panel.iter().find(|o| {
        ![o.dlns, o.dlny, o.dlnlam, o.y_bar, o.lam_bar]
            .iter()
            .all(|v| v.is_finite())
    }) {
        return Err(ModelError::Panel(format!(
            "non-finite value for country {} year {}",
            o.country, o.year
        )));
    }

    let (names, mut columns): (Vec<&'static str>, Vec<Vec<f64>>) = if with_interactions {
        (
            vec!["dlny", "dlny_x_lam_bar", "dlny_x_y_bar", "dlnlam"],
            vec![
                panel.iter().map(|o| o.dlny).collect(),
                panel.iter().map(|o| o.dlny * o.lam_bar).collect(),
                panel.iter().map(|o| o.dlny * o.y_bar).collect(),
                panel.iter().map(|o| o.dlnlam).collect(),
            ],
        )
    } else {
        (
            vec!["dlny", "dlnlam"],
            vec![
                panel.iter().map(|o| o.dlny).collect(),
                panel.iter().map(|o| o.dlnlam).collect(),
            ],
        )
    };
    columns.push(panel.iter().map(|o| o.dlns).collect());
    let sweeps = two_way_demean(&countries, &years, &mut columns);
    let response = columns.pop().expect("response column");

    let coefficients = least_squares(&columns, &response, &names)?;
    let fitted_ss: f64 = (0..response.len())
        .map(|i| {
            let fit: f64 = columns
                .iter()
                .zip(&coefficients)
                .map(|(c, b)| c[i] * b)
                .sum();
            (response[i] - fit).powi(2)
        })
        .sum();
    let total_ss: f64 = response.iter().map(|v| v * v).sum();
    let r_squared_within = if total_ss > 0.0 {
        1.0 - fitted_ss / total_ss
    } else {
        0.0
    };

    let estimates = if with_interactions {
        Estimates::Interactions {
            gamma_prime: coefficients[0],
            delta: coefficients[1],
            zeta: coefficients[2],
            theta_prime: coefficients[3],
        }
    } else {
        Estimates::Baseline {
            gamma: coefficients[0],
            theta: coefficients[1],
        }
    };
    Ok(FeFit {
        estimates,
        regressors: names,
        coefficients,
        n_obs: panel.len(),
        n_countries,
        n_years,
        demeaning_sweeps: sweeps,
        r_squared_within,
    })
}

/// Least squares by modified Gram-Schmidt QR, failing on the first column
/// that is (numerically) a combination of the earlier ones.
fn least_squares(
    columns: &[Vec<f64>],
    response: &[f64],
    names: &[&'static str],
) -> Result<Vec<f64>> {
    let n = response.len();
    let p = columns.len();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let mut q: Vec<Vec<f64>> = Vec::with_capacity(p);
    let mut r = vec![vec![0.0; p]; p];
    for (j, col) in columns.iter().enumerate() {
        let original = dot(col, col).sqrt();
        let mut v = col.clone();
        for (i, qi) in q.iter().enumerate() {
            let proj = dot(qi, &v);
            r[i][j] = proj;
            v.iter_mut().zip(qi).for_each(|(x, y)| *x -= proj * y);
        }
        let norm = dot(&v, &v).sqrt();
        if original <= ZERO_COLUMN_TOL * (n as f64).sqrt() || norm <= COLLINEAR_TOL * original {
            return Err(ModelError::RankDeficient {
                column: names[j].to_string(),
            });
        }
        r[j][j] = norm;
        v.iter_mut().for_each(|x| *x /= norm);
        q.push(v);
    }
    let qty: Vec<f64> = q.iter().map(|qi| dot(qi, response)).collect();
    let mut beta = vec![0.0; p];
    for j in (0..p).rev() {
        let tail: f64 = (j + 1..p).map(|k| r[j][k] * beta[k]).sum();
        beta[j] = (qty[j] - tail) / r[j][j];
    }
    Ok(beta)
}

/// Splits countries by whether their mean wage lies below `1 - λ̄`.
pub fn split_by_income<P: Production>(
    panel: &[PanelObservation],
    production: &P,
) -> Result<(Vec<PanelObservation>, Vec<PanelObservation>)> {
    let mut poor = Vec::new();
    let mut rich = Vec::new();
    for o in panel {
        if production.wage_of_output(o.y_bar)? < 1.0 - o.lam_bar {
            poor.push(*o);
        } else {
            rich.push(*o);
        }
    }
    Ok((poor, rich))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignCheck {
    pub coefficient: &'static str,
    pub estimate: f64,
    /// `"+"` or `"-"`.
    pub predicted: &'static str,
    pub matches: bool,
    /// Part of the headline sign pattern rather than informational.
    pub required: bool,
}

impl SignCheck {
    fn new(coefficient: &'static str, estimate: f64, positive: bool, required: bool) -> Self {
        SignCheck {
            coefficient,
            estimate,
            predicted: if positive { "+" } else { "-" },
            matches: if positive {
                estimate > 0.0
            } else {
                estimate < 0.0
            },
            required,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignReport {
    pub checks: Vec<SignCheck>,
    pub baseline: FeFit,
    pub interactions: FeFit,
    pub poor: FeFit,
    pub rich: FeFit,
    pub all_required_match: bool,
}

/// Estimates every specification on `panel` and compares the signs with the
/// model's predictions: `γ > 0` for poor and `γ < 0` for rich countries,
/// `θ < 0`, `δ < 0`, `ζ < 0` (plus `γ' > 0`, `θ' < 0`).
pub fn sign_report<P: Production>(
    panel: &[PanelObservation],
    production: &P,
) -> Result<SignReport> {
    let (poor_obs, rich_obs) = split_by_income(panel, production)?;
    let poor = within_fe_ols(&poor_obs, false)?;
    let rich = within_fe_ols(&rich_obs, false)?;
    let baseline = within_fe_ols(panel, false)?;
    let interactions = within_fe_ols(panel, true)?;

    let mut checks = Vec::new();
    if let Estimates::Baseline { gamma, .. } = poor.estimates {
        checks.push(SignCheck::new("gamma_poor", gamma, true, true));
    }
    if let Estimates::Baseline { gamma, .. } = rich.estimates {
        checks.push(SignCheck::new("gamma_rich", gamma, false, true));
    }
    if let Estimates::Baseline { theta, .. } = baseline.estimates {
        checks.push(SignCheck::new("theta", theta, false, true));
    }
    if let Estimates::Interactions {
        gamma_prime,
        delta,
        zeta,
        theta_prime,
    } = interactions.estimates
    {
        checks.push(SignCheck::new("delta", delta, false, true));
        checks.push(SignCheck::new("zeta", zeta, false, true));
        checks.push(SignCheck::new("gamma_prime", gamma_prime, true, false));
        checks.push(SignCheck::new("theta_prime", theta_prime, false, false));
    }
    let all_required_match = checks.iter().filter(|c| c.required).all(|c| c.matches);
    Ok(SignReport {
        checks,
        baseline,
        interactions,
        poor,
        rich,
        all_required_match,
    })
}
