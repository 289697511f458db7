//! Production technology: output, factor prices and their inverses.
//!
//! Capital depreciates fully within a period, so the only objects the model
//! needs are `f`, `f'`, the wage `w(k) = f(k) - k f'(k)` and inverses of these.

use serde::Serialize;

use crate::error::{ModelError, Result};
use crate::roots;

/// Wage level at which the base-model state space ends.
pub const WAGE_CEILING: f64 = 2.0;

/// A neoclassical production function in intensive form.
///
/// Implementors must satisfy `f(0) = 0` and be strictly increasing and
/// strictly concave on the positive reals. The provided methods invert the
/// primitives numerically by bisection; instances with closed forms should
/// override them.
pub trait Production: Send + Sync + std::fmt::Debug {
    /// Output per capita `f(k)`.
    fn output(&self, k: f64) -> f64;

    /// Marginal product of capital `f'(k)`.
    fn marginal(&self, k: f64) -> f64;

    /// Wage `w(k) = f(k) - k f'(k)`.
    fn wage(&self, k: f64) -> f64 {
        if k == 0.0 {
            return 0.0;
        }
        self.output(k) - k * self.marginal(k)
    }

    /// Inverse of [`Production::wage`].
    fn capital_of_wage(&self, w: f64) -> Result<f64> {
        invert_increasing(|k| self.wage(k), w, "wage")
    }

    /// Inverse of [`Production::output`].
    fn capital_of_output(&self, y: f64) -> Result<f64> {
        invert_increasing(|k| self.output(k), y, "output")
    }

    /// `(w ∘ f⁻¹)(y)`: the wage paid when output per capita is `y`.
    fn wage_of_output(&self, y: f64) -> Result<f64> {
        Ok(self.wage(self.capital_of_output(y)?))
    }

    /// Inverse of the marginal product, `(f')⁻¹(r)`.
    fn capital_of_marginal(&self, r: f64) -> Result<f64> {
        if !(r.is_finite() && r > 0.0) {
            return Err(ModelError::Inversion(format!(
                "marginal product {r} is not a positive finite value"
            )));
        }
        // f' is decreasing: find [lo, hi] with f'(lo) > r > f'(hi).
        let mut lo = 1.0;
        let mut hi = 1.0;
        let mut n = 0;
        while self.marginal(lo) <= r {
            lo *= 0.5;
            n += 1;
            if n > 1100 || lo == 0.0 {
                return Err(ModelError::Inversion(format!(
                    "marginal product {r} lies above the range of f'"
                )));
            }
        }
        n = 0;
        while self.marginal(hi) >= r {
            hi *= 2.0;
            n += 1;
            if n > 1100 || !hi.is_finite() {
                return Err(ModelError::Inversion(format!(
                    "marginal product {r} lies below the range of f'"
                )));
            }
        }
        roots::bisect(
            |k| self.marginal(k) - r,
            lo,
            hi,
            roots::BRACKET_TOL * lo.clamp(1e-300, 1.0),
            roots::MAX_ITER,
        )
    }

    /// Elasticity `y (w∘f⁻¹)'(y) / (w∘f⁻¹)(y)` of the wage with respect to output.
    fn wage_output_elasticity(&self, y: f64) -> Result<f64> {
        log_elasticity(|v| self.wage_of_output(v), y)
    }

    /// Elasticity `d ln w⁻¹(w) / d ln w` of capital with respect to the wage.
    fn capital_wage_elasticity(&self, w: f64) -> Result<f64> {
        log_elasticity(|v| self.capital_of_wage(v), w)
    }

    /// The project-yield bound `R⁺`: the capital stock at which the wage reaches 2.
    fn r_plus(&self) -> Result<f64> {
        self.capital_of_wage(WAGE_CEILING)
    }
}

fn invert_increasing<F>(g: F, target: f64, what: &'static str) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(target.is_finite() && target >= 0.0) {
        return Err(ModelError::domain(what, target, "finite and >= 0"));
    }
    if target == 0.0 {
        return Ok(0.0);
    }
    let mut hi = 1.0;
    let mut n = 0;
    while g(hi) < target {
        hi *= 2.0;
        n += 1;
        if n > 1100 || !hi.is_finite() {
            return Err(ModelError::Inversion(format!(
                "{what} {target} is beyond the range of the production function"
            )));
        }
    }
    // Bisects to floating-point resolution.
    roots::bisect(|k| g(k) - target, 0.0, hi, 0.0, roots::MAX_ITER)
}

fn log_elasticity<F>(g: F, x: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(x.is_finite() && x > 0.0) {
        return Err(ModelError::domain("elasticity point", x, "finite and > 0"));
    }
    let h = 1e-5;
    let up = g(x * (1.0 + h))?;
    let down = g(x * (1.0 - h))?;
    let ln = |v: f64| v.ln();
    Ok((ln(up) - ln(down)) / ((1.0 + h).ln() - (1.0 - h).ln()))
}

/// `f(k) = A k^α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CobbDouglas {
    tfp: f64,
    alpha: f64,
}

impl CobbDouglas {
    pub fn new(tfp: f64, alpha: f64) -> Result<Self> {
        if !(tfp.is_finite() && tfp > 0.0) {
            return Err(ModelError::domain("A", tfp, "finite and > 0"));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(ModelError::domain("alpha", alpha, "strictly inside (0, 1)"));
        }
        Ok(CobbDouglas { tfp, alpha })
    }

    pub fn tfp(&self) -> f64 {
        self.tfp
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Same capital share, different productivity.
    pub fn with_tfp(&self, tfp: f64) -> Result<Self> {
        CobbDouglas::new(tfp, self.alpha)
    }
}

impl Production for CobbDouglas {
    fn output(&self, k: f64) -> f64 {
        self.tfp * k.powf(self.alpha)
    }

    fn marginal(&self, k: f64) -> f64 {
        self.alpha * self.tfp * k.powf(self.alpha - 1.0)
    }

    fn wage(&self, k: f64) -> f64 {
        (1.0 - self.alpha) * self.tfp * k.powf(self.alpha)
    }

    fn capital_of_wage(&self, w: f64) -> Result<f64> {
        if !(w.is_finite() && w >= 0.0) {
            return Err(ModelError::domain("w", w, "finite and >= 0"));
        }
        Ok((w / ((1.0 - self.alpha) * self.tfp)).powf(1.0 / self.alpha))
    }

    fn capital_of_output(&self, y: f64) -> Result<f64> {
        if !(y.is_finite() && y >= 0.0) {
            return Err(ModelError::domain("y", y, "finite and >= 0"));
        }
        Ok((y / self.tfp).powf(1.0 / self.alpha))
    }

    fn wage_of_output(&self, y: f64) -> Result<f64> {
        if !(y.is_finite() && y >= 0.0) {
            return Err(ModelError::domain("y", y, "finite and >= 0"));
        }
        Ok((1.0 - self.alpha) * y)
    }

    fn capital_of_marginal(&self, r: f64) -> Result<f64> {
        if !(r.is_finite() && r > 0.0) {
            return Err(ModelError::Inversion(format!(
                "marginal product {r} is not a positive finite value"
            )));
        }
        let k = (self.alpha * self.tfp / r).powf(1.0 / (1.0 - self.alpha));
        if !(k.is_finite() && k > 0.0) {
            return Err(ModelError::Inversion(format!(
                "(f')^-1({r}) is not a positive finite capital stock"
            )));
        }
        Ok(k)
    }

    fn wage_output_elasticity(&self, y: f64) -> Result<f64> {
        if !(y.is_finite() && y > 0.0) {
            return Err(ModelError::domain("y", y, "finite and > 0"));
        }
        Ok(1.0)
    }

    fn capital_wage_elasticity(&self, w: f64) -> Result<f64> {
        if !(w.is_finite() && w > 0.0) {
            return Err(ModelError::domain("w", w, "finite and > 0"));
        }
        Ok(1.0 / self.alpha)
    }

    fn r_plus(&self) -> Result<f64> {
        self.capital_of_wage(WAGE_CEILING)
    }
}

/// Checked wage of a capital stock.
pub fn wage_of_capital<P: Production>(k: f64, p: &P) -> Result<f64> {
    if !(k.is_finite() && k >= 0.0) {
        return Err(ModelError::domain("k", k, "finite and >= 0"));
    }
    Ok(p.wage(k))
}

/// Checked inverse wage.
pub fn capital_of_wage<P: Production>(w: f64, p: &P) -> Result<f64> {
    p.capital_of_wage(w)
}

/// Upper bound on the project yield keeping next-period wages below 2.
pub fn r_plus<P: Production>(p: &P) -> Result<f64> {
    p.r_plus()
}
