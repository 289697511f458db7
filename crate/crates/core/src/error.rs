use thiserror::Error;

/// Errors raised by the model, solver and estimation layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("{name} = {value} is outside its domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("bracket [{lo}, {hi}] does not straddle a root (residuals {f_lo:e}, {f_hi:e})")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("inversion failed: {0}")]
    Inversion(String),

    #[error("regressor `{column}` is collinear after demeaning")]
    RankDeficient { column: String },

    #[error("shock redraw cap reached for country {country} in period {period}")]
    RedrawCap { country: u32, period: usize },

    #[error("invalid panel: {0}")]
    Panel(String),
}

impl ModelError {
    /// True for failures of a numerical procedure (bracketing, inversion,
    /// estimation) as opposed to invalid inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            ModelError::Bracket { .. }
                | ModelError::Inversion(_)
                | ModelError::RankDeficient { .. }
                | ModelError::RedrawCap { .. }
        )
    }

    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        ModelError::Domain {
            name,
            value,
            expected,
        }
    }
}

pub type Result<T> = std::result::Result<T, ModelError>;
