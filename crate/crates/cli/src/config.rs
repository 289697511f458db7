//! Optional TOML configuration merged underneath the command-line flags.

use std::fmt;
use std::path::{Path, PathBuf};

use credsave_core::{CobbDouglas, EconomyParams};
use serde::Deserialize;

use crate::args::{EconomyArgs, Format, SweepParam};

/// Malformed or unreadable configuration.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Every key a config file may set. Keys are the long flag names, with
/// dashes or underscores.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub lambda: Option<f64>,
    pub r: Option<f64>,
    pub alpha: Option<f64>,
    pub a: Option<f64>,
    pub beta: Option<f64>,
    pub w0: Option<f64>,
    pub t: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    #[serde(alias = "out_dir")]
    pub out_dir: Option<PathBuf>,
    pub points: Option<usize>,
    #[serde(alias = "grid_n")]
    pub grid_n: Option<usize>,
    pub seed: Option<u64>,
    pub sigma: Option<f64>,
    pub n: Option<usize>,
    #[serde(alias = "lambda_drift")]
    pub lambda_drift: Option<f64>,
    #[serde(alias = "lambda_noise")]
    pub lambda_noise: Option<f64>,
    pub input: Option<PathBuf>,
    pub param: Option<SweepParam>,
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub steps: Option<usize>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| {
            let msg = e.message().to_string();
            let at = e
                .span()
                .map(|s| format!(" at byte {}", s.start))
                .unwrap_or_default();
            ConfigError(format!("{}{at}: {msg}", path.display()))
        })
    }
}

/// Flag value, else config value, else default.
pub fn pick<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

pub const DEFAULT_LAMBDA: f64 = 0.5;
pub const DEFAULT_R: f64 = 2.0;
pub const DEFAULT_ALPHA: f64 = 0.33;
pub const DEFAULT_TFP: f64 = 1.0;

/// Resolved economy settings before validation.
#[derive(Debug, Clone, Copy)]
pub struct Economy {
    pub lambda: f64,
    pub r: f64,
    pub alpha: f64,
    pub tfp: f64,
}

impl Economy {
    pub fn resolve(args: &EconomyArgs, file: &FileConfig) -> Self {
        Economy {
            lambda: pick(args.lambda, file.lambda, DEFAULT_LAMBDA),
            r: pick(args.r, file.r, DEFAULT_R),
            alpha: pick(args.alpha, file.alpha, DEFAULT_ALPHA),
            tfp: pick(args.a, file.a, DEFAULT_TFP),
        }
    }

    pub fn params(&self) -> credsave_core::Result<EconomyParams> {
        let production = CobbDouglas::new(self.tfp, self.alpha)?;
        EconomyParams::new(self.lambda, self.r, production)
    }
}
