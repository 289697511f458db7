use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(
    name = "credsave",
    version,
    about = "Saving rates under credit constraints: simulation, steady states, figure data and synthetic panels"
)]
pub struct Cli {
    /// TOML file whose keys are long flag names; flags given on the command line win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate the closed-economy equilibrium sequence from an initial wage.
    Simulate(SimulateArgs),
    /// Write plot-ready data for the rent, saving and entrepreneur-fraction figures.
    Figures(FiguresArgs),
    /// Enumerate interior steady states and check the uniqueness criterion.
    Steady(SteadyArgs),
    /// Generate a synthetic panel and estimate the fixed-effects specifications.
    Panel(PanelArgs),
    /// Steady states over a grid of pledgeability or project-yield values.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParam {
    Lambda,
    R,
}

#[derive(Debug, Clone, Default, Args)]
pub struct EconomyArgs {
    /// Pledgeability λ in (0, 1) [default: 0.5]
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Project yield R [default: 2]
    #[arg(long)]
    pub r: Option<f64>,
    /// Capital share α of the Cobb–Douglas technology [default: 0.33]
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Total factor productivity A [default: 1]
    #[arg(long)]
    pub a: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub economy: EconomyArgs,
    /// Initial wage in (0, 2) [default: 0.1]
    #[arg(long)]
    pub w0: Option<f64>,
    /// Number of periods after t = 0 [default: 100]
    #[arg(long)]
    pub t: Option<usize>,
    /// Output format [default: csv]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FiguresArgs {
    /// Directory receiving one CSV per figure panel [default: .]
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Grid points per λ series [default: 1000]
    #[arg(long)]
    pub points: Option<usize>,
    /// Discount factor of the generalized-model figures [default: 0.7]
    #[arg(long)]
    pub beta: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SteadyArgs {
    #[command(flatten)]
    pub economy: EconomyArgs,
    /// Sign-scan resolution, at least 1000 [default: 10000]
    #[arg(long)]
    pub grid_n: Option<usize>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct PanelArgs {
    /// RNG seed [default: 42]
    #[arg(long)]
    pub seed: Option<u64>,
    /// Standard deviation of log TFP shocks [default: 0.01]
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Number of countries [default: 60]
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of simulated periods [default: 40]
    #[arg(long)]
    pub t: Option<usize>,
    /// Largest per-period drift of ln λ [default: 0.002]
    #[arg(long)]
    pub lambda_drift: Option<f64>,
    /// Standard deviation of ln λ noise [default: sigma]
    #[arg(long)]
    pub lambda_noise: Option<f64>,
    /// Capital share α [default: 0.33]
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Total factor productivity A [default: 1]
    #[arg(long)]
    pub a: Option<f64>,
    /// Re-estimate from an existing panel CSV instead of generating one.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Directory receiving panel.csv and estimates.json [default: .]
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub economy: EconomyArgs,
    /// Parameter to vary [default: lambda]
    #[arg(long, value_enum)]
    pub param: Option<SweepParam>,
    /// First grid value [default: 0.1 for lambda, 0.5 for r]
    #[arg(long)]
    pub from: Option<f64>,
    /// Last grid value [default: 0.9 for lambda, 10 for r]
    #[arg(long)]
    pub to: Option<f64>,
    /// Number of grid values, endpoints included [default: 9]
    #[arg(long)]
    pub steps: Option<usize>,
    /// Sign-scan resolution per economy [default: 10000]
    #[arg(long)]
    pub grid_n: Option<usize>,
    /// Output format [default: csv]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
