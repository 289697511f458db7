use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use credsave_core::panel::{
    generate_panel, read_panel_csv, sign_report, write_panel_csv, SignReport, SyntheticWorld,
};
use credsave_core::{CobbDouglas, WorldBuilder};
use serde::Serialize;

use crate::args::PanelArgs;
use crate::config::{pick, FileConfig, DEFAULT_ALPHA, DEFAULT_TFP};
use crate::output::{json_bytes, write_atomic};

pub const PANEL_FILE: &str = "panel.csv";
pub const ESTIMATES_FILE: &str = "estimates.json";

#[derive(Serialize)]
struct EstimatesDocument<'a> {
    /// `"generated"` or the input path.
    source: String,
    seed: Option<u64>,
    world: Option<&'a SyntheticWorld>,
    n_obs: usize,
    report: SignReport,
}

pub fn run(args: &PanelArgs, file: &FileConfig) -> Result<()> {
    let out_dir: PathBuf = args
        .out_dir
        .clone()
        .or_else(|| file.out_dir.clone())
        .unwrap_or_else(|| ".".into());
    let alpha = pick(args.alpha, file.alpha, DEFAULT_ALPHA);
    let tfp = pick(args.a, file.a, DEFAULT_TFP);
    let production = CobbDouglas::new(tfp, alpha)?;

    let input = args.input.as_deref().or(file.input.as_deref());
    let (csv_bytes, seed, world) = match input {
        Some(path) => {
            let reader = BufReader::new(
                File::open(path).with_context(|| format!("opening {}", path.display()))?,
            );
            let panel = read_panel_csv(reader)?;
            let mut bytes = Vec::new();
            write_panel_csv(&panel, &mut bytes)?;
            (bytes, None, None)
        }
        None => {
            let defaults = WorldBuilder::default();
            let seed = pick(args.seed, file.seed, 42);
            let builder = WorldBuilder {
                n_countries: pick(args.n, file.n, defaults.n_countries),
                horizon: pick(args.t, file.t, defaults.horizon),
                sigma: pick(args.sigma, file.sigma, defaults.sigma),
                lambda_noise: args.lambda_noise.or(file.lambda_noise),
                max_lambda_drift: pick(
                    args.lambda_drift,
                    file.lambda_drift,
                    defaults.max_lambda_drift,
                ),
                alpha,
                tfp,
                ..defaults
            };
            let world = builder.build(seed)?;
            let panel = generate_panel(&world, seed)?;
            let mut bytes = Vec::new();
            write_panel_csv(&panel, &mut bytes)?;
            write_atomic(&out_dir.join(PANEL_FILE), &bytes)?;
            (bytes, Some(seed), Some(world))
        }
    };

    // Estimated from the CSV bytes, exactly as an `--input` run reads them.
    let panel = read_panel_csv(csv_bytes.as_slice())?;
    let report = sign_report(&panel, &production)?;
    let doc = EstimatesDocument {
        source: input.map_or_else(|| "generated".to_string(), display),
        seed,
        world: world.as_ref(),
        n_obs: panel.len(),
        report,
    };
    write_atomic(&out_dir.join(ESTIMATES_FILE), &json_bytes(&doc)?)
}

fn display(p: &Path) -> String {
    p.display().to_string()
}
