use std::path::Path;

use anyhow::Result;
use credsave_core::extended::{extended_equilibrium_at, plateau_threshold};
use credsave_core::{entrepreneur_fraction, entrepreneur_saving_rate, national_saving_rate, rent};

use crate::args::FiguresArgs;
use crate::config::{pick, ConfigError, FileConfig};
use crate::output::{write_atomic, Cell, Table};

pub const LAMBDAS: [f64; 3] = [0.3, 0.5, 0.7];
/// Distance kept from the ends of every open wage interval.
pub const MARGIN: f64 = 1e-6;
/// The generalized-model grid extends this far past the loosest plateau onset.
const EXTENDED_SPAN: f64 = 1.25;

/// File names and the quantity each one holds.
pub const FILES: [&str; 6] = [
    "rent.csv",
    "entrepreneur_saving.csv",
    "saving_rate.csv",
    "fraction.csv",
    "extended_saving_rate.csv",
    "extended_fraction.csv",
];

/// `n` points spread evenly over `[lo + MARGIN, hi - MARGIN]`.
pub fn open_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo + MARGIN, hi - MARGIN);
    if n == 1 {
        return vec![0.5 * (a + b)];
    }
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

fn series(
    ws: &[f64],
    f: impl Fn(f64, f64) -> credsave_core::Result<f64>,
    lambdas: &[f64],
) -> Result<Table> {
    let mut table = Table::new(vec!["w", "value", "lambda"]);
    for &lambda in lambdas {
        for &w in ws {
            table.push(vec![
                Cell::from(w),
                f(w, lambda)?.into(),
                Cell::from(lambda),
            ]);
        }
    }
    Ok(table)
}

pub fn run(args: &FiguresArgs, file: &FileConfig) -> Result<()> {
    let out_dir = args
        .out_dir
        .clone()
        .or_else(|| file.out_dir.clone())
        .unwrap_or_else(|| ".".into());
    let points = pick(args.points, file.points, 1000);
    let beta = pick(args.beta, file.beta, 0.7);
    if points < 2 {
        return Err(ConfigError("points must be at least 2".into()).into());
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(ConfigError(format!("beta must be finite and > 0, got {beta}")).into());
    }

    let ws = open_grid(0.0, 2.0, points);
    let x_max = EXTENDED_SPAN * plateau_threshold(LAMBDAS[0], beta);
    let xs = open_grid(0.0, x_max, points);
    let extended = |x: f64, lambda: f64| extended_equilibrium_at(x, 1.0, lambda, beta);

    let tables = [
        series(&ws, rent, &LAMBDAS)?,
        series(&ws, entrepreneur_saving_rate, &LAMBDAS)?,
        series(&ws, national_saving_rate, &LAMBDAS)?,
        series(&ws, entrepreneur_fraction, &LAMBDAS)?,
        series(&xs, |x, l| extended(x, l).map(|e| e.saving_rate), &LAMBDAS)?,
        series(&xs, |x, l| extended(x, l).map(|e| e.fraction), &LAMBDAS)?,
    ];
    for (name, table) in FILES.iter().zip(&tables) {
        write_atomic(&Path::new(&out_dir).join(name), &table.to_csv()?)?;
    }
    Ok(())
}
