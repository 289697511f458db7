use anyhow::Result;
use credsave_core::dynamics::{steady_states_many, DEFAULT_GRID_N};
use credsave_core::EconomyParams;

use crate::args::{Format, SweepArgs, SweepParam};
use crate::config::{pick, ConfigError, Economy, FileConfig};
use crate::output::{emit, Cell, Table};

pub const HEADER: [&str; 12] = [
    "lambda",
    "r",
    "n_roots",
    "root",
    "w",
    "k",
    "y",
    "s",
    "pi",
    "map_slope",
    "stable",
    "unique",
];

/// `steps` evenly spaced values from `from` to `to`, both included.
fn grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![from];
    }
    (0..steps)
        .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
        .collect()
}

pub fn run(args: &SweepArgs, file: &FileConfig) -> Result<()> {
    let base = Economy::resolve(&args.economy, file);
    let param = pick(args.param, file.param, SweepParam::Lambda);
    let (default_from, default_to) = match param {
        SweepParam::Lambda => (0.1, 0.9),
        SweepParam::R => (0.5, 10.0),
    };
    let from = pick(args.from, file.from, default_from);
    let to = pick(args.to, file.to, default_to);
    let steps = pick(args.steps, file.steps, 9);
    if steps == 0 {
        return Err(ConfigError("steps must be at least 1".into()).into());
    }
    let grid_n = pick(args.grid_n, file.grid_n, DEFAULT_GRID_N);
    let format = pick(args.format, file.format, Format::Csv);
    let out = args.out.as_deref().or(file.out.as_deref());

    let params = grid(from, to, steps)
        .into_iter()
        .map(|v| {
            let mut eco = base;
            match param {
                SweepParam::Lambda => eco.lambda = v,
                SweepParam::R => eco.r = v,
            }
            eco.params()
        })
        .collect::<credsave_core::Result<Vec<EconomyParams>>>()?;
    let reports = steady_states_many(&params, grid_n);

    let mut table = Table::new(HEADER.to_vec());
    for (p, report) in params.iter().zip(reports) {
        let report = report?;
        let n = report.interior.len();
        if n == 0 {
            let mut row = vec![
                p.lambda().into(),
                p.project_yield().into(),
                Cell::from(0usize),
            ];
            row.extend(std::iter::repeat_n(Cell::Empty, 8));
            row.push(report.unique.into());
            table.push(row);
        }
        for (i, ss) in report.interior.iter().enumerate() {
            table.push(vec![
                p.lambda().into(),
                p.project_yield().into(),
                Cell::from(n),
                Cell::from(i),
                ss.wage.into(),
                ss.capital.into(),
                ss.output.into(),
                ss.saving_rate.into(),
                ss.fraction.into(),
                ss.map_slope.into(),
                ss.stable.into(),
                report.unique.into(),
            ]);
        }
    }
    emit(out, &table.render(format)?)
}
