use anyhow::Result;
use credsave_core::dynamics::DEFAULT_GRID_N;
use credsave_core::steady_states;

use crate::args::SteadyArgs;
use crate::config::{pick, Economy, FileConfig};
use crate::output::{emit, json_bytes};

pub fn run(args: &SteadyArgs, file: &FileConfig) -> Result<()> {
    let params = Economy::resolve(&args.economy, file).params()?;
    let grid_n = pick(args.grid_n, file.grid_n, DEFAULT_GRID_N);
    let out = args.out.as_deref().or(file.out.as_deref());
    let report = steady_states(&params, grid_n)?;
    emit(out, &json_bytes(&report)?)
}
