use anyhow::Result;
use credsave_core::simulate;

use crate::args::{Format, SimulateArgs};
use crate::config::{pick, Economy, FileConfig};
use crate::output::{emit, Cell, Table};

pub const HEADER: [&str; 8] = ["t", "w", "k", "y", "phi", "s_b", "s", "pi"];

pub fn run(args: &SimulateArgs, file: &FileConfig) -> Result<()> {
    let params = Economy::resolve(&args.economy, file).params()?;
    let w0 = pick(args.w0, file.w0, 0.1);
    let horizon = pick(args.t, file.t, 100);
    let format = pick(args.format, file.format, Format::Csv);
    let out = args.out.as_deref().or(file.out.as_deref());

    let trajectory = simulate(w0, horizon, &params)?;
    let mut table = Table::new(HEADER.to_vec());
    for (t, st) in trajectory.states.iter().enumerate() {
        table.push(vec![
            Cell::from(t),
            st.wage.into(),
            st.capital.into(),
            st.output.into(),
            st.rent.into(),
            st.entrepreneur_saving.into(),
            st.saving_rate.into(),
            st.fraction.into(),
        ]);
    }
    emit(out, &table.render(format)?)
}
