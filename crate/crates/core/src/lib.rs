//! Credit-constrained overlapping-generations model of national saving.
//!
//! Agents live two periods and either lend their savings or borrow to run an
//! entrepreneurial project, subject to a pledgeability constraint. The crate
//! provides the static equilibrium in closed form, the wage dynamics and
//! their steady states, a generalization with time discounting and a minimum
//! investment size, and the bridge from the model to panel regressions of
//! saving-rate growth on income growth.

pub mod dynamics;
pub mod equilibrium;
pub mod error;
pub mod extended;
pub mod fmt;
pub mod panel;
pub mod production;
pub mod roots;

pub use dynamics::{
    open_economy_step, simulate, steady_states, step, Convergence, SteadyState, SteadyStateReport,
    Trajectory,
};
pub use equilibrium::{
    clearing_residual, entrepreneur_fraction, entrepreneur_saving_rate, national_saving_rate,
    optimal_entrepreneur_saving, psi, rent, saving_elasticity_lambda, saving_elasticity_w,
    EconomyParams, EntrepreneurChoice, EquilibriumState,
};
pub use error::{ModelError, Result};
pub use extended::{extended_equilibrium, rent_extended, ExtendedEquilibrium};
pub use panel::{PanelObservation, SyntheticWorld, WorldBuilder};
pub use production::{CobbDouglas, Production};
