mod figures;
mod panel;
mod simulate;
mod steady;
mod sweep;

pub use figures::run as figures;
pub use panel::run as panel;
pub use simulate::run as simulate;
pub use steady::run as steady;
pub use sweep::run as sweep;
