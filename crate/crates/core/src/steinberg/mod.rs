//! Steinberg Lie algebras `st_n(R)`, built inside the universal central
//! extension of `sl_n(R)`, and the explicit cocycle that extends them
//! centrally for `n ∈ {3, 4}`.

mod formulas;
mod hat;
mod lifts;
mod model;
mod nu;
mod partition;
mod psi;

pub use formulas::bracket_formula_suite;
pub use hat::{build_hat, HatAlgebra};
pub use lifts::{
    check_recentered, greatest_other, least_other, lift_generators, lift_generators_with, recenter, Carry, LiftFamily,
};
pub use model::{build_st, offending_span, SteinbergModel};
pub use nu::nu_relation_suite;
pub use partition::{orbit, sign, CosetPartition, Quad};
pub use psi::{build_psi, Cocycle};

#[cfg(test)]
mod tests;
