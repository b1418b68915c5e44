//! Strata of a finite group action and their ramification modules.
//!
//! A stratum `Z` is a connected component of some fixed locus `X^g`, with
//! pointwise stabilizer `G_Z`. Only points, curves and whole components of
//! `X` occur, so every cohomology class on `Z` has a degree-0 and at most a
//! degree-2 part, and the latter is a number.

mod closed_forms;
mod graded;
mod local;
mod stratum;

pub use closed_forms::{curve_euler, gamma_curve, gamma_cyclic, gamma_point};
pub use graded::GradedClassValue;
pub use local::{
    ch_and_todd, ch_lambda, compute_hz, gamma, gamma_ambient, k_set, local_term, local_terms,
    tau, theta_z,
};
pub use stratum::{NormalEigen, SheafEigen, Stratum, StratumDim};
