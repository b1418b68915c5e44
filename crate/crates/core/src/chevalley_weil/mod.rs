//! The equivariant Euler characteristic `χ_G(X, E)` assembled from
//! ramification modules, with its audits: the holomorphic Lefschetz trace
//! table, the stratum-by-stratum multiplicity formula and the `(Z/2)^n`
//! surface closed forms.

mod audit;
mod engine;
mod lefschetz;
mod scenario;
mod surface;

#[cfg(test)]
mod tests;

pub use crate::ramification::curve_euler;
pub use audit::{closed_form_deltas, ClosedFormDelta};
pub use engine::{
    chi_g, equivariant_euler, lefschetz_trace_check, multiplicities_by_stratum, Report, TraceRow,
};
pub use lefschetz::lefschetz_rhs;
pub use scenario::{CurveNumbers, Scenario, SheafKind, SurfaceInvariants};
pub use surface::{
    canonical_power_closed_form, cotangent_closed_form, preset_closed_form, z2n_surface,
    z2n_unique_hz,
};
