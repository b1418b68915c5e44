//! Exact equivariant Euler characteristics for finite group actions on
//! compact complex curves and surfaces.
//!
//! Given a finite group `G` acting on `X` together with an equivariant
//! locally free sheaf `E`, the crate assembles the virtual `G`-module
//! `χ_G(X, E) = Σ (-1)^i [H^i(X, E)]` as
//!
//! ```text
//! χ_G(X, E) = χ(X, E)/|G| · C[G]  +  Σ_Z Γ(E)_Z
//! ```
//!
//! where `Z` runs over the connected components of the fixed loci and
//! `Γ(E)_Z` is the ramification module of `Z`. Everything is exact: class
//! function values live in cyclotomic fields with rational coordinates.
//!
//! Layout:
//!
//! * [`cyclotomic`] - arithmetic in `Q(ζ_N)`.
//! * [`group`] - finite groups given by Cayley tables, subgroups, classes.
//! * [`repring`] - class functions, linear characters, character tables,
//!   induction/restriction, the characteristic modules `θ_H`.
//! * [`ramification`] - strata, `H_Z`, `K_{Z,H}`, `θ_{Z,H}`, `τ_{Z,H}` and
//!   the ramification modules together with their closed forms.
//! * [`chevalley_weil`] - scenarios, the assembled `χ_G`, multiplicity
//!   reports, the holomorphic Lefschetz trace oracle and the `(Z/2)^n`
//!   surface formulas.
//! * [`io`] - the JSON scenario format, report rendering and the built-in
//!   example corpus.
//! * [`cli`] - the `compute` / `check` / `example` commands used by the
//!   `ramiq` binary.

pub mod chevalley_weil;
pub mod cli;
pub mod cyclotomic;
pub mod group;
pub mod io;
pub mod ramification;
pub mod repring;

mod error;

pub use chevalley_weil::{chi_g, Report, Scenario, SheafKind, SurfaceInvariants};
pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
pub use ramification::{GradedClassValue, Stratum, StratumDim};
pub use repring::{CharacterTable, ClassFunction, LinearCharacter};

/// Name of the environment variable that turns on the double-computation
/// cross-checks in release builds.
pub const DEBUG_ASSERT_ENV: &str = "RAMIQ_DEBUG_ASSERT";

/// Whether the redundant cross-checks (θ recursion against the direct
/// form, τ uniqueness, closed-form deltas) run on every call.
///
/// Always on in debug builds; in release builds set `RAMIQ_DEBUG_ASSERT=1`.
pub fn debug_checks_enabled() -> bool {
    cfg!(debug_assertions)
        || std::env::var(DEBUG_ASSERT_ENV)
            .map(|v| v == "1")
            .unwrap_or(false)
}
