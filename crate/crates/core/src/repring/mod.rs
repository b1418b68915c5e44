//! The representation ring `R(G)` as class-function arithmetic.
//!
//! Virtual modules are never built as modules: each is stored by its
//! character, which determines it. Identities that live in localizations
//! `R(H)_g` are checked on trace values instead.

mod character;
mod class_function;
mod table;
mod theta;

pub use character::{dual_group, LinearCharacter, Turn};
pub use class_function::ClassFunction;
pub use table::{CharacterTable, Decomposition};
pub use theta::{artin_recover, localized_division, theta, theta_direct, theta_recursive};
