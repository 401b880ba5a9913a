//! Univariate polynomials over the rationals, elementary symmetric
//! polynomials, quartic invariants and randomized identity checks.

mod identity;
mod invariants;
mod symmetric;
mod unipoly;

pub use identity::{identity_check, sample_height};
pub use invariants::{quartic_discriminant, quartic_invariants};
pub use symmetric::{elem_sym, elem_sym_all, sigma_expand3, SigmaVector};
pub use unipoly::{quadratic_roots, UniPoly};
