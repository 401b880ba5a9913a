//! Exact rational solutions of systems constraining elementary symmetric
//! polynomials, built on genus-one curves and their group law.

pub mod ellcurve;
pub mod error;
pub mod par;
pub mod polyalg;
pub mod quartic;
pub mod rational;
pub mod systems;
pub mod verify;

pub use ellcurve::{CurvePoint, WeierstrassCurve};
pub use error::{Error, Result};
pub use quartic::{BirationalMap, ModelPoint, QuarticModel};
pub use rational::Rational;
pub use systems::{Solution, SolutionSet, SolveConfig, SymmetricSystem};
pub use verify::{check_solution, VerificationReport};
