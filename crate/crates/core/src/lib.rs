//! Mod-p cohomology of classifying spaces, the reduced power 𝒫¹, and an
//! obstruction engine deciding when a projection `G -> G/H` of Lie groups
//! is an A_k-map.

pub mod catalog;
pub mod error;
pub mod fp;
pub mod graded;
pub mod obstruction;
pub mod steenrod;

pub use error::{Error, Result};
pub use fp::{FpElement, Prime};
pub use graded::{GradedAlgebra, Monomial, Polynomial};
