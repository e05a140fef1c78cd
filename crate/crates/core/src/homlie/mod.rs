//! Finite-dimensional Hom-Lie algebras given by structure constants.

pub mod algebra;
pub mod fixtures;
pub mod matrix;
pub mod morphism;
pub mod nilpotent;

pub use algebra::{HomLieAlgebra, Law, Violation};
pub use matrix::{Matrix, Vector};
pub use morphism::{HomLieMorphism, MorphismLaw, MorphismViolation};
pub use nilpotent::{nilpotent_kernel, NilpotentKernel};
