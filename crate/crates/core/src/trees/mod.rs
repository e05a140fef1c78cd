//! Planar binary trees with leaf weights, grafting, restriction, the
//! s-signature grading and the text codec.

pub mod codec;
pub mod enumerate;
pub mod shape;
pub mod weighted;

pub use codec::{parse_basis, parse_raw_expression, parse_tree, RawBasis};
pub use enumerate::{enumerate_class, enumerate_weighted};
pub use shape::Shape;
pub use weighted::{Basis, SSignature, WeightedTree};
