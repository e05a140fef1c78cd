//! The free Hom-associative algebra on one generator, `T/I`: structure maps,
//! the graded equality oracle, k-weighted products and series realizations.

pub mod classes;
pub mod expr;
pub mod ops;
pub mod products;

pub use classes::{rewrites, ClassCertificate, ClassContext, ClassKey, FreeHom, QuotientEquality};
pub use expr::{format_poly, format_tensor, parse_poly};
pub use products::{
    counterexample_tree, exp_series, left_fern, nary_product, realize_series, right_fern,
    u_element, u_trees, weighted_by_depth,
};
