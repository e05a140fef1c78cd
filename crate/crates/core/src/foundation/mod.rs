//! Exact scalars, sparse linear combinations, truncated series and the row
//! reduction behind every equality test.

pub mod lincomb;
pub mod rational;
pub mod rowspace;
pub mod series;

pub use lincomb::LinComb;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use rowspace::{Certificate, Membership, RowSpace};
pub use series::{Coefficient, TruncSeries};
