use crate::error::{Error, Result};
use crate::homlie::{HomLieMorphism, Matrix};
use crate::hopf::Poly;
use crate::trees::Basis;

use super::absorb::expand_leaves;

/// `U(psi)`: applies a Hom-Lie morphism to every decoration.
#[derive(Clone, Debug)]
pub struct UMap {
    matrix: Matrix,
}

impl UMap {
    pub fn new(m: &HomLieMorphism) -> Result<UMap> {
        m.validate()
            .map_err(|v| Error::MorphismInvalid(m.describe(&v)))?;
        Ok(UMap {
            matrix: m.matrix().clone(),
        })
    }

    /// Expects zero-weight trees.
    pub fn apply(&self, p: &Poly) -> Poly {
        p.map_linear(|b| match b {
            Basis::Unit => Poly::basis(Basis::Unit),
            Basis::Tree(t) => {
                let leaves: Vec<_> = t
                    .decorations()
                    .expect("decorated")
                    .iter()
                    .map(|&d| self.matrix.column(d as usize))
                    .collect();
                expand_leaves(t.shape(), &leaves)
            }
        })
    }
}
