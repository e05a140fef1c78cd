use std::fmt;

use super::algebra::HomLieAlgebra;
use super::matrix::{add_scaled, is_zero_vector, Matrix, Vector};
use crate::error::{Error, Result};
use crate::foundation::rat;

/// Linear map between Hom-Lie algebras; `matrix` is `target.dim() x source.dim()`.
#[derive(Clone, Debug)]
pub struct HomLieMorphism {
    source: HomLieAlgebra,
    target: HomLieAlgebra,
    matrix: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismLaw {
    Bracket,
    Alpha,
}

impl fmt::Display for MorphismLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismLaw::Bracket => "bracket compatibility",
            MorphismLaw::Alpha => "alpha compatibility",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismViolation {
    pub law: MorphismLaw,
    pub witness: Vec<usize>,
    pub residual: Vector,
}

impl HomLieMorphism {
    pub fn new(source: HomLieAlgebra, target: HomLieAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::MorphismInvalid(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(HomLieMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &HomLieAlgebra) -> Self {
        HomLieMorphism {
            source: g.clone(),
            target: g.clone(),
            matrix: Matrix::identity(g.dim()),
        }
    }

    pub fn zero(source: &HomLieAlgebra, target: &HomLieAlgebra) -> Self {
        HomLieMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &HomLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &HomLieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[crate::foundation::Rational]) -> Vector {
        self.matrix.apply(x)
    }

    /// Checks `psi[x,y] = [psi x, psi y]` and `psi alpha = alpha' psi` on the basis.
    pub fn validate(&self) -> std::result::Result<(), MorphismViolation> {
        let n = self.source.dim();
        let images: Vec<Vector> = (0..n).map(|i| self.matrix.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let mut d = self.apply(self.source.bracket_basis(i, j));
                add_scaled(
                    &mut d,
                    &self.target.bracket(&images[i], &images[j]),
                    &rat(-1),
                );
                if !is_zero_vector(&d) {
                    return Err(MorphismViolation {
                        law: MorphismLaw::Bracket,
                        witness: vec![i, j],
                        residual: d,
                    });
                }
            }
        }
        for (i, image) in images.iter().enumerate() {
            let mut d = self.apply(&self.source.alpha(&self.source.basis_vector(i)));
            add_scaled(&mut d, &self.target.alpha(image), &rat(-1));
            if !is_zero_vector(&d) {
                return Err(MorphismViolation {
                    law: MorphismLaw::Alpha,
                    witness: vec![i],
                    residual: d,
                });
            }
        }
        Ok(())
    }

    pub fn describe(&self, v: &MorphismViolation) -> String {
        let names = self.source.basis_names();
        let w: Vec<&str> = v.witness.iter().map(|&i| names[i].as_str()).collect();
        format!(
            "{} fails on ({}), residual {}",
            v.law,
            w.join(", "),
            self.target.format_element(&v.residual)
        )
    }
}
