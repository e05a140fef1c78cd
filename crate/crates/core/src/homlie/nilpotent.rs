use super::algebra::HomLieAlgebra;
use super::matrix::{Matrix, Vector};
use super::morphism::HomLieMorphism;
use crate::error::Result;

/// The eventual kernel of `alpha`, the quotient by it and the projection.
#[derive(Clone, Debug)]
pub struct NilpotentKernel {
    pub kernel: Vec<Vector>,
    pub quotient: HomLieAlgebra,
    pub projection: HomLieMorphism,
}

/// `ker(alpha^dim)`. The quotient is spanned by the images of the basis
/// vectors not used to complete a kernel basis; it keeps their names.
pub fn nilpotent_kernel(g: &HomLieAlgebra) -> Result<NilpotentKernel> {
    let n = g.dim();
    let kernel = g.alpha_matrix().pow(n as u32).kernel();
    let mut columns = kernel.clone();
    let mut complement = Vec::new();
    for j in 0..n {
        let mut trial = columns.clone();
        trial.push(g.basis_vector(j));
        if Matrix::from_columns(&trial, n).rank() == trial.len() {
            columns = trial;
            complement.push(j);
        }
    }
    let change = Matrix::from_columns(&columns, n)
        .inverse()
        .expect("kernel basis completed to a basis");
    let k = kernel.len();
    let q = n - k;
    let proj = Matrix::from_rows((k..n).map(|r| change.row(r)).collect());
    let proj = if q == 0 { Matrix::zeros(0, n) } else { proj };
    let table: Vec<Vec<Vector>> = complement
        .iter()
        .map(|&a| {
            complement
                .iter()
                .map(|&b| proj.apply(g.bracket_basis(a, b)))
                .collect()
        })
        .collect();
    let alpha_cols: Vec<Vector> = complement
        .iter()
        .map(|&a| proj.apply(&g.alpha(&g.basis_vector(a))))
        .collect();
    let alpha = Matrix::from_columns(&alpha_cols, q);
    let names = complement
        .iter()
        .map(|&a| g.basis_names()[a].clone())
        .collect();
    let quotient = HomLieAlgebra::from_parts(format!("{}/ker", g.name()), names, table, alpha);
    let projection = HomLieMorphism::new(g.clone(), quotient.clone(), proj)?;
    Ok(NilpotentKernel {
        kernel,
        quotient,
        projection,
    })
}
