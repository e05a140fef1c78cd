//! Small algebras used by tests, the verification suites and the CLI.

use super::algebra::HomLieAlgebra;
use super::matrix::{unit_vector, zero_vector, Matrix};
use crate::foundation::{rat, ratio, Rational};

fn vec_of(entries: &[(usize, Rational)], n: usize) -> Vec<Rational> {
    let mut v = zero_vector(n);
    for (i, c) in entries {
        v[*i] = c.clone();
    }
    v
}

/// `sl2` with basis `E, H, F`, `[H,E] = 2E`, `[H,F] = -2F`, `[E,F] = H`, `alpha = id`.
pub fn sl2() -> HomLieAlgebra {
    let b = [
        (0, 1, vec_of(&[(0, rat(-2))], 3)),
        (0, 2, unit_vector(3, 1)),
        (1, 2, vec_of(&[(2, rat(-2))], 3)),
    ];
    HomLieAlgebra::from_brackets("sl2", &["E", "H", "F"], &b, Matrix::identity(3))
        .expect("sl2 data")
}

/// The automorphism `E -> lambda E, H -> H, F -> F / lambda` of `sl2`.
pub fn sl2_diagonal(lambda: &Rational) -> Matrix {
    Matrix::diagonal(&[lambda.clone(), rat(1), rat(1) / lambda])
}

/// `sl2` twisted by the diagonal automorphism with `lambda = 2`.
pub fn sl2_twisted() -> HomLieAlgebra {
    sl2()
        .twist(sl2_diagonal(&rat(2)), "sl2 twisted")
        .expect("diagonal automorphism")
}

/// Two-dimensional nonabelian Lie algebra `[x, y] = y`.
pub fn nonabelian2() -> HomLieAlgebra {
    HomLieAlgebra::from_brackets(
        "aff1",
        &["x", "y"],
        &[(0, 1, unit_vector(2, 1))],
        Matrix::identity(2),
    )
    .expect("aff1 data")
}

/// Abelian algebra with basis `x0, x1, ...` and the given `alpha`.
pub fn abelian(alpha: Matrix) -> HomLieAlgebra {
    let names: Vec<String> = (0..alpha.rows()).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    HomLieAlgebra::from_brackets("abelian", &refs, &[], alpha).expect("abelian data")
}

/// One-dimensional algebra `x` with `alpha = a`.
pub fn line(a: Rational) -> HomLieAlgebra {
    HomLieAlgebra::from_brackets("line", &["x"], &[], Matrix::diagonal(&[a])).expect("line data")
}

/// Abelian three-dimensional algebra with a strictly upper triangular `alpha`.
pub fn abelian_nilpotent3() -> HomLieAlgebra {
    abelian(Matrix::from_rows(vec![
        vec![rat(0), rat(1), rat(0)],
        vec![rat(0), rat(0), rat(1)],
        vec![rat(0), rat(0), rat(0)],
    ]))
}

/// Twisted `sl2` plus a central `Z` with `alpha(Z) = 0`; the eventual kernel is `Z`.
pub fn sl2_twisted_with_center() -> HomLieAlgebra {
    let z = HomLieAlgebra::from_brackets("center", &["Z"], &[], Matrix::diagonal(&[rat(0)]))
        .expect("center data");
    sl2_twisted()
        .direct_sum(&z, "sl2 twisted + Z")
        .expect("disjoint names")
}

/// `(x, y)` with `[x, y] = y`, twisted by `diag(1, 1/2)`.
pub fn nonabelian2_twisted() -> HomLieAlgebra {
    nonabelian2()
        .twist(Matrix::diagonal(&[rat(1), ratio(1, 2)]), "aff1 twisted")
        .expect("diagonal endomorphism")
}
