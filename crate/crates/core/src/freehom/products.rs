//! k-weighted n-ary products, their series realizations, and the element `u`.

use crate::error::{Error, Result};
use crate::foundation::rational::exp_coefficient;
use crate::foundation::{rat, Rational, TruncSeries};
use crate::hopf::Poly;
use crate::trees::{parse_tree, Basis, Shape, WeightedTree};

/// `phi[k]`: leaf `i` gets weight `k - 1 - depth_i`.
pub fn weighted_by_depth(shape: &Shape, k: u32) -> Result<WeightedTree> {
    let depths = shape.depths();
    let weights = depths
        .iter()
        .map(|&d| {
            (k as i64 - 1 - d as i64).try_into().map_err(|_| {
                Error::Domain(format!(
                    "{k}-weighting needs depth at most {}",
                    k as i64 - 1
                ))
            })
        })
        .collect::<Result<Vec<u32>>>()?;
    WeightedTree::new(shape.clone(), weights, None)
}

/// `F_n^r`: successive graftings of a leaf on the right, `((| v |) v |) ...`.
pub fn right_fern(n: usize, k: u32) -> Result<WeightedTree> {
    weighted_by_depth(&Shape::left_comb(n), k)
}

/// `F_n^l`: successive graftings of a leaf on the left, `| v (| v ( ... ))`.
pub fn left_fern(n: usize, k: u32) -> Result<WeightedTree> {
    weighted_by_depth(&Shape::right_comb(n), k)
}

/// Representative of the k-weighted n-ary product: the tree `| v (| v ...)`
/// weighted by `k`. `n = 0` gives the unit.
pub fn nary_product(n: usize, k: u32) -> Result<Poly> {
    if n == 0 {
        return Ok(Poly::basis(Basis::Unit));
    }
    if n as u64 > k as u64 {
        return Err(Error::Domain(format!(
            "the {k}-weighted {n}-ary product needs n <= k"
        )));
    }
    Ok(Poly::basis(Basis::Tree(left_fern(n, k)?)))
}

/// `a_0 1 + sum_i a_i nu^i [e^i]_p` with `p` the order of `f`.
pub fn realize_series(f: &TruncSeries<Rational>) -> Result<TruncSeries<Poly>> {
    let p = f.order();
    let coeffs = (0..=p)
        .map(|i| Ok(nary_product(i, p as u32)?.scaled(f.coeff(i))))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::new(coeffs))
}

/// The realization of `exp(s nu)` at order `p`.
pub fn exp_series(s: &Rational, p: usize) -> TruncSeries<Poly> {
    let f = TruncSeries::new((0..=p).map(|i| exp_coefficient(s, i)).collect());
    realize_series(&f).expect("i <= p for every coefficient")
}

/// A zero-weight tree whose invertibility index is not 0: `(X X)` with
/// `X = ((| (| |)) (| |))`, ten leaves.
pub fn counterexample_tree() -> WeightedTree {
    parse_tree("(((0 (0 0)) (0 0)) ((0 (0 0)) (0 0)))").expect("literal")
}

/// The two trees whose difference defines `u`.
pub fn u_trees() -> (WeightedTree, WeightedTree) {
    (
        parse_tree("((0 1) (1 0))").expect("literal"),
        parse_tree("(1 ((0 0) 0))").expect("literal"),
    )
}

/// `u`, nonzero in `T/I` but killed by `alpha`.
pub fn u_element() -> Poly {
    let (a, b) = u_trees();
    let mut p = Poly::basis(Basis::Tree(a));
    p.add_term(Basis::Tree(b), rat(-1));
    p
}
