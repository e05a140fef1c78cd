use crate::error::Result;
use crate::foundation::rational::exp_coefficient;
use crate::foundation::{Rational, RowSpace, TruncSeries};
use crate::freehom::{exp_series, left_fern};
use crate::homlie::{HomLieMorphism, Vector};
use crate::hopf::{HomHopf, Poly};
use crate::trees::Basis;
use crate::ueg::{UEnvelope, UMap};

use super::sequence::GroupLikeSequence;

/// `exp(s)` in the one-generator algebra, orders `0..=cap`. The bound is 0.
pub fn exp_sequence(s: &Rational, cap: usize) -> GroupLikeSequence {
    GroupLikeSequence::new((0..=cap).map(|p| exp_series(s, p)).collect(), 0)
}

/// `[x^i]_p`: the k-weighted product with every leaf carrying `x`.
fn power_u(env: &UEnvelope, x: &Vector, i: usize, p: usize) -> Poly {
    if i == 0 {
        return Poly::basis(Basis::Unit);
    }
    let t = left_fern(i, p as u32).expect("i <= p");
    env.decorated(t.shape(), t.weights(), &vec![x.clone(); i])
}

/// `exp_p(s x)` in the enveloping algebra.
pub fn exp_u(env: &UEnvelope, x: &Vector, s: &Rational, p: usize) -> TruncSeries<Poly> {
    TruncSeries::new(
        (0..=p)
            .map(|i| power_u(env, x, i, p).scaled(&exp_coefficient(s, i)))
            .collect(),
    )
}

pub fn exp_sequence_u(env: &UEnvelope, x: &Vector, s: &Rational, cap: usize) -> GroupLikeSequence {
    GroupLikeSequence::new((0..=cap).map(|p| exp_u(env, x, s, p)).collect(), 0)
}

/// Whether `x -> s leaf(x)` is injective on the basis, judged by the ranks of
/// normal forms at the default level. `Ok(false)` can only come from a proven
/// linear relation.
pub fn exp_injectivity_check(env: &UEnvelope, s: &Rational) -> Result<bool> {
    let g = env.algebra();
    let level = 2;
    let images = (0..g.dim())
        .map(|i| {
            let e = exp_u(env, &g.basis_vector(i), s, 1);
            env.normal_form_at(e.coeff(1), level)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RowSpace::reduce(images).rank() == g.dim())
}

/// For every basis vector `e`: `U(m)(exp(s e)) = exp(s m(e))`, termwise up to
/// `cap`. Returns the first basis index where the square fails.
pub fn naturality_square(
    m: &HomLieMorphism,
    s: &Rational,
    cap: usize,
) -> Result<std::result::Result<(), usize>> {
    let map = UMap::new(m)?;
    let src = UEnvelope::new(m.source().clone());
    let dst = UEnvelope::new(m.target().clone());
    for i in 0..m.source().dim() {
        let x = m.source().basis_vector(i);
        let y = m.apply(&x);
        for p in 0..=cap {
            let lhs = exp_u(&src, &x, s, p).map(|c| map.apply(c));
            let rhs = exp_u(&dst, &y, s, p);
            for (a, b) in lhs.coeffs().iter().zip(rhs.coeffs()) {
                if !dst.equal(a, b)?.is_pass() {
                    return Ok(Err(i));
                }
            }
        }
    }
    Ok(Ok(()))
}
