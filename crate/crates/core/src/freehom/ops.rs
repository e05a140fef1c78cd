//! Structure maps of the free vector space on trees, before any quotient.

use crate::foundation::{rat, Rational};
use crate::hopf::{Poly, Tensor};
use crate::trees::Basis;

pub fn graft(a: &Basis, b: &Basis) -> Basis {
    a.graft(b)
        .expect("operands of one algebra are either all decorated or all plain")
}

/// `S`: `(-1)^n` times the mirror image.
pub fn antipode(a: &Basis) -> Poly {
    let sign = if a.leaf_count().is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    };
    Poly::term(a.mirror(), sign)
}

/// Sum over leaf subsets `I` of `phi_I (x) phi_{I^c}`.
pub fn coproduct(a: &Basis) -> Tensor {
    let Basis::Tree(t) = a else {
        return Tensor::basis((Basis::Unit, Basis::Unit));
    };
    let n = t.leaf_count();
    assert!(n < 64, "coproduct of a tree with {n} leaves");
    let mut out = Tensor::zero();
    let mut keep = vec![false; n];
    let mut rest = vec![false; n];
    for mask in 0u64..(1u64 << n) {
        for i in 0..n {
            keep[i] = mask >> i & 1 == 1;
            rest[i] = !keep[i];
        }
        out.add_term(
            (t.restrict(&keep), t.restrict(&rest)),
            Rational::from_integer(1.into()),
        );
    }
    out
}

pub fn counit(p: &Poly) -> Rational {
    p.coeff(&Basis::Unit)
}

/// `alpha^k` on the free space.
pub fn alpha(p: &Poly, k: u32) -> Poly {
    p.map_keys(|b| b.alpha(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_basis;

    fn b(s: &str) -> Basis {
        parse_basis(s).unwrap()
    }

    #[test]
    fn coproduct_of_leaf_and_unit() {
        let d = coproduct(&b("|3"));
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&(b("|3"), Basis::Unit)), rat(1));
        assert_eq!(d.coeff(&(Basis::Unit, b("|3"))), rat(1));
        assert_eq!(
            coproduct(&Basis::Unit),
            Tensor::basis((Basis::Unit, Basis::Unit))
        );
    }

    #[test]
    fn coproduct_of_cherry() {
        let d = coproduct(&b("(0 0)"));
        assert_eq!(d.coeff(&(b("(0 0)"), Basis::Unit)), rat(1));
        assert_eq!(d.coeff(&(Basis::Unit, b("(0 0)"))), rat(1));
        assert_eq!(d.coeff(&(b("|1"), b("|1"))), rat(2));
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&b("|4")), Poly::term(b("|4"), rat(-1)));
        let t = b("(((2 4) 0) (3 2))");
        assert_eq!(antipode(&t), Poly::term(b("((2 3) (0 (4 2)))"), rat(-1)));
        assert_eq!(antipode(&Basis::Unit), Poly::basis(Basis::Unit));
    }

    #[test]
    fn counit_linear() {
        let p: Poly = [(Basis::Unit, rat(3)), (b("|0"), rat(-2))]
            .into_iter()
            .collect();
        assert_eq!(counit(&p), rat(3));
    }
}
