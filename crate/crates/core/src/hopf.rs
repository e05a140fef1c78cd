//! Structure maps shared by the tree algebras, and everything that can be
//! written once in terms of them: convolution, primitivity, the invertibility
//! index.

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::foundation::{LinComb, Rational};
use crate::trees::Basis;

/// Element of a tree algebra: a linear combination of the unit and trees.
pub type Poly = LinComb<Basis>;

/// Element of the tensor square.
pub type Tensor = LinComb<(Basis, Basis)>;

/// Outcome of an oracle query. `Inconclusive` only arises from the
/// level-bounded oracle of the enveloping algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(String),
    Inconclusive(String),
}

impl Check {
    pub fn is_pass(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Check::Fail(_))
    }

    pub fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail(witness())
        }
    }

    /// Conjunction: a failure wins over an inconclusive answer.
    pub fn and(self, other: Check) -> Check {
        match (self, other) {
            (Check::Fail(a), _) => Check::Fail(a),
            (_, Check::Fail(b)) => Check::Fail(b),
            (Check::Inconclusive(a), _) => Check::Inconclusive(a),
            (_, Check::Inconclusive(b)) => Check::Inconclusive(b),
            _ => Check::Pass,
        }
    }

    pub fn context(self, what: &str) -> Check {
        match self {
            Check::Pass => Check::Pass,
            Check::Fail(w) => Check::Fail(format!("{what}: {w}")),
            Check::Inconclusive(w) => Check::Inconclusive(format!("{what}: {w}")),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Pass => f.write_str("pass"),
            Check::Fail(w) => write!(f, "fail ({w})"),
            Check::Inconclusive(w) => write!(f, "inconclusive ({w})"),
        }
    }
}

/// Result of the invertibility index search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexVerdict {
    /// Smallest `k` that works; every smaller value was refuted.
    Index(u32),
    /// `k` works, but some smaller value could not be decided.
    AtMost(u32),
    NotFoundUpTo(u32),
}

impl IndexVerdict {
    pub fn value(&self) -> Option<u32> {
        match self {
            IndexVerdict::Index(k) | IndexVerdict::AtMost(k) => Some(*k),
            IndexVerdict::NotFoundUpTo(_) => None,
        }
    }
}

impl fmt::Display for IndexVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexVerdict::Index(k) => write!(f, "index {k}"),
            IndexVerdict::AtMost(k) => write!(f, "index at most {k}"),
            IndexVerdict::NotFoundUpTo(k) => write!(f, "no index up to {k}"),
        }
    }
}

/// An (alpha, id)-Hom-Hopf algebra spanned by tree basis elements. Implementors
/// give the structure maps on basis elements and a zero test modulo their
/// ideal; linear extensions and derived operations are provided.
pub trait HomHopf: Sync {
    fn product_basis(&self, a: &Basis, b: &Basis) -> Poly;
    fn alpha_basis(&self, a: &Basis, k: u32) -> Poly;
    fn antipode_basis(&self, a: &Basis) -> Poly;
    fn coproduct_basis(&self, a: &Basis) -> Tensor;

    /// Decides (or semi-decides) whether `p` vanishes in the quotient.
    fn zero_check(&self, p: &Poly) -> Result<Check>;

    /// Same for the tensor square modulo `I (x) T + T (x) I`.
    fn tensor_zero_check(&self, t: &Tensor) -> Result<Check>;

    fn unit(&self) -> Poly {
        Poly::basis(Basis::Unit)
    }

    fn product(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_scaled(&self.product_basis(x, y), &(c * d));
            }
        }
        out
    }

    fn alpha(&self, p: &Poly, k: u32) -> Poly {
        if k == 0 {
            return p.clone();
        }
        p.map_linear(|b| self.alpha_basis(b, k))
    }

    fn antipode(&self, p: &Poly) -> Poly {
        p.map_linear(|b| self.antipode_basis(b))
    }

    fn coproduct(&self, p: &Poly) -> Tensor {
        p.map_linear(|b| self.coproduct_basis(b))
    }

    fn counit(&self, p: &Poly) -> Rational {
        p.coeff(&Basis::Unit)
    }

    /// `eta(epsilon(p))`.
    fn eta_eps(&self, p: &Poly) -> Poly {
        Poly::term(Basis::Unit, self.counit(p))
    }

    fn equal(&self, a: &Poly, b: &Poly) -> Result<Check> {
        self.zero_check(&(a - b))
    }

    /// Componentwise product on the tensor square.
    fn tensor_product(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((a1, a2), c) in x.iter() {
            for ((b1, b2), d) in y.iter() {
                let l = self.product_basis(a1, b1);
                let r = self.product_basis(a2, b2);
                let cd = c * d;
                for (u, e) in l.iter() {
                    for (v, f) in r.iter() {
                        out.add_term((u.clone(), v.clone()), &cd * e * f);
                    }
                }
            }
        }
        out
    }

    /// `f (x) g` applied to a tensor.
    fn tensor_map(
        &self,
        t: &Tensor,
        f: &dyn Fn(&Poly) -> Poly,
        g: &dyn Fn(&Poly) -> Poly,
    ) -> Tensor {
        let mut fl: HashMap<Basis, Poly> = HashMap::new();
        let mut gr: HashMap<Basis, Poly> = HashMap::new();
        let mut out = Tensor::zero();
        for ((a, b), c) in t.iter() {
            let l = fl
                .entry(a.clone())
                .or_insert_with(|| f(&Poly::basis(a.clone())))
                .clone();
            let r = gr
                .entry(b.clone())
                .or_insert_with(|| g(&Poly::basis(b.clone())))
                .clone();
            for (u, e) in l.iter() {
                for (v, d) in r.iter() {
                    out.add_term((u.clone(), v.clone()), c * e * d);
                }
            }
        }
        out
    }

    /// `mu o (f (x) g)` on a tensor.
    fn multiply_tensor(&self, t: &Tensor) -> Poly {
        let mut out = Poly::zero();
        for ((a, b), c) in t.iter() {
            out.add_scaled(&self.product_basis(a, b), c);
        }
        out
    }

    /// Convolution `f * g = mu o (f (x) g) o Delta`.
    fn convolve(&self, f: &dyn Fn(&Poly) -> Poly, g: &dyn Fn(&Poly) -> Poly, x: &Poly) -> Poly {
        let t = self.tensor_map(&self.coproduct(x), f, g);
        self.multiply_tensor(&t)
    }

    /// `Delta(x) - x (x) 1 - 1 (x) x` vanishes in the tensor quotient.
    fn is_primitive(&self, x: &Poly) -> Result<Check> {
        let mut d = self.coproduct(x);
        for (b, c) in x.iter() {
            d.add_term((b.clone(), Basis::Unit), -c.clone());
            d.add_term((Basis::Unit, b.clone()), -c.clone());
        }
        self.tensor_zero_check(&d)
    }

    /// `(S * id)(x) - eta eps(x)` and `(id * S)(x) - eta eps(x)`.
    fn antipode_defects(&self, x: &Poly) -> (Poly, Poly) {
        let ee = self.eta_eps(x);
        let s = |p: &Poly| self.antipode(p);
        let id = |p: &Poly| p.clone();
        let left = &self.convolve(&s, &id, x) - &ee;
        let right = &self.convolve(&id, &s, x) - &ee;
        (left, right)
    }

    /// Smallest `k <= max_k` with `alpha^k((S * id)(x)) = alpha^k((id * S)(x)) = eta eps(x)`.
    fn invertibility_index(&self, x: &Poly, max_k: u32) -> Result<IndexVerdict> {
        let (l, r) = self.antipode_defects(x);
        index_of_defects(self, &[l, r], max_k)
    }

    /// Smallest `k` with `alpha^k(x (y) - 1) = alpha^k((y) x - 1) = 0`, where
    /// `alpha^k(1) = 1`.
    fn hom_inverse_index(&self, x: &Poly, y: &Poly, max_k: u32) -> Result<IndexVerdict> {
        let l = &self.product(x, y) - &self.unit();
        let r = &self.product(y, x) - &self.unit();
        index_of_defects(self, &[l, r], max_k)
    }
}

/// Smallest `k` such that `alpha^k` kills every defect in the quotient.
pub fn index_of_defects<A: HomHopf + ?Sized>(
    alg: &A,
    defects: &[Poly],
    max_k: u32,
) -> Result<IndexVerdict> {
    let mut undecided = false;
    for k in 0..=max_k {
        let mut verdict = Check::Pass;
        for d in defects {
            verdict = verdict.and(alg.zero_check(&alg.alpha(d, k))?);
            if verdict.is_fail() {
                break;
            }
        }
        match verdict {
            Check::Pass if undecided => return Ok(IndexVerdict::AtMost(k)),
            Check::Pass => return Ok(IndexVerdict::Index(k)),
            Check::Fail(_) => {}
            Check::Inconclusive(_) => undecided = true,
        }
    }
    Ok(IndexVerdict::NotFoundUpTo(max_k))
}

/// Commutator `x y - y x`.
pub fn commutator<A: HomHopf + ?Sized>(alg: &A, x: &Poly, y: &Poly) -> Poly {
    &alg.product(x, y) - &alg.product(y, x)
}

/// Hom-associator `alpha(x) (y z) - (x y) alpha(z)`.
pub fn hom_associator<A: HomHopf + ?Sized>(alg: &A, x: &Poly, y: &Poly, z: &Poly) -> Poly {
    let l = alg.product(&alg.alpha(x, 1), &alg.product(y, z));
    let r = alg.product(&alg.product(x, y), &alg.alpha(z, 1));
    &l - &r
}

/// `(id (x) eps) o Delta` and `(eps (x) id) o Delta`.
pub fn counit_contractions<A: HomHopf + ?Sized>(alg: &A, x: &Poly) -> (Poly, Poly) {
    let d = alg.coproduct(x);
    let mut l = Poly::zero();
    let mut r = Poly::zero();
    for ((a, b), c) in d.iter() {
        if b.is_unit() {
            l.add_term(a.clone(), c.clone());
        }
        if a.is_unit() {
            r.add_term(b.clone(), c.clone());
        }
    }
    (l, r)
}

/// Tensor `a (x) b` of two elements.
pub fn tensor_of(a: &Poly, b: &Poly) -> Tensor {
    let mut out = Tensor::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// Swaps tensor factors.
pub fn flip(t: &Tensor) -> Tensor {
    t.map_keys(|(a, b)| (b.clone(), a.clone()))
}
