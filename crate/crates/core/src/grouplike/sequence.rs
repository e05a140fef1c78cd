use std::fmt;

use crate::error::Result;
use crate::foundation::{rat, TruncSeries};
use crate::hopf::{index_of_defects, tensor_of, Check, HomHopf, IndexVerdict, Poly, Tensor};

/// Answer of the p-order group-like test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupLike {
    Yes,
    /// First order at which the test fails, with the oracle's witness.
    No {
        order: usize,
        witness: String,
    },
    Inconclusive {
        order: usize,
        witness: String,
    },
}

impl GroupLike {
    pub fn is_yes(&self) -> bool {
        matches!(self, GroupLike::Yes)
    }
}

/// `Delta(g) = g (x) g mod nu^{p+1}` and `eps(g) = 1`, checked order by order.
pub fn is_grouplike_order_p<A: HomHopf + ?Sized>(
    alg: &A,
    g: &TruncSeries<Poly>,
    p: usize,
) -> Result<GroupLike> {
    assert!(g.order() >= p, "series truncated below the requested order");
    for i in 0..=p {
        let eps = alg.counit(g.coeff(i));
        let expected = if i == 0 { rat(1) } else { rat(0) };
        if eps != expected {
            return Ok(GroupLike::No {
                order: i,
                witness: format!("counit of coefficient {i} is {eps}"),
            });
        }
        let mut d: Tensor = alg.coproduct(g.coeff(i));
        for j in 0..=i {
            d.add_scaled(&tensor_of(g.coeff(j), g.coeff(i - j)), &rat(-1));
        }
        match alg.tensor_zero_check(&d)? {
            Check::Pass => {}
            Check::Fail(w) => {
                return Ok(GroupLike::No {
                    order: i,
                    witness: w,
                })
            }
            Check::Inconclusive(w) => {
                return Ok(GroupLike::Inconclusive {
                    order: i,
                    witness: w,
                })
            }
        }
    }
    Ok(GroupLike::Yes)
}

/// Prefix `g_0, ..., g_P` of a formal group-like sequence; `g_p` has order `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLikeSequence {
    pub terms: Vec<TruncSeries<Poly>>,
    pub bound: u32,
}

impl GroupLikeSequence {
    pub fn new(terms: Vec<TruncSeries<Poly>>, bound: u32) -> Self {
        for (p, t) in terms.iter().enumerate() {
            assert_eq!(t.order(), p, "term {p} must have order {p}");
        }
        GroupLikeSequence { terms, bound }
    }

    /// The unit sequence `g_p = 1`.
    pub fn unit(cap: usize) -> Self {
        Self::new(
            (0..=cap)
                .map(|p| TruncSeries::constant(Poly::basis(crate::trees::Basis::Unit), p))
                .collect(),
            0,
        )
    }

    pub fn cap(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly, bound: u32) -> Self {
        Self::new(self.terms.iter().map(|t| t.map(&f)).collect(), bound)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// `g_p` is p-order group-like (with `g_0 = 1`).
    A,
    /// `g_{p+1} = alpha(g_p) mod nu^{p+1}`.
    B,
    /// Invertibility index of `g_p` at most the bound.
    C,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::A => "a",
            Clause::B => "b",
            Clause::C => "c",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceVerdict {
    Ok,
    Violation {
        clause: Clause,
        index: usize,
        witness: String,
    },
    Inconclusive {
        clause: Clause,
        index: usize,
        witness: String,
    },
}

impl SequenceVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, SequenceVerdict::Ok)
    }
}

fn series_zero_check<A: HomHopf + ?Sized>(alg: &A, s: &[Poly]) -> Result<(Check, usize)> {
    for (i, c) in s.iter().enumerate() {
        let v = alg.zero_check(c)?;
        if !v.is_pass() {
            return Ok((v, i));
        }
    }
    Ok((Check::Pass, 0))
}

/// Checks clauses a, b and c for every stored term.
pub fn validate_sequence<A: HomHopf + ?Sized>(
    alg: &A,
    seq: &GroupLikeSequence,
) -> Result<SequenceVerdict> {
    let verdict = |clause, index, check: Check| match check {
        Check::Pass => None,
        Check::Fail(witness) => Some(SequenceVerdict::Violation {
            clause,
            index,
            witness,
        }),
        Check::Inconclusive(witness) => Some(SequenceVerdict::Inconclusive {
            clause,
            index,
            witness,
        }),
    };
    for (p, g) in seq.terms.iter().enumerate() {
        if p == 0 {
            let d = g.coeff(0) - &alg.unit();
            if let Some(v) = verdict(Clause::A, 0, alg.zero_check(&d)?.context("g_0 = 1")) {
                return Ok(v);
            }
        }
        match is_grouplike_order_p(alg, g, p)? {
            GroupLike::Yes => {}
            GroupLike::No { order, witness } => {
                return Ok(SequenceVerdict::Violation {
                    clause: Clause::A,
                    index: p,
                    witness: format!("order {order}: {witness}"),
                })
            }
            GroupLike::Inconclusive { order, witness } => {
                return Ok(SequenceVerdict::Inconclusive {
                    clause: Clause::A,
                    index: p,
                    witness: format!("order {order}: {witness}"),
                })
            }
        }
    }
    for p in 0..seq.cap() {
        let next = &seq.terms[p + 1];
        let diffs: Vec<Poly> = (0..=p)
            .map(|i| next.coeff(i) - &alg.alpha(seq.terms[p].coeff(i), 1))
            .collect();
        let (check, i) = series_zero_check(alg, &diffs)?;
        if let Some(v) = verdict(Clause::B, p, check.context(&format!("coefficient {i}"))) {
            return Ok(v);
        }
    }
    for (p, g) in seq.terms.iter().enumerate() {
        let mut defects = Vec::new();
        for c in g.coeffs() {
            let (l, r) = alg.antipode_defects(c);
            defects.push(l);
            defects.push(r);
        }
        match index_of_defects(alg, &defects, seq.bound)? {
            IndexVerdict::Index(_) => {}
            IndexVerdict::AtMost(k) => {
                return Ok(SequenceVerdict::Inconclusive {
                    clause: Clause::C,
                    index: p,
                    witness: format!("index at most {k}, smaller values undecided"),
                })
            }
            IndexVerdict::NotFoundUpTo(k) => {
                return Ok(SequenceVerdict::Violation {
                    clause: Clause::C,
                    index: p,
                    witness: format!("no index up to {k}"),
                })
            }
        }
    }
    Ok(SequenceVerdict::Ok)
}

/// Termwise product; the recorded bound is `k_a + k_b + 1`.
pub fn homgroup_product<A: HomHopf + ?Sized>(
    alg: &A,
    a: &GroupLikeSequence,
    b: &GroupLikeSequence,
) -> Result<GroupLikeSequence> {
    assert_eq!(a.cap(), b.cap(), "sequences need the same cap");
    let terms = a
        .terms
        .iter()
        .zip(&b.terms)
        .map(|(x, y)| x.multiply(y, |u, v| alg.product(u, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupLikeSequence::new(terms, a.bound + b.bound + 1))
}

/// The antipode applied termwise.
pub fn homgroup_inverse<A: HomHopf + ?Sized>(alg: &A, a: &GroupLikeSequence) -> GroupLikeSequence {
    a.map(|p| alg.antipode(p), a.bound)
}

/// Smallest `k <= max_k` with `alpha^k(a_p b_p) = alpha^k(b_p a_p) = 1` for all `p`.
pub fn inverse_index<A: HomHopf + ?Sized>(
    alg: &A,
    a: &GroupLikeSequence,
    b: &GroupLikeSequence,
    max_k: u32,
) -> Result<IndexVerdict> {
    let mut defects = Vec::new();
    for (x, y) in a.terms.iter().zip(&b.terms) {
        for prod in [
            x.multiply(y, |u, v| alg.product(u, v))?,
            y.multiply(x, |u, v| alg.product(u, v))?,
        ] {
            for (i, c) in prod.coeffs().iter().enumerate() {
                defects.push(if i == 0 { c - &alg.unit() } else { c.clone() });
            }
        }
    }
    index_of_defects(alg, &defects, max_k)
}
