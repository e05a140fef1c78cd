//! The enveloping algebra of a Hom-Lie algebra on decorated zero-weight trees.

pub mod absorb;
pub mod expr;
pub mod functor;
pub mod level;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::freehom::ops;
use crate::homlie::{HomLieAlgebra, Matrix, Vector};
use crate::hopf::{Check, HomHopf, Poly, Tensor};
use crate::trees::{Basis, Shape, WeightedTree};

pub use expr::{format_upoly, format_utensor, parse_upoly};
pub use functor::UMap;
pub use level::{LevelContext, RowId, UEquality};

pub const DEFAULT_SLACK: usize = 1;
pub const DEFAULT_LEVEL_CAP: usize = 6;
pub const DEFAULT_KEY_CAP: usize = 60_000;

pub struct UEnvelope {
    algebra: Arc<HomLieAlgebra>,
    slack: usize,
    level_cap: usize,
    key_cap: usize,
    powers: Mutex<Vec<Matrix>>,
    levels: Mutex<HashMap<usize, Arc<LevelContext>>>,
}

impl UEnvelope {
    pub fn new(algebra: HomLieAlgebra) -> UEnvelope {
        Self::with_limits(algebra, DEFAULT_SLACK, DEFAULT_LEVEL_CAP, DEFAULT_KEY_CAP)
    }

    pub fn with_limits(
        algebra: HomLieAlgebra,
        slack: usize,
        level_cap: usize,
        key_cap: usize,
    ) -> UEnvelope {
        let id = Matrix::identity(algebra.dim());
        UEnvelope {
            algebra: Arc::new(algebra),
            slack,
            level_cap,
            key_cap,
            powers: Mutex::new(vec![id]),
            levels: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn level_cap(&self) -> usize {
        self.level_cap
    }

    pub fn names(&self) -> &[String] {
        self.algebra.basis_names()
    }

    fn powers_upto(&self, w: usize) -> Vec<Matrix> {
        let mut p = self.powers.lock().expect("alpha powers");
        while p.len() <= w {
            let next = self.algebra.alpha_matrix().mul(p.last().expect("nonempty"));
            p.push(next);
        }
        p[..=w].to_vec()
    }

    /// Moves every leaf weight into its decoration.
    pub fn absorb(&self, b: &Basis) -> Poly {
        match b {
            Basis::Unit => Poly::basis(Basis::Unit),
            Basis::Tree(t) => {
                let w = t.weights().iter().copied().max().unwrap_or(0) as usize;
                absorb::absorb_tree(t, &self.powers_upto(w))
            }
        }
    }

    pub fn absorb_poly(&self, p: &Poly) -> Poly {
        p.map_linear(|b| self.absorb(b))
    }

    /// The tree of `shape` with the given leaf weights and leaf vectors.
    pub fn decorated(&self, shape: &Shape, weights: &[u32], leaves: &[Vector]) -> Poly {
        let w = weights.iter().copied().max().unwrap_or(0) as usize;
        let powers = self.powers_upto(w);
        let moved: Vec<Vector> = weights
            .iter()
            .zip(leaves)
            .map(|(&w, v)| powers[w as usize].apply(v))
            .collect();
        absorb::expand_leaves(shape, &moved)
    }

    /// One-leaf tree carrying `x`.
    pub fn leaf(&self, x: &[crate::foundation::Rational]) -> Poly {
        absorb::expand_leaves(&Shape::Leaf, &[x.to_vec()])
    }

    pub fn basis_leaf(&self, i: usize) -> Poly {
        Poly::basis(Basis::Tree(WeightedTree::decorated_leaf(0, i as u32)))
    }

    pub fn level_context(&self, level: usize) -> Arc<LevelContext> {
        self.levels
            .lock()
            .expect("level cache")
            .entry(level)
            .or_insert_with(|| {
                Arc::new(LevelContext::new(self.algebra.clone(), level, self.key_cap))
            })
            .clone()
    }

    pub fn default_level(&self, p: &Poly) -> usize {
        max_leaves(p.keys()).max(1) + self.slack
    }

    pub fn equal_at(&self, a: &Poly, b: &Poly, level: usize) -> Result<UEquality> {
        self.level_context(level).equal(a, b)
    }

    /// Tries levels from the default up to the cap; the first proof wins.
    /// A resource limit ends the escalation with the last level reached.
    pub fn equal_mod_u(&self, a: &Poly, b: &Poly) -> Result<UEquality> {
        let start = self.default_level(&(a - b)).max(1);
        let mut last = None;
        for level in start..=self.level_cap.max(start) {
            match self.equal_at(a, b, level) {
                Ok(v @ UEquality::Equal { .. }) => return Ok(v),
                Ok(v) => last = Some(v),
                Err(e @ Error::ResourceLimit { .. }) => return last.ok_or(e),
                Err(e) => return Err(e),
            }
        }
        Ok(last.expect("at least one level tried"))
    }

    pub fn normal_form_at(&self, p: &Poly, level: usize) -> Result<Poly> {
        self.level_context(level).normal_form(p)
    }

    /// `(NF (x) NF)(t)` at `level`.
    pub fn tensor_normal_form_at(&self, t: &Tensor, level: usize) -> Result<Tensor> {
        let ctx = self.level_context(level);
        let mut memo: HashMap<Basis, Poly> = HashMap::new();
        let mut out = Tensor::zero();
        for ((a, b), c) in t.iter() {
            for k in [a, b] {
                if !memo.contains_key(k) {
                    let nf = ctx.normal_form(&Poly::basis(k.clone()))?;
                    memo.insert(k.clone(), nf);
                }
            }
            for (x, e) in memo[a].iter() {
                for (y, d) in memo[b].iter() {
                    out.add_term((x.clone(), y.clone()), c * e * d);
                }
            }
        }
        Ok(out)
    }

    pub fn check_morphism_source(&self, m: &crate::homlie::HomLieMorphism) -> Result<()> {
        if m.source() != self.algebra.as_ref() {
            return Err(Error::MorphismInvalid("source is not this algebra".into()));
        }
        Ok(())
    }
}

fn max_leaves<'a>(keys: impl Iterator<Item = &'a Basis>) -> usize {
    keys.map(Basis::leaf_count).max().unwrap_or(0)
}

impl HomHopf for UEnvelope {
    fn product_basis(&self, a: &Basis, b: &Basis) -> Poly {
        self.absorb(&a.graft(b).expect("decorated trees of one algebra"))
    }

    fn alpha_basis(&self, a: &Basis, k: u32) -> Poly {
        self.absorb(&a.alpha(k))
    }

    fn antipode_basis(&self, a: &Basis) -> Poly {
        ops::antipode(a)
    }

    fn coproduct_basis(&self, a: &Basis) -> Tensor {
        let raw = ops::coproduct(a);
        let mut out = Tensor::zero();
        for ((l, r), c) in raw.iter() {
            let l = self.absorb(l);
            let r = self.absorb(r);
            for (x, e) in l.iter() {
                for (y, d) in r.iter() {
                    out.add_term((x.clone(), y.clone()), c * e * d);
                }
            }
        }
        out
    }

    fn zero_check(&self, p: &Poly) -> Result<Check> {
        if p.is_zero() {
            return Ok(Check::Pass);
        }
        Ok(match self.equal_mod_u(p, &Poly::zero())? {
            UEquality::Equal { .. } => Check::Pass,
            UEquality::NotProvablyEqualUpTo { level, residual } => Check::Inconclusive(format!(
                "not provably zero up to level {level}, residual {}",
                format_upoly(&residual, self.names())
            )),
        })
    }

    fn tensor_zero_check(&self, t: &Tensor) -> Result<Check> {
        if t.is_zero() {
            return Ok(Check::Pass);
        }
        let n = t
            .keys()
            .map(|(a, b)| a.leaf_count().max(b.leaf_count()))
            .max()
            .unwrap_or(0);
        let start = n.max(1) + self.slack;
        let mut last = None;
        for level in start..=self.level_cap.max(start) {
            match self.tensor_normal_form_at(t, level) {
                Ok(nf) if nf.is_zero() => return Ok(Check::Pass),
                Ok(nf) => last = Some((level, nf)),
                Err(e @ Error::ResourceLimit { .. }) if last.is_none() => return Err(e),
                Err(Error::ResourceLimit { .. }) => break,
                Err(e) => return Err(e),
            }
        }
        let (level, nf) = last.expect("at least one level tried");
        Ok(Check::Inconclusive(format!(
            "tensor not provably zero up to level {level}, residual {}",
            format_utensor(&nf, self.names())
        )))
    }
}
