//! Relations of the enveloping algebra up to a leaf-count level.
//!
//! Rows are explored lazily: a query only builds the connected component of
//! the key/row incidence graph that contains its keys. Membership in the span
//! of all rows equals membership in the span of the component's rows.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use super::absorb::{
    absorb_tree, expand_leaves, internal_nodes, leaf_paths, preimages, replace, replace_tree,
    subtree, Path,
};
use crate::error::{Error, Result};
use crate::foundation::{rat, LinComb, Membership, Rational, RowSpace};
use crate::homlie::{HomLieAlgebra, Matrix};
use crate::hopf::Poly;
use crate::trees::{Basis, Shape, WeightedTree};

/// A generator instance of the ideal, located inside a zero-weight tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowId {
    /// `t` has `(A B) C` at `path`; row `t[(A B) alpha(C)] - t[alpha(A) (B C)]`.
    Assoc(WeightedTree, Path),
    /// `t` has a cherry `x y` with `x < y` at `path`; row `t - t[y x] - t[[x,y]]`.
    Comm(WeightedTree, Path),
}

impl fmt::Debug for RowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, t, p) = match self {
            RowId::Assoc(t, p) => ("assoc", t, p),
            RowId::Comm(t, p) => ("comm", t, p),
        };
        let p: String = p.iter().map(|&r| if r { 'R' } else { 'L' }).collect();
        write!(f, "{kind}({} @{p})", t.code())
    }
}

/// Outcome of an equality query at a fixed level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UEquality {
    /// `a - b` is the stated combination of relation rows.
    Equal {
        certificate: Vec<(RowId, Rational)>,
        level: usize,
    },
    NotProvablyEqualUpTo {
        level: usize,
        residual: Poly,
    },
}

impl UEquality {
    pub fn is_equal(&self) -> bool {
        matches!(self, UEquality::Equal { .. })
    }

    pub fn level(&self) -> usize {
        match self {
            UEquality::Equal { level, .. } | UEquality::NotProvablyEqualUpTo { level, .. } => {
                *level
            }
        }
    }
}

struct Component {
    rows: Vec<RowId>,
    space: RowSpace<Basis>,
}

#[derive(Default)]
struct State {
    owner: HashMap<Basis, usize>,
    components: Vec<Arc<Component>>,
}

pub struct LevelContext {
    algebra: Arc<HomLieAlgebra>,
    level: usize,
    key_cap: usize,
    powers: [Matrix; 2],
    state: Mutex<State>,
}

impl LevelContext {
    pub fn new(algebra: Arc<HomLieAlgebra>, level: usize, key_cap: usize) -> LevelContext {
        let n = algebra.dim();
        let powers = [Matrix::identity(n), algebra.alpha_matrix().clone()];
        LevelContext {
            algebra,
            level,
            key_cap,
            powers,
            state: Mutex::new(State::default()),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of keys explored so far.
    pub fn explored_keys(&self) -> usize {
        self.state.lock().expect("level state").owner.len()
    }

    fn alpha_tree(&self, t: &WeightedTree) -> Poly {
        absorb_tree(&t.alpha(1), &self.powers)
    }

    /// The relation row of a generator instance.
    pub fn row_poly(&self, id: &RowId) -> Poly {
        match id {
            RowId::Assoc(t, path) => {
                let s = subtree(t, path);
                let (ab, c) = s.split().expect("assoc row at an internal node");
                let (a, b) = ab.split().expect("left child is internal");
                let bc = b.graft(&c).expect("decorated");
                let left = graft_right(&ab, &self.alpha_tree(&c));
                let right = graft_left(&self.alpha_tree(&a), &bc);
                &replace(t, path, &left) - &replace(t, path, &right)
            }
            RowId::Comm(t, path) => {
                let s = subtree(t, path);
                let (x, y) = s.split().expect("comm row at a cherry");
                let swapped = y.graft(&x).expect("decorated");
                let dx = x.decorations().expect("decorated")[0] as usize;
                let dy = y.decorations().expect("decorated")[0] as usize;
                let br = expand_leaves(&Shape::Leaf, &[self.algebra.bracket_basis(dx, dy).clone()]);
                let mut row = Poly::basis(Basis::Tree(t.clone()));
                row.add_scaled(
                    &replace(t, path, &Poly::basis(Basis::Tree(swapped))),
                    &rat(-1),
                );
                row.add_scaled(&replace(t, path, &br), &rat(-1));
                row
            }
        }
    }

    /// Generator instances whose row can involve `tau`.
    fn incident(&self, tau: &WeightedTree) -> Vec<RowId> {
        let alpha = &self.powers[1];
        let mut out = Vec::new();
        for (p, s) in internal_nodes(tau) {
            let (l, r) = s.split().expect("internal");
            if l.split().is_some() {
                let c1 = &r;
                for (d, _) in preimages(alpha, c1.decorations().expect("decorated")) {
                    let c = c1.with_decorations(Some(d)).expect("same length");
                    let node = l.graft(&c).expect("decorated");
                    out.push(RowId::Assoc(replace_tree(tau, &p, &node), p.clone()));
                }
            }
            if r.split().is_some() {
                let (b, c) = r.split().expect("internal");
                for (d, _) in preimages(alpha, l.decorations().expect("decorated")) {
                    let a = l.with_decorations(Some(d)).expect("same length");
                    let node = a.graft(&b).and_then(|ab| ab.graft(&c)).expect("decorated");
                    out.push(RowId::Assoc(replace_tree(tau, &p, &node), p.clone()));
                }
            }
            if l.is_leaf() && r.is_leaf() {
                let dx = l.decorations().expect("decorated")[0];
                let dy = r.decorations().expect("decorated")[0];
                if dx < dy {
                    out.push(RowId::Comm(tau.clone(), p));
                } else if dx > dy {
                    let sw = r.graft(&l).expect("decorated");
                    out.push(RowId::Comm(replace_tree(tau, &p, &sw), p));
                }
            }
        }
        if tau.leaf_count() < self.level {
            let n = self.algebra.dim();
            for (p, z) in leaf_paths(tau) {
                for x in 0..n {
                    for y in x + 1..n {
                        if !self.algebra.bracket_basis(x, y)[z as usize].is_zero() {
                            let cherry = WeightedTree::decorated_leaf(0, x as u32)
                                .graft(&WeightedTree::decorated_leaf(0, y as u32))
                                .expect("decorated");
                            out.push(RowId::Comm(replace_tree(tau, &p, &cherry), p.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    fn explore(&self, start: &Basis, state: &mut State) -> Result<usize> {
        let mut seen: HashSet<Basis> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut ids: HashSet<RowId> = HashSet::new();
        let mut rows: Vec<(RowId, Poly)> = Vec::new();
        seen.insert(start.clone());
        queue.push_back(start.clone());
        while let Some(key) = queue.pop_front() {
            let Basis::Tree(tau) = &key else { continue };
            for id in self.incident(tau) {
                if !ids.insert(id.clone()) {
                    continue;
                }
                let poly = self.row_poly(&id);
                if poly.is_zero() {
                    continue;
                }
                for k in poly.keys() {
                    if !seen.contains(k) {
                        seen.insert(k.clone());
                        queue.push_back(k.clone());
                    }
                }
                if seen.len() + state.owner.len() > self.key_cap {
                    return Err(Error::ResourceLimit {
                        needed: seen.len() + state.owner.len(),
                        cap: self.key_cap,
                    });
                }
                rows.push((id, poly));
            }
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        let space = RowSpace::reduce_tracked(rows.iter().map(|(_, p)| p.clone()));
        let idx = state.components.len();
        state.components.push(Arc::new(Component {
            rows: rows.into_iter().map(|(id, _)| id).collect(),
            space,
        }));
        for k in seen {
            state.owner.insert(k, idx);
        }
        Ok(idx)
    }

    fn check_level(&self, v: &Poly) -> Result<()> {
        if let Some(b) = v.keys().find(|b| b.leaf_count() > self.level) {
            return Err(Error::Domain(format!(
                "{} has more than {} leaves",
                b.code(),
                self.level
            )));
        }
        if let Some(b) = v
            .keys()
            .find(|b| b.tree().is_some_and(|t| t.weights().iter().any(|&w| w > 0)))
        {
            return Err(Error::Domain(format!(
                "{} carries unabsorbed weights",
                b.code()
            )));
        }
        Ok(())
    }

    /// Splits `v` by component; unit and isolated terms go to `None`.
    fn partition(&self, v: &Poly) -> Result<(Vec<(Arc<Component>, Poly)>, Poly)> {
        self.check_level(v)?;
        let mut state = self.state.lock().expect("level state");
        let mut parts: HashMap<usize, Poly> = HashMap::new();
        let mut free = Poly::zero();
        for (k, c) in v.iter() {
            if k.is_unit() {
                free.add_term(k.clone(), c.clone());
                continue;
            }
            let idx = match state.owner.get(k) {
                Some(&i) => i,
                None => self.explore(k, &mut state)?,
            };
            parts.entry(idx).or_default().add_term(k.clone(), c.clone());
        }
        let mut keys: Vec<usize> = parts.keys().copied().collect();
        keys.sort_unstable();
        let out = keys
            .into_iter()
            .map(|i| {
                (
                    state.components[i].clone(),
                    parts.remove(&i).expect("present"),
                )
            })
            .collect();
        Ok((out, free))
    }

    pub fn equal(&self, a: &Poly, b: &Poly) -> Result<UEquality> {
        let diff = a - b;
        let (parts, free) = self.partition(&diff)?;
        let mut residual = free;
        let mut certificate: LinComb<RowId> = LinComb::zero();
        for (comp, part) in parts {
            match comp.space.membership(&part) {
                Membership::In(cert) => {
                    let inputs = cert.inputs.expect("tracked reduction");
                    for (i, c) in inputs.iter() {
                        certificate.add_term(comp.rows[*i].clone(), c.clone());
                    }
                }
                Membership::NotIn(r) => residual.add_scaled(&r, &rat(1)),
            }
        }
        Ok(if residual.is_zero() {
            UEquality::Equal {
                certificate: certificate.into_iter().collect(),
                level: self.level,
            }
        } else {
            UEquality::NotProvablyEqualUpTo {
                level: self.level,
                residual,
            }
        })
    }

    /// Remainder of `v` modulo the level's relations; zero iff `v` is in their span.
    pub fn normal_form(&self, v: &Poly) -> Result<Poly> {
        let (parts, mut out) = self.partition(v)?;
        for (comp, part) in parts {
            out.add_scaled(&comp.space.normal_form(&part), &rat(1));
        }
        Ok(out)
    }

    /// Recombines a certificate into the polynomial it certifies.
    pub fn recombine(&self, certificate: &[(RowId, Rational)]) -> Poly {
        let mut out = Poly::zero();
        for (id, c) in certificate {
            out.add_scaled(&self.row_poly(id), c);
        }
        out
    }

    pub fn keys_in_component_of(&self, key: &Basis) -> Result<BTreeSet<Basis>> {
        let idx = {
            let mut state = self.state.lock().expect("level state");
            match state.owner.get(key) {
                Some(&i) => i,
                None => self.explore(key, &mut state)?,
            }
        };
        let state = self.state.lock().expect("level state");
        Ok(state
            .owner
            .iter()
            .filter(|(_, &i)| i == idx)
            .map(|(k, _)| k.clone())
            .collect())
    }
}

fn graft_right(a: &WeightedTree, p: &Poly) -> Poly {
    p.map_linear(|b| {
        let t = b.tree().expect("tree");
        Poly::basis(Basis::Tree(a.graft(t).expect("decorated")))
    })
}

fn graft_left(p: &Poly, c: &WeightedTree) -> Poly {
    p.map_linear(|b| {
        let t = b.tree().expect("tree");
        Poly::basis(Basis::Tree(t.graft(c).expect("decorated")))
    })
}
