use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::shape::Shape;
use crate::error::{Error, Result};

/// Per-leaf `weight + depth`, left to right.
pub type SSignature = Vec<u32>;

/// Leaf-weighted planar binary tree, optionally decorated by basis indices of
/// a Hom-Lie algebra. Equality, hashing and ordering go through the
/// canonical code, which determines the tree.
#[derive(Clone)]
pub struct WeightedTree {
    shape: Shape,
    weights: Vec<u32>,
    decorations: Option<Vec<u32>>,
    code: String,
}

impl WeightedTree {
    pub fn new(shape: Shape, weights: Vec<u32>, decorations: Option<Vec<u32>>) -> Result<Self> {
        let n = shape.leaf_count();
        if weights.len() != n {
            return Err(Error::Domain(format!(
                "{} weights for a tree with {n} leaves",
                weights.len()
            )));
        }
        if let Some(d) = &decorations {
            if d.len() != n {
                return Err(Error::Domain(format!(
                    "{} decorations for a tree with {n} leaves",
                    d.len()
                )));
            }
        }
        Ok(Self::build(shape, weights, decorations))
    }

    fn build(shape: Shape, weights: Vec<u32>, decorations: Option<Vec<u32>>) -> Self {
        let mut code = String::new();
        if shape.is_leaf() {
            code.push('|');
        }
        let mut i = 0;
        write_code(
            &shape,
            &weights,
            decorations.as_deref(),
            &mut i,
            &mut code,
            &|d, out| out.push_str(&d.to_string()),
        );
        WeightedTree {
            shape,
            weights,
            decorations,
            code,
        }
    }

    pub fn leaf(weight: u32) -> Self {
        Self::build(Shape::Leaf, vec![weight], None)
    }

    pub fn decorated_leaf(weight: u32, decoration: u32) -> Self {
        Self::build(Shape::Leaf, vec![weight], Some(vec![decoration]))
    }

    /// Shape with all weights equal to `w`.
    pub fn uniform(shape: Shape, w: u32) -> Self {
        let n = shape.leaf_count();
        Self::build(shape, vec![w; n], None)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn decorations(&self) -> Option<&[u32]> {
        self.decorations.as_deref()
    }

    pub fn is_decorated(&self) -> bool {
        self.decorations.is_some()
    }

    pub fn leaf_count(&self) -> usize {
        self.weights.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.shape.is_leaf()
    }

    /// Canonical text; a single leaf is written `|w` to keep it apart from `1`.
    pub fn code(&self) -> &str {
        &self.code
    }

    /// Left and right subtrees of the root.
    pub fn split(&self) -> Option<(WeightedTree, WeightedTree)> {
        let Shape::Node(l, r) = &self.shape else {
            return None;
        };
        let m = l.leaf_count();
        let dl = self.decorations.as_ref().map(|d| d[..m].to_vec());
        let dr = self.decorations.as_ref().map(|d| d[m..].to_vec());
        Some((
            Self::build((**l).clone(), self.weights[..m].to_vec(), dl),
            Self::build((**r).clone(), self.weights[m..].to_vec(), dr),
        ))
    }

    pub fn graft(&self, other: &WeightedTree) -> Result<WeightedTree> {
        let decorations = match (&self.decorations, &other.decorations) {
            (None, None) => None,
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => return Err(Error::DecorationMismatch),
        };
        let weights = self.weights.iter().chain(&other.weights).copied().collect();
        Ok(Self::build(
            Shape::node(self.shape.clone(), other.shape.clone()),
            weights,
            decorations,
        ))
    }

    /// `alpha^k`: adds `k` to every weight.
    pub fn alpha(&self, k: u32) -> WeightedTree {
        if k == 0 {
            return self.clone();
        }
        Self::build(
            self.shape.clone(),
            self.weights.iter().map(|w| w + k).collect(),
            self.decorations.clone(),
        )
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<WeightedTree> {
        Self::new(self.shape.clone(), weights, self.decorations.clone())
    }

    pub fn with_decorations(&self, decorations: Option<Vec<u32>>) -> Result<WeightedTree> {
        Self::new(self.shape.clone(), self.weights.clone(), decorations)
    }

    pub fn s_signature(&self) -> SSignature {
        self.shape
            .depths()
            .iter()
            .zip(&self.weights)
            .map(|(d, w)| d + w)
            .collect()
    }

    /// Mirror image at every node; weights and decorations follow their leaves.
    pub fn mirror(&self) -> WeightedTree {
        let mut w = self.weights.clone();
        w.reverse();
        let d = self.decorations.clone().map(|mut d| {
            d.reverse();
            d
        });
        Self::build(self.shape.mirror(), w, d)
    }

    /// `phi_I`: leaves outside `keep` become the unit, then the unit rule
    /// simplifies. `keep[i]` refers to leaf `i` (0-based, left to right).
    pub fn restrict(&self, keep: &[bool]) -> Basis {
        assert_eq!(keep.len(), self.leaf_count());
        let mut i = 0;
        let (shape, weights, decs) = restrict_rec(
            &self.shape,
            &self.weights,
            self.decorations.as_deref(),
            keep,
            &mut i,
        )
        .map_or((None, vec![], vec![]), |(s, w, d)| (Some(s), w, d));
        match shape {
            None => Basis::Unit,
            Some(s) => Basis::Tree(Self::build(
                s,
                weights,
                self.decorations.is_some().then_some(decs),
            )),
        }
    }

    pub fn is_fern(&self) -> bool {
        self.shape.is_fern()
    }

    /// Text with decoration indices replaced by names.
    pub fn display_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        if self.shape.is_leaf() {
            out.push('|');
        }
        let mut i = 0;
        write_code(
            &self.shape,
            &self.weights,
            self.decorations.as_deref(),
            &mut i,
            &mut out,
            &|d, out| match names.get(d as usize) {
                Some(n) => out.push_str(n),
                None => out.push_str(&d.to_string()),
            },
        );
        out
    }
}

type Restricted = (Shape, Vec<u32>, Vec<u32>);

fn restrict_rec(
    shape: &Shape,
    weights: &[u32],
    decs: Option<&[u32]>,
    keep: &[bool],
    i: &mut usize,
) -> Option<Restricted> {
    match shape {
        Shape::Leaf => {
            let j = *i;
            *i += 1;
            keep[j].then(|| {
                (
                    Shape::Leaf,
                    vec![weights[j]],
                    decs.map_or_else(Vec::new, |d| vec![d[j]]),
                )
            })
        }
        Shape::Node(l, r) => {
            let a = restrict_rec(l, weights, decs, keep, i);
            let b = restrict_rec(r, weights, decs, keep, i);
            match (a, b) {
                (None, None) => None,
                (Some((s, w, d)), None) | (None, Some((s, w, d))) => {
                    Some((s, w.into_iter().map(|x| x + 1).collect(), d))
                }
                (Some((sa, mut wa, mut da)), Some((sb, wb, db))) => {
                    wa.extend(wb);
                    da.extend(db);
                    Some((Shape::node(sa, sb), wa, da))
                }
            }
        }
    }
}

fn write_code(
    shape: &Shape,
    weights: &[u32],
    decs: Option<&[u32]>,
    i: &mut usize,
    out: &mut String,
    dec: &dyn Fn(u32, &mut String),
) {
    match shape {
        Shape::Leaf => {
            out.push_str(&weights[*i].to_string());
            if let Some(d) = decs {
                out.push(':');
                dec(d[*i], out);
            }
            *i += 1;
        }
        Shape::Node(l, r) => {
            out.push('(');
            write_code(l, weights, decs, i, out, dec);
            out.push(' ');
            write_code(r, weights, decs, i, out, dec);
            out.push(')');
        }
    }
}

impl PartialEq for WeightedTree {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}

impl Eq for WeightedTree {}

impl Hash for WeightedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.code.hash(state)
    }
}

impl PartialOrd for WeightedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeightedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}

impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

impl fmt::Debug for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

/// Basis element of the tree algebras: the unit or a weighted tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Basis {
    Unit,
    Tree(WeightedTree),
}

impl Basis {
    pub fn leaf(weight: u32) -> Basis {
        Basis::Tree(WeightedTree::leaf(weight))
    }

    pub fn code(&self) -> &str {
        match self {
            Basis::Unit => "1",
            Basis::Tree(t) => t.code(),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Basis::Unit)
    }

    pub fn tree(&self) -> Option<&WeightedTree> {
        match self {
            Basis::Unit => None,
            Basis::Tree(t) => Some(t),
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.tree().map_or(0, WeightedTree::leaf_count)
    }

    /// Grafting with the unit rule `t v 1 = 1 v t = alpha(t)`, `1 v 1 = 1`.
    pub fn graft(&self, other: &Basis) -> Result<Basis> {
        Ok(match (self, other) {
            (Basis::Unit, Basis::Unit) => Basis::Unit,
            (Basis::Unit, Basis::Tree(t)) | (Basis::Tree(t), Basis::Unit) => {
                Basis::Tree(t.alpha(1))
            }
            (Basis::Tree(a), Basis::Tree(b)) => Basis::Tree(a.graft(b)?),
        })
    }

    pub fn alpha(&self, k: u32) -> Basis {
        match self {
            Basis::Unit => Basis::Unit,
            Basis::Tree(t) => Basis::Tree(t.alpha(k)),
        }
    }

    pub fn mirror(&self) -> Basis {
        match self {
            Basis::Unit => Basis::Unit,
            Basis::Tree(t) => Basis::Tree(t.mirror()),
        }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        match self {
            Basis::Unit => "1".to_string(),
            Basis::Tree(t) => t.display_with(names),
        }
    }
}

impl From<WeightedTree> for Basis {
    fn from(t: WeightedTree) -> Self {
        Basis::Tree(t)
    }
}

impl PartialOrd for Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Basis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(other.code())
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}
