//! Weight absorption and positional surgery on decorated trees.

use num_traits::Zero;

use crate::foundation::{rat, Rational};
use crate::homlie::{Matrix, Vector};
use crate::hopf::Poly;
use crate::trees::{Basis, Shape, WeightedTree};

/// Path from the root: `false` goes left, `true` goes right.
pub type Path = Vec<bool>;

/// Builds the zero-weight trees of `shape` whose leaves carry the given
/// vectors, expanded multilinearly.
pub fn expand_leaves(shape: &Shape, leaves: &[Vector]) -> Poly {
    let mut partial: Vec<(Vec<u32>, Rational)> = vec![(Vec::new(), rat(1))];
    for v in leaves {
        let mut next = Vec::new();
        for (decs, c) in &partial {
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let mut d = decs.clone();
                    d.push(i as u32);
                    next.push((d, c * x));
                }
            }
        }
        partial = next;
        if partial.is_empty() {
            return Poly::zero();
        }
    }
    let zeros = vec![0; leaves.len()];
    partial
        .into_iter()
        .map(|(d, c)| {
            let t =
                WeightedTree::new(shape.clone(), zeros.clone(), Some(d)).expect("lengths match");
            (Basis::Tree(t), c)
        })
        .collect()
}

/// Replaces each leaf `(w, x)` by `(0, alpha^w(x))`. `powers[w]` is `alpha^w`.
pub fn absorb_tree(t: &WeightedTree, powers: &[Matrix]) -> Poly {
    let decs = t.decorations().expect("absorption needs decorations");
    if t.weights().iter().all(|&w| w == 0) {
        return Poly::basis(Basis::Tree(t.clone()));
    }
    let leaves: Vec<Vector> = t
        .weights()
        .iter()
        .zip(decs)
        .map(|(&w, &d)| powers[w as usize].column(d as usize))
        .collect();
    expand_leaves(t.shape(), &leaves)
}

/// Internal nodes as `(path, subtree)`, in preorder.
pub fn internal_nodes(t: &WeightedTree) -> Vec<(Path, WeightedTree)> {
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

fn walk(t: &WeightedTree, path: &mut Path, out: &mut Vec<(Path, WeightedTree)>) {
    if let Some((l, r)) = t.split() {
        out.push((path.clone(), t.clone()));
        path.push(false);
        walk(&l, path, out);
        path.pop();
        path.push(true);
        walk(&r, path, out);
        path.pop();
    }
}

/// Leaves as `(path, decoration)`, left to right.
pub fn leaf_paths(t: &WeightedTree) -> Vec<(Path, u32)> {
    fn go(t: &WeightedTree, path: &mut Path, out: &mut Vec<(Path, u32)>) {
        match t.split() {
            None => out.push((path.clone(), t.decorations().map_or(0, |d| d[0]))),
            Some((l, r)) => {
                path.push(false);
                go(&l, path, out);
                path.pop();
                path.push(true);
                go(&r, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

pub fn subtree(t: &WeightedTree, path: &[bool]) -> WeightedTree {
    let mut cur = t.clone();
    for &right in path {
        let (l, r) = cur.split().expect("path stays inside the tree");
        cur = if right { r } else { l };
    }
    cur
}

/// Substitutes `sub` at `path`, extended linearly. Grafting is plain: no
/// weights change.
pub fn replace(t: &WeightedTree, path: &[bool], sub: &Poly) -> Poly {
    let Some((&first, rest)) = path.split_first() else {
        return sub.clone();
    };
    let (l, r) = t.split().expect("path stays inside the tree");
    let inner = replace(if first { &r } else { &l }, rest, sub);
    let mut out = Poly::zero();
    for (b, c) in inner.iter() {
        let s = b.tree().expect("substituted trees are not the unit");
        let g = if first { l.graft(s) } else { s.graft(&r) };
        out.add_term(Basis::Tree(g.expect("same decoration kind")), c.clone());
    }
    out
}

/// Same as [`replace`] with a single tree.
pub fn replace_tree(t: &WeightedTree, path: &[bool], sub: &WeightedTree) -> WeightedTree {
    let p = replace(t, path, &Poly::basis(Basis::Tree(sub.clone())));
    p.keys()
        .next()
        .and_then(Basis::tree)
        .cloned()
        .expect("single tree in, single tree out")
}

/// Every decoration sequence `d` with `prod_i m[target_i][d_i] != 0`, with
/// that product.
pub fn preimages(m: &Matrix, target: &[u32]) -> Vec<(Vec<u32>, Rational)> {
    let mut partial: Vec<(Vec<u32>, Rational)> = vec![(Vec::new(), rat(1))];
    for &t in target {
        let mut next = Vec::new();
        for (d, c) in &partial {
            for j in 0..m.cols() {
                let x = m.get(t as usize, j);
                if !x.is_zero() {
                    let mut d2 = d.clone();
                    d2.push(j as u32);
                    next.push((d2, c * x));
                }
            }
        }
        partial = next;
    }
    partial
}
