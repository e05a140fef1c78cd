use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::foundation::{rat, LinComb, RowSpace};
use crate::hopf::{Check, HomHopf, Poly, Tensor};
use crate::trees::{enumerate_class, Basis, SSignature, Shape, WeightedTree};

use super::ops;

/// Graded class key: leaf count and s-signature. The unit is `(0, [])`.
pub type ClassKey = (usize, SSignature);

/// Relation span of the Hom-associativity ideal inside one graded class.
///
/// Every relation is a difference `t - rewrite(t)` of two basis trees, so the
/// span is described by the connected components of the rewrite graph: a
/// combination lies in the span iff its coefficients sum to zero on every
/// component. The normal form sends each tree to the largest tree of its
/// component, which is exactly the residual of the fully reduced row space.
#[derive(Debug)]
pub struct ClassContext {
    signature: SSignature,
    basis: Vec<WeightedTree>,
    index: HashMap<WeightedTree, usize>,
    edges: Vec<(usize, usize)>,
    representative: Vec<usize>,
    /// Spanning forest: `parent[t] = (p, row, sign)` with
    /// `e_t - e_p = sign * row`; `None` at representatives.
    parent: Vec<Option<(usize, usize, i64)>>,
    components: usize,
    row_space: OnceLock<RowSpace<usize>>,
}

/// Combination of relation rows (indices into [`ClassContext::raw_rows`])
/// that reproduces a class component exactly.
pub type ClassCertificate = LinComb<usize>;

impl ClassContext {
    pub fn build(signature: &[u32]) -> ClassContext {
        let basis = enumerate_class(signature);
        let index: HashMap<WeightedTree, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let mut edges = Vec::new();
        for (i, t) in basis.iter().enumerate() {
            for r in rewrites(t) {
                let j = *index
                    .get(&r)
                    .expect("the ideal generator preserves the s-signature");
                edges.push((i, j));
            }
        }
        let n = basis.len();
        let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); n];
        for (r, &(i, j)) in edges.iter().enumerate() {
            // row r = e_i - e_j
            adj[i].push((j, r, 1));
            adj[j].push((i, r, -1));
        }
        let mut representative = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut components = 0;
        // Visit from the largest index so each component is rooted at its maximum.
        for root in (0..n).rev() {
            if representative[root] != usize::MAX {
                continue;
            }
            components += 1;
            representative[root] = root;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, r, sign) in &adj[v] {
                    if representative[w] == usize::MAX {
                        representative[w] = root;
                        // e_w - e_v = -(e_v - e_w) = -sign * row
                        parent[w] = Some((v, r, -sign));
                        queue.push_back(w);
                    }
                }
            }
        }
        ClassContext {
            signature: signature.to_vec(),
            basis,
            index,
            edges,
            representative,
            parent,
            components,
            row_space: OnceLock::new(),
        }
    }

    pub fn signature(&self) -> &[u32] {
        &self.signature
    }

    pub fn basis(&self) -> &[WeightedTree] {
        &self.basis
    }

    /// Every relation `t - rewrite(t)` in basis coordinates, before reduction.
    pub fn raw_rows(&self) -> Vec<LinComb<usize>> {
        self.edges.iter().map(|&(i, j)| edge_row(i, j)).collect()
    }

    pub fn relation_count(&self) -> usize {
        self.edges.len()
    }

    /// Relation rows as tree polynomials.
    pub fn raw_row_poly(&self, row: usize) -> Poly {
        let (i, j) = self.edges[row];
        self.trees(&edge_row(i, j))
    }

    /// Row-reduced relation span; built on first use.
    pub fn relations(&self) -> &RowSpace<usize> {
        self.row_space
            .get_or_init(|| RowSpace::reduce(self.raw_rows()))
    }

    pub fn rank(&self) -> usize {
        self.basis.len() - self.components
    }

    /// Dimension of the class in the quotient.
    pub fn quotient_dimension(&self) -> usize {
        self.components
    }

    fn coords(&self, p: &Poly) -> LinComb<usize> {
        p.map_keys(|b| {
            let t = b.tree().expect("class elements are trees");
            *self.index.get(t).expect("tree belongs to this class")
        })
    }

    fn trees(&self, v: &LinComb<usize>) -> Poly {
        v.map_keys(|&i| Basis::Tree(self.basis[i].clone()))
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.trees(&self.coords(p).map_keys(|&i| self.representative[i]))
    }

    /// `Ok(certificate)` when `p` lies in the relation span, otherwise the
    /// normal form of `p` as the residual.
    pub fn membership(&self, p: &Poly) -> Result<ClassCertificate, Poly> {
        let v = self.coords(p);
        let nf = v.map_keys(|&i| self.representative[i]);
        if !nf.is_zero() {
            return Err(self.trees(&nf));
        }
        let mut cert = ClassCertificate::zero();
        for (&t, c) in v.iter() {
            let mut cur = t;
            while let Some((p, row, sign)) = self.parent[cur] {
                cert.add_term(row, c * rat(sign));
                cur = p;
            }
        }
        Ok(cert)
    }

    /// Sums the relation rows of a certificate.
    pub fn recombine(&self, cert: &ClassCertificate) -> Poly {
        let mut v = LinComb::zero();
        for (&r, c) in cert.iter() {
            let (i, j) = self.edges[r];
            v.add_scaled(&edge_row(i, j), c);
        }
        self.trees(&v)
    }
}

fn edge_row(i: usize, j: usize) -> LinComb<usize> {
    let mut row = LinComb::basis(i);
    row.add_term(j, rat(-1));
    row
}

/// All trees obtained from `t` by one rewrite `(A v B) v C -> alpha(A) v (B v C')`
/// at some node, where every weight of `C` is positive and `C'` lowers them by one.
pub fn rewrites(t: &WeightedTree) -> Vec<WeightedTree> {
    rewrite_sub(t.shape(), t.weights())
        .into_iter()
        .map(|(shape, weights)| {
            WeightedTree::new(shape, weights, t.decorations().map(<[u32]>::to_vec))
                .expect("leaf order and count are unchanged")
        })
        .collect()
}

fn rewrite_sub(shape: &Shape, w: &[u32]) -> Vec<(Shape, Vec<u32>)> {
    let Shape::Node(l, r) = shape else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let nl = l.leaf_count();
    if let Shape::Node(a, b) = &**l {
        let na = a.leaf_count();
        if w[nl..].iter().all(|&x| x >= 1) {
            let mut nw = w.to_vec();
            for x in &mut nw[..na] {
                *x += 1;
            }
            for x in &mut nw[nl..] {
                *x -= 1;
            }
            let s = Shape::node((**a).clone(), Shape::node((**b).clone(), (**r).clone()));
            out.push((s, nw));
        }
    }
    for (ls, mut lw) in rewrite_sub(l, &w[..nl]) {
        lw.extend_from_slice(&w[nl..]);
        out.push((Shape::node(ls, (**r).clone()), lw));
    }
    for (rs, rw) in rewrite_sub(r, &w[nl..]) {
        let mut nw = w[..nl].to_vec();
        nw.extend(rw);
        out.push((Shape::node((**l).clone(), rs), nw));
    }
    out
}

/// The free Hom-associative algebra on one generator, `T/I`, with a memo of
/// class contexts.
#[derive(Default)]
pub struct FreeHom {
    cache: Mutex<HashMap<SSignature, Arc<ClassContext>>>,
}

/// Verdict of the equality oracle in `T/I`.
#[derive(Clone, Debug)]
pub enum QuotientEquality {
    /// Per touched class, the certificate that the difference lies in `I`.
    Equal(Vec<(ClassKey, ClassCertificate)>),
    NotEqual {
        class: ClassKey,
        residual: Poly,
    },
}

impl QuotientEquality {
    pub fn is_equal(&self) -> bool {
        matches!(self, QuotientEquality::Equal(_))
    }
}

impl FreeHom {
    pub fn new() -> FreeHom {
        FreeHom::default()
    }

    pub fn class_context(&self, signature: &[u32]) -> Arc<ClassContext> {
        if let Some(c) = self.cache.lock().expect("cache lock").get(signature) {
            return c.clone();
        }
        let ctx = Arc::new(ClassContext::build(signature));
        self.cache
            .lock()
            .expect("cache lock")
            .entry(signature.to_vec())
            .or_insert(ctx)
            .clone()
    }

    pub fn cached_classes(&self) -> usize {
        self.cache.lock().expect("cache lock").len()
    }

    /// Splits `p` by leaf count and s-signature.
    pub fn graded_decompose(p: &Poly) -> BTreeMap<ClassKey, Poly> {
        let mut out: BTreeMap<ClassKey, Poly> = BTreeMap::new();
        for (b, c) in p.iter() {
            let key = match b {
                Basis::Unit => (0, Vec::new()),
                Basis::Tree(t) => (t.leaf_count(), t.s_signature()),
            };
            out.entry(key).or_default().add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for ((n, s), part) in Self::graded_decompose(p) {
            if n == 0 {
                out.add_scaled(&part, &rat(1));
            } else {
                out.add_scaled(&self.class_context(&s).normal_form(&part), &rat(1));
            }
        }
        out
    }

    pub fn equal_mod_i(&self, a: &Poly, b: &Poly) -> QuotientEquality {
        let diff = a - b;
        let mut certs = Vec::new();
        for ((n, s), part) in Self::graded_decompose(&diff) {
            if n == 0 {
                return QuotientEquality::NotEqual {
                    class: (0, s),
                    residual: part,
                };
            }
            let ctx = self.class_context(&s);
            match ctx.membership(&part) {
                Ok(cert) => certs.push(((n, s), cert)),
                Err(residual) => {
                    return QuotientEquality::NotEqual {
                        residual,
                        class: (n, s),
                    }
                }
            }
        }
        QuotientEquality::Equal(certs)
    }

    /// Projects each tensor factor to its normal form.
    pub fn tensor_normal_form(&self, t: &Tensor) -> Tensor {
        let mut memo: HashMap<Basis, Poly> = HashMap::new();
        let mut nf = |b: &Basis| -> Poly {
            memo.entry(b.clone())
                .or_insert_with(|| self.normal_form(&Poly::basis(b.clone())))
                .clone()
        };
        let mut out = Tensor::zero();
        for ((a, b), c) in t.iter() {
            let l = nf(a);
            let r = nf(b);
            for (x, e) in l.iter() {
                for (y, d) in r.iter() {
                    out.add_term((x.clone(), y.clone()), c * e * d);
                }
            }
        }
        out
    }
}

pub(crate) fn describe_class(key: &ClassKey) -> String {
    let (n, s) = key;
    let s: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("class ({n}, ({}))", s.join(","))
}

pub(crate) fn describe_poly(p: &Poly) -> String {
    super::expr::format_poly(p)
}

impl HomHopf for FreeHom {
    fn product_basis(&self, a: &Basis, b: &Basis) -> Poly {
        Poly::basis(ops::graft(a, b))
    }

    fn alpha_basis(&self, a: &Basis, k: u32) -> Poly {
        Poly::basis(a.alpha(k))
    }

    fn antipode_basis(&self, a: &Basis) -> Poly {
        ops::antipode(a)
    }

    fn coproduct_basis(&self, a: &Basis) -> Tensor {
        ops::coproduct(a)
    }

    fn zero_check(&self, p: &Poly) -> Result<Check> {
        Ok(match self.equal_mod_i(p, &Poly::zero()) {
            QuotientEquality::Equal(_) => Check::Pass,
            QuotientEquality::NotEqual { class, residual } => Check::Fail(format!(
                "{}: residual {}",
                describe_class(&class),
                describe_poly(&residual)
            )),
        })
    }

    fn tensor_zero_check(&self, t: &Tensor) -> Result<Check> {
        let nf = self.tensor_normal_form(t);
        Ok(Check::from_bool(nf.is_zero(), || {
            format!("tensor residual {}", super::expr::format_tensor(&nf))
        }))
    }
}
