//! The order-2 completion problem in the one-generator algebra: given a
//! primitive `g_1`, find `g_2` with `Delta(g_2) = g_2 (x) 1 + 1 (x) g_2 + g_1 (x) g_1`.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::foundation::{LinComb, Membership, RowSpace};
use crate::freehom::FreeHom;
use crate::hopf::{tensor_of, HomHopf, Poly, Tensor};
use crate::trees::{enumerate_class, Basis, SSignature};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completion {
    Feasible(Poly),
    Infeasible(String),
}

fn reduced_coproduct(alg: &FreeHom, p: &Poly) -> Tensor {
    let mut d = alg.coproduct(p);
    for (b, c) in p.iter() {
        d.add_term((b.clone(), Basis::Unit), -c.clone());
        d.add_term((Basis::Unit, b.clone()), -c.clone());
    }
    d
}

fn s_values(b: &Basis) -> Vec<u32> {
    b.tree().map(|t| t.s_signature()).unwrap_or_default()
}

fn permutations(v: &[u32]) -> BTreeSet<SSignature> {
    if v.len() <= 1 {
        return BTreeSet::from([v.to_vec()]);
    }
    let mut out = BTreeSet::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.insert(p);
        }
    }
    out
}

/// Solves for `g_2`. Restriction keeps the s-value of every retained leaf, so
/// only trees whose s-values rearrange those of a target term can contribute.
pub fn complete_order2(alg: &FreeHom, g1: &Poly) -> Result<Completion> {
    if !alg.is_primitive(g1)?.is_pass() {
        return Ok(Completion::Infeasible("g_1 is not primitive".into()));
    }
    let target = alg.tensor_normal_form(&tensor_of(g1, g1));
    if target.is_zero() {
        return Ok(Completion::Feasible(Poly::zero()));
    }
    let mut signatures = BTreeSet::new();
    for (a, b) in target.keys() {
        let mut s = s_values(a);
        s.extend(s_values(b));
        s.sort_unstable();
        signatures.extend(permutations(&s));
    }
    let mut candidates = Vec::new();
    let mut empty = Vec::new();
    for s in &signatures {
        let class = enumerate_class(s);
        if class.is_empty() {
            let text: Vec<String> = s.iter().map(u32::to_string).collect();
            empty.push(format!("({}, ({}))", s.len(), text.join(",")));
        }
        candidates.extend(class.into_iter().map(Basis::Tree));
    }
    if candidates.is_empty() {
        return Ok(Completion::Infeasible(format!(
            "no candidate trees: class {} is empty",
            empty.join(", ")
        )));
    }
    let rows: Vec<LinComb<(Basis, Basis)>> = candidates
        .iter()
        .map(|t| alg.tensor_normal_form(&reduced_coproduct(alg, &Poly::basis(t.clone()))))
        .collect();
    let space = RowSpace::reduce_tracked(rows);
    Ok(match space.membership(&target) {
        Membership::In(cert) => {
            let mut g2 = Poly::zero();
            for (i, c) in cert.inputs.expect("tracked").iter() {
                g2.add_term(candidates[*i].clone(), c.clone());
            }
            Completion::Feasible(g2)
        }
        Membership::NotIn(r) => Completion::Infeasible(format!(
            "the linear system has no solution; residual {}",
            crate::freehom::format_tensor(&r)
        )),
    })
}
