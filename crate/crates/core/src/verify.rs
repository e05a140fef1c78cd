//! Verification suites: each item checks one proposition about the algebras
//! and reports pass, fail with a witness, or inconclusive.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::foundation::rational::binomial;
use crate::foundation::{rat, ratio};
use crate::freehom::{
    counterexample_tree, exp_series, left_fern, nary_product, right_fern, u_element,
    weighted_by_depth, FreeHom,
};
use crate::grouplike::{
    complete_order2, exp_sequence, exp_sequence_u, homgroup_inverse, homgroup_product,
    is_grouplike_order_p, validate_sequence, Completion, GroupLikeSequence,
};
use crate::homlie::fixtures::{line, nonabelian2, sl2_twisted};
use crate::hopf::{
    commutator, hom_associator, tensor_of, Check, HomHopf, IndexVerdict, Poly, Tensor,
};
use crate::trees::{enumerate_class, enumerate_weighted, Basis, Shape, WeightedTree};
use crate::ueg::UEnvelope;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Trees,
    FreeHom,
    Ueg,
    GroupLike,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "trees" => Suite::Trees,
            "freehom" => Suite::FreeHom,
            "ueg" => Suite::Ueg,
            "grouplike" => Suite::GroupLike,
            "all" => Suite::All,
            other => return Err(Error::Domain(format!("unknown suite `{other}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Trees => "trees",
            Suite::FreeHom => "freehom",
            Suite::Ueg => "ueg",
            Suite::GroupLike => "grouplike",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub suite: Suite,
    pub statement: &'static str,
    pub check: Check,
}

type Item = (
    Suite,
    &'static str,
    Box<dyn Fn() -> Result<Check> + Send + Sync>,
);

/// Runs a suite; items run in parallel, results come back in a fixed order.
/// `level` caps the enveloping-algebra oracle.
pub fn run_suite(suite: Suite, level: usize) -> Vec<Outcome> {
    let mut items: Vec<Item> = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Trees {
        tree_items(&mut items);
    }
    if all || suite == Suite::FreeHom {
        freehom_items(&mut items);
    }
    if all || suite == Suite::Ueg {
        ueg_items(&mut items, level);
    }
    if all || suite == Suite::GroupLike {
        grouplike_items(&mut items, level);
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .iter()
            .map(|(s, name, f)| {
                (
                    *s,
                    *name,
                    scope.spawn(move || match f() {
                        Ok(c) => c,
                        Err(e) => Check::Fail(format!("error: {e}")),
                    }),
                )
            })
            .collect();
        handles
            .into_iter()
            .map(|(suite, statement, h)| Outcome {
                suite,
                statement,
                check: h
                    .join()
                    .unwrap_or_else(|_| Check::Fail("the check panicked".into())),
            })
            .collect()
    })
}

fn all_pass(checks: impl IntoIterator<Item = Result<Check>>) -> Result<Check> {
    let mut out = Check::Pass;
    for c in checks {
        out = out.and(c?);
        if out.is_fail() {
            break;
        }
    }
    Ok(out)
}

fn tree(t: &WeightedTree) -> Poly {
    Poly::basis(Basis::Tree(t.clone()))
}

fn small_trees(max_leaves: usize, max_weight: u32) -> Vec<WeightedTree> {
    (1..=max_leaves)
        .flat_map(|n| enumerate_weighted(n, max_weight))
        .collect()
}

fn tree_items(items: &mut Vec<Item>) {
    items.push((
        Suite::Trees,
        "the number of planar binary trees with n leaves is the Catalan number C(n-1)",
        Box::new(|| {
            let expected = [1usize, 1, 2, 5, 14, 42, 132, 429];
            Ok(expected
                .iter()
                .enumerate()
                .map(|(i, &c)| {
                    let got = Shape::enumerate(i + 1).len();
                    Check::from_bool(got == c, || {
                        format!("n = {}: {got} trees, expected {c}", i + 1)
                    })
                })
                .fold(Check::Pass, Check::and))
        }),
    ));
    items.push((
        Suite::Trees,
        "grafting is neither associative nor commutative",
        Box::new(|| {
            let a = WeightedTree::leaf(0);
            let b = WeightedTree::leaf(1);
            let c = WeightedTree::leaf(2);
            let assoc = a.graft(&b)?.graft(&c)? == a.graft(&b.graft(&c)?)?;
            let comm = a.graft(&b)? == b.graft(&a)?;
            Ok(Check::from_bool(!assoc && !comm, || {
                "a counterexample failed".into()
            }))
        }),
    ));
    items.push((
        Suite::Trees,
        "both sides of the Hom-associativity generator have the same s-signature",
        Box::new(|| {
            let ts = small_trees(2, 1);
            for x in &ts {
                for y in &ts {
                    for z in &ts {
                        let l = x.graft(y)?.graft(&z.alpha(1))?;
                        let r = x.alpha(1).graft(&y.graft(z)?)?;
                        if l.s_signature() != r.s_signature() {
                            return Ok(Check::Fail(format!("{} vs {}", l.code(), r.code())));
                        }
                    }
                }
            }
            Ok(Check::Pass)
        }),
    ));
    items.push((
        Suite::Trees,
        "restriction keeps the s-value of every retained leaf",
        Box::new(|| {
            for t in small_trees(4, 1) {
                let n = t.leaf_count();
                let s = t.s_signature();
                for mask in 0u32..(1 << n) {
                    let keep: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                    let kept: Vec<u32> = (0..n).filter(|&i| keep[i]).map(|i| s[i]).collect();
                    let got = t
                        .restrict(&keep)
                        .tree()
                        .map(WeightedTree::s_signature)
                        .unwrap_or_default();
                    if got != kept {
                        return Ok(Check::Fail(format!("{} restricted by {mask:b}", t.code())));
                    }
                }
            }
            Ok(Check::Pass)
        }),
    ));
}

fn freehom_items(items: &mut Vec<Item>) {
    items.push((
        Suite::FreeHom,
        "u nonzero / α(u)=0 / u primitive / u∨u primitive",
        Box::new(|| {
            let alg = FreeHom::new();
            let u = u_element();
            let nonzero = match alg.zero_check(&u)? {
                Check::Fail(_) => Check::Pass,
                _ => Check::Fail("u vanishes".into()),
            };
            let uu = alg.product(&u, &u);
            Ok(nonzero
                .and(alg.zero_check(&alg.alpha(&u, 1))?.context("α(u)"))
                .and(alg.is_primitive(&u)?.context("u primitive"))
                .and(alg.is_primitive(&uu)?.context("u∨u primitive")))
        }),
    ));
    items.push((
        Suite::FreeHom,
        "the quotient is Hom-associative",
        Box::new(|| {
            let alg = FreeHom::new();
            let ts: Vec<Poly> = small_trees(2, 1).iter().map(tree).collect();
            let mut checks = Vec::new();
            for a in &ts {
                for b in &ts {
                    for c in &ts {
                        checks.push(alg.zero_check(&hom_associator(&alg, a, b, c)));
                    }
                }
            }
            all_pass(checks)
        }),
    ));
    items.push((
        Suite::FreeHom,
        "all k-weightings φ[k] of n-trees agree; the two ferns agree",
        Box::new(|| {
            let alg = FreeHom::new();
            let mut checks = Vec::new();
            for n in 1..=4usize {
                for k in n as u32..=n as u32 + 2 {
                    let base = tree(&right_fern(n, k)?);
                    checks.push(Ok(alg
                        .equal(&tree(&left_fern(n, k)?), &base)?
                        .context("ferns")));
                    for s in Shape::enumerate(n) {
                        checks.push(alg.equal(&tree(&weighted_by_depth(&s, k)?), &base));
                    }
                }
            }
            all_pass(checks)
        }),
    ));
    items.push((
        Suite::FreeHom,
        "the coproduct of a k-weighted n-ary product is binomial",
        Box::new(|| {
            let alg = FreeHom::new();
            let mut checks = Vec::new();
            for k in 1..=5u32 {
                for n in 0..=(k as usize).min(3) {
                    let lhs = alg.coproduct(&nary_product(n, k)?);
                    let mut rhs = Tensor::zero();
                    for i in 0..=n {
                        rhs.add_scaled(
                            &tensor_of(&nary_product(i, k)?, &nary_product(n - i, k)?),
                            &binomial(n, i),
                        );
                    }
                    let mut d = lhs;
                    d.add_scaled(&rhs, &rat(-1));
                    checks.push(alg.tensor_zero_check(&d));
                }
            }
            all_pass(checks)
        }),
    ));
    items.push((
        Suite::FreeHom,
        "ferns and all trees with at most four leaves have invertibility index 0",
        Box::new(|| {
            let alg = FreeHom::new();
            let mut trees = small_trees(4, 1);
            trees.extend((5..=7).map(|n| WeightedTree::uniform(Shape::left_comb(n), 0)));
            trees.extend((5..=7).map(|n| WeightedTree::uniform(Shape::right_comb(n), 1)));
            for t in trees {
                let v = alg.invertibility_index(&tree(&t), 0)?;
                if v != IndexVerdict::Index(0) {
                    return Ok(Check::Fail(format!("{}: {v}", t.code())));
                }
            }
            Ok(Check::Pass)
        }),
    ));
    items.push((
        Suite::FreeHom,
        "some trees have positive invertibility index",
        Box::new(|| {
            let alg = FreeHom::new();
            let t = counterexample_tree();
            let v = alg.invertibility_index(&tree(&t), 3)?;
            Ok(Check::from_bool(
                matches!(v, IndexVerdict::Index(k) if k >= 1),
                || format!("{}: {v}", t.code()),
            ))
        }),
    ));
    items.push((
        Suite::FreeHom,
        "every tree with at most five leaves has invertibility index at most n-1",
        Box::new(|| {
            let alg = FreeHom::new();
            for t in small_trees(5, 0) {
                let n = t.leaf_count() as u32;
                let v = alg.invertibility_index(&tree(&t), n.saturating_sub(1))?;
                if v.value().is_none() {
                    return Ok(Check::Fail(format!("{}: {v}", t.code())));
                }
            }
            Ok(Check::Pass)
        }),
    ));
    items.push((
        Suite::FreeHom,
        "the antipode of a series realization reverses the variable",
        Box::new(|| {
            let alg = FreeHom::new();
            let mut checks = Vec::new();
            for p in 1..=4 {
                let f = exp_series(&ratio(3, 2), p);
                let g = exp_series(&ratio(-3, 2), p);
                for (a, b) in f.coeffs().iter().zip(g.coeffs()) {
                    checks.push(alg.equal(&alg.antipode(a), b));
                }
            }
            all_pass(checks)
        }),
    ));
}

fn ueg_items(items: &mut Vec<Item>, level: usize) {
    items.push((
        Suite::Ueg,
        "x∨y − y∨x equals the leaf [x,y]",
        Box::new(move || {
            let env = UEnvelope::with_limits(sl2_twisted(), 1, level, crate::ueg::DEFAULT_KEY_CAP);
            let n = env.algebra().dim();
            let mut checks = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let (x, y) = (env.basis_leaf(i), env.basis_leaf(j));
                    let br = env.leaf(env.algebra().bracket_basis(i, j));
                    checks.push(env.equal(&commutator(&env, &x, &y), &br));
                }
            }
            all_pass(checks)
        }),
    ));
    items.push((
        Suite::Ueg,
        "with α = 0 the square of a nonzero generator does not vanish",
        Box::new(move || {
            let env = UEnvelope::new(line(rat(0)));
            let x = env.basis_leaf(0);
            let xx = env.product(&x, &x);
            for l in 2..=level.max(2) {
                if env.equal_at(&xx, &Poly::zero(), l)?.is_equal() {
                    return Ok(Check::Fail(format!("x∨x vanishes at level {l}")));
                }
            }
            Ok(Check::Pass)
        }),
    ));
    items.push((
        Suite::Ueg,
        "commutators and Hom-associators of primitives are primitive",
        Box::new(move || {
            let env = UEnvelope::with_limits(nonabelian2(), 1, level, crate::ueg::DEFAULT_KEY_CAP);
            let (x, y) = (env.basis_leaf(0), env.basis_leaf(1));
            Ok(env
                .is_primitive(&commutator(&env, &x, &y))?
                .and(env.is_primitive(&hom_associator(&env, &x, &y, &x))?))
        }),
    ));
    items.push((
        Suite::Ueg,
        "exponentials have invertibility index 0",
        Box::new(move || {
            let env = UEnvelope::with_limits(sl2_twisted(), 1, level, crate::ueg::DEFAULT_KEY_CAP);
            let x = env.algebra().parse_element("E + H")?;
            let seq = exp_sequence_u(&env, &x, &rat(1), 3);
            let mut out = Check::Pass;
            for g in &seq.terms {
                let mut defects = Vec::new();
                for c in g.coeffs() {
                    let (l, r) = env.antipode_defects(c);
                    defects.push(l);
                    defects.push(r);
                }
                let v = crate::hopf::index_of_defects(&env, &defects, 0)?;
                out = out.and(match v {
                    IndexVerdict::Index(0) => Check::Pass,
                    other => Check::Inconclusive(other.to_string()),
                });
            }
            Ok(out)
        }),
    ));
}

fn grouplike_items(items: &mut Vec<Item>, level: usize) {
    items.push((
        Suite::GroupLike,
        "the exponential sequence is a formal group-like sequence",
        Box::new(|| {
            let alg = FreeHom::new();
            let mut out = Check::Pass;
            for s in [rat(1), rat(-1), ratio(1, 2)] {
                let v = validate_sequence(&alg, &exp_sequence(&s, 4))?;
                out = out.and(Check::from_bool(v.is_ok(), || format!("s = {s}: {v:?}")));
            }
            Ok(out)
        }),
    ));
    items.push((
        Suite::GroupLike,
        "exp(s)∨exp(t) = α(exp(s+t)), S(exp(s)) = exp(−s) and exp(s)∨exp(−s) = 1",
        Box::new(|| {
            let alg = FreeHom::new();
            let vals = [rat(1), rat(-1), ratio(1, 2)];
            let mut checks = Vec::new();
            for s in &vals {
                for t in &vals {
                    let prod = homgroup_product(&alg, &exp_sequence(s, 4), &exp_sequence(t, 4))?;
                    let sum = exp_sequence(&(s + t), 4);
                    checks.extend(sequence_equal(
                        &alg,
                        &prod,
                        &sum.map(|x| alg.alpha(x, 1), 0),
                    ));
                }
                let inv = homgroup_inverse(&alg, &exp_sequence(s, 4));
                checks.extend(sequence_equal(&alg, &inv, &exp_sequence(&-s, 4)));
                let one = homgroup_product(&alg, &exp_sequence(s, 4), &exp_sequence(&-s, 4))?;
                checks.extend(sequence_equal(&alg, &one, &GroupLikeSequence::unit(4)));
            }
            all_pass(checks)
        }),
    ));
    items.push((
        Suite::GroupLike,
        "no formal group-like element starts with the weight-0 leaf",
        Box::new(|| {
            let alg = FreeHom::new();
            let leaf0 = Poly::basis(Basis::leaf(0));
            let empty = enumerate_class(&[0, 0]).is_empty();
            let verdict = complete_order2(&alg, &leaf0)?;
            Ok(Check::from_bool(
                empty && matches!(verdict, Completion::Infeasible(_)),
                || format!("{verdict:?}"),
            ))
        }),
    ));
    items.push((
        Suite::GroupLike,
        "exponentials in the enveloping algebra are group-like and multiply through α",
        Box::new(move || {
            let env = UEnvelope::with_limits(sl2_twisted(), 1, level, crate::ueg::DEFAULT_KEY_CAP);
            let x = env.algebra().parse_element("E + F")?;
            let mut out = Check::Pass;
            let a = exp_sequence_u(&env, &x, &rat(1), 2);
            for (p, g) in a.terms.iter().enumerate() {
                let v = is_grouplike_order_p(&env, g, p)?;
                out = out.and(Check::from_bool(v.is_yes(), || format!("order {p}: {v:?}")));
            }
            let b = exp_sequence_u(&env, &x, &ratio(1, 2), 2);
            let prod = homgroup_product(&env, &a, &b)?;
            let ax = env.algebra().alpha(&x);
            let expected = exp_sequence_u(&env, &ax, &ratio(3, 2), 2);
            for c in sequence_equal(&env, &prod, &expected) {
                out = out.and(c?);
            }
            Ok(out)
        }),
    ));
}

fn sequence_equal<A: HomHopf + ?Sized>(
    alg: &A,
    a: &GroupLikeSequence,
    b: &GroupLikeSequence,
) -> Vec<Result<Check>> {
    let mut out = Vec::new();
    for (x, y) in a.terms.iter().zip(&b.terms) {
        for (u, v) in x.coeffs().iter().zip(y.coeffs()) {
            out.push(alg.equal(u, v));
        }
    }
    out
}
