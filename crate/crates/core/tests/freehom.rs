use homhopf::foundation::{rat, LinComb, Rational};
use homhopf::freehom::{
    left_fern, nary_product, parse_poly, right_fern, u_element, weighted_by_depth, FreeHom,
};
use homhopf::hopf::{flip, HomHopf, IndexVerdict, Poly, Tensor};
use homhopf::trees::{enumerate_weighted, Basis, Shape, WeightedTree};
use proptest::prelude::*;

type Triple = LinComb<(Basis, Basis, Basis)>;

fn p(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

fn tree(t: &WeightedTree) -> Poly {
    Poly::basis(Basis::Tree(t.clone()))
}

fn weighted(max_leaves: usize, max_weight: u32) -> impl Strategy<Value = WeightedTree> {
    (1..=max_leaves)
        .prop_flat_map(|n| {
            let shapes = Shape::enumerate(n);
            (0..shapes.len()).prop_map(move |i| shapes[i].clone())
        })
        .prop_flat_map(move |s| {
            prop::collection::vec(0..=max_weight, s.leaf_count())
                .prop_map(move |w| WeightedTree::new(s.clone(), w, None).unwrap())
        })
}

fn left_then(alg: &FreeHom, d: &Tensor) -> Triple {
    let mut out = Triple::zero();
    for ((a, b), c) in d.iter() {
        for ((x, y), e) in alg.coproduct(&Poly::basis(a.clone())).iter() {
            out.add_term((x.clone(), y.clone(), b.clone()), c * e);
        }
    }
    out
}

fn right_then(alg: &FreeHom, d: &Tensor) -> Triple {
    let mut out = Triple::zero();
    for ((a, b), c) in d.iter() {
        for ((x, y), e) in alg.coproduct(&Poly::basis(b.clone())).iter() {
            out.add_term((a.clone(), x.clone(), y.clone()), c * e);
        }
    }
    out
}

#[test]
fn structure_map_examples() {
    let alg = FreeHom::new();
    assert_eq!(alg.counit(&p("3*1 - 2*|0")), rat(3));
    assert_eq!(
        alg.antipode(&p("((((2 4) 0) 3) 2)")),
        p("-(2 (3 (0 (4 2))))")
    );
    assert_eq!(alg.antipode(&p("|5")), p("-|5"));
    for n in 1..=4 {
        for t in enumerate_weighted(n, 1) {
            assert_eq!(alg.antipode(&alg.antipode(&tree(&t))), tree(&t));
        }
    }
}

#[test]
fn hom_associativity_on_small_trees() {
    let alg = FreeHom::new();
    let trees: Vec<Poly> = (1..=3)
        .flat_map(|n| enumerate_weighted(n, 1))
        .map(|t| tree(&t))
        .collect();
    for a in &trees {
        for b in &trees {
            for c in &trees {
                let lhs = alg.product(&alg.product(a, b), &alg.alpha(c, 1));
                let rhs = alg.product(&alg.alpha(a, 1), &alg.product(b, c));
                assert!(alg.equal_mod_i(&lhs, &rhs).is_equal());
            }
        }
    }
}

#[test]
fn weighted_product_lemmas() {
    let alg = FreeHom::new();
    for n in 1..=5 {
        for k in n as u32..=7 {
            let l = tree(&left_fern(n, k).unwrap());
            let r = tree(&right_fern(n, k).unwrap());
            assert!(alg.equal_mod_i(&l, &r).is_equal());
            for s in Shape::enumerate(n).into_iter().filter(|s| !s.is_leaf()) {
                let Shape::Node(a, b) = &s else {
                    unreachable!()
                };
                let whole = weighted_by_depth(&s, k).unwrap();
                let parts = weighted_by_depth(a, k - 1)
                    .unwrap()
                    .graft(&weighted_by_depth(b, k - 1).unwrap())
                    .unwrap();
                assert_eq!(whole, parts);
            }
        }
    }
    for k in 1..=6u32 {
        for n in 0..=5usize {
            for m in 0..=5 - n {
                if n + m > k as usize {
                    continue;
                }
                let e = |i: usize, k: u32| nary_product(i, k).unwrap();
                let prod = alg.product(&e(n, k), &e(m, k));
                assert!(
                    alg.equal_mod_i(&prod, &e(n + m, k + 1)).is_equal(),
                    "n={n} m={m} k={k}"
                );
                assert!(alg
                    .equal_mod_i(&prod, &alg.alpha(&e(n + m, k), 1))
                    .is_equal());
            }
            if n <= k as usize {
                let e = nary_product(n, k).unwrap();
                let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
                assert!(alg
                    .equal_mod_i(&alg.antipode(&e), &e.scaled(&sign))
                    .is_equal());
            }
        }
    }
}

#[test]
fn u_properties() {
    let alg = FreeHom::new();
    let u = u_element();
    assert!(!alg.equal_mod_i(&u, &Poly::zero()).is_equal());
    assert!(alg.equal_mod_i(&alg.alpha(&u, 1), &Poly::zero()).is_equal());
    assert!(alg.is_primitive(&u).unwrap().is_pass());
    assert!(alg.is_primitive(&alg.product(&u, &u)).unwrap().is_pass());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coassociative_and_cocommutative(t in weighted(5, 2)) {
        let alg = FreeHom::new();
        let d = alg.coproduct(&tree(&t));
        prop_assert_eq!(left_then(&alg, &d), right_then(&alg, &d));
        prop_assert_eq!(flip(&d), d);
    }

    #[test]
    fn compatibility(a in weighted(3, 2), b in weighted(3, 2)) {
        let alg = FreeHom::new();
        let (x, y) = (tree(&a), tree(&b));
        let lhs = alg.coproduct(&alg.product(&x, &y));
        let rhs = alg.tensor_product(&alg.coproduct(&x), &alg.coproduct(&y));
        prop_assert_eq!(lhs, rhs);
        let mut alpha_both = Tensor::zero();
        for ((l, r), c) in alg.coproduct(&x).iter() {
            alpha_both.add_term((l.alpha(1), r.alpha(1)), c.clone());
        }
        prop_assert_eq!(alg.coproduct(&alg.alpha(&x, 1)), alpha_both);
    }

    #[test]
    fn counit_contracts_to_identity(t in weighted(5, 2)) {
        let alg = FreeHom::new();
        let x = tree(&t);
        let d = alg.coproduct(&x);
        let mut left = Poly::zero();
        let mut right = Poly::zero();
        for ((l, r), c) in d.iter() {
            let el: Rational = alg.counit(&Poly::basis(l.clone()));
            let er: Rational = alg.counit(&Poly::basis(r.clone()));
            left.add_term(r.clone(), c * el);
            right.add_term(l.clone(), c * er);
        }
        prop_assert_eq!(&left, &x);
        prop_assert_eq!(&right, &x);
    }

    #[test]
    fn hom_associative_in_quotient(a in weighted(3, 2), b in weighted(3, 2), c in weighted(3, 2)) {
        let alg = FreeHom::new();
        let (x, y, z) = (tree(&a), tree(&b), tree(&c));
        let lhs = alg.product(&alg.product(&x, &y), &alg.alpha(&z, 1));
        let rhs = alg.product(&alg.alpha(&x, 1), &alg.product(&y, &z));
        prop_assert!(alg.equal_mod_i(&lhs, &rhs).is_equal());
    }

    #[test]
    fn index_is_bounded_by_leaf_count(t in weighted(5, 3)) {
        let alg = FreeHom::new();
        let bound = t.leaf_count() as u32 - 1;
        match alg.invertibility_index(&tree(&t), 8).unwrap() {
            IndexVerdict::Index(k) => prop_assert!(k <= bound, "{} has index {}", t, k),
            v => prop_assert!(false, "{}: {}", t, v),
        }
    }
}
