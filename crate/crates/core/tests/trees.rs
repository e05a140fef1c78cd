use homhopf::trees::{parse_basis, parse_tree, Basis, Shape, WeightedTree};
use proptest::prelude::*;

fn shape(max_leaves: usize) -> impl Strategy<Value = Shape> {
    (1..=max_leaves).prop_flat_map(|n| {
        let shapes = Shape::enumerate(n);
        (0..shapes.len()).prop_map(move |i| shapes[i].clone())
    })
}

fn weighted(max_leaves: usize, max_weight: u32) -> impl Strategy<Value = WeightedTree> {
    shape(max_leaves).prop_flat_map(move |s| {
        let n = s.leaf_count();
        prop::collection::vec(0..=max_weight, n)
            .prop_map(move |w| WeightedTree::new(s.clone(), w, None).unwrap())
    })
}

fn s_of(b: &Basis) -> Vec<u32> {
    b.tree().map(|t| t.s_signature()).unwrap_or_default()
}

#[test]
fn catalan_counts() {
    let counts: Vec<usize> = (1..=8).map(|n| Shape::enumerate(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429]);
}

#[test]
fn grafting_is_neither_associative_nor_commutative() {
    let (a, b, c) = (
        parse_tree("|0").unwrap(),
        parse_tree("|1").unwrap(),
        parse_tree("|2").unwrap(),
    );
    let ab_c = a.graft(&b).unwrap().graft(&c).unwrap();
    let a_bc = a.graft(&b.graft(&c).unwrap()).unwrap();
    assert_eq!(ab_c.code(), "((0 1) 2)");
    assert_eq!(a_bc.code(), "(0 (1 2))");
    assert_ne!(ab_c, a_bc);
    assert_ne!(a.graft(&b).unwrap(), b.graft(&a).unwrap());
}

#[test]
fn codec_examples() {
    assert_eq!(parse_basis("1").unwrap(), Basis::Unit);
    assert_eq!(parse_tree("((0 2) 1)").unwrap().weights(), &[0, 2, 1]);
    let e = parse_tree("((0 2) 1").unwrap_err();
    assert_eq!(e.position, 8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn codec_round_trip(t in weighted(6, 5)) {
        prop_assert_eq!(parse_tree(t.code()).unwrap(), t);
    }

    #[test]
    fn graft_signature(a in weighted(4, 3), b in weighted(4, 3)) {
        let mut expected: Vec<u32> = a.s_signature().iter().chain(b.s_signature().iter()).map(|s| s + 1).collect();
        prop_assert_eq!(a.graft(&b).unwrap().s_signature(), expected.clone());
        expected = a.s_signature().iter().map(|s| s + 2).collect();
        prop_assert_eq!(a.alpha(2).s_signature(), expected);
    }

    #[test]
    fn generator_is_homogeneous(a in weighted(3, 2), b in weighted(3, 2), c in weighted(3, 2)) {
        let lhs = a.graft(&b).unwrap().graft(&c.alpha(1)).unwrap();
        let rhs = a.alpha(1).graft(&b.graft(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs.s_signature(), rhs.s_signature());
    }

    #[test]
    fn restriction_keeps_s_values(t in weighted(5, 3), mask in any::<u32>()) {
        let n = t.leaf_count();
        let keep: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let kept: Vec<u32> = t.s_signature().iter().zip(&keep).filter(|(_, k)| **k).map(|(s, _)| *s).collect();
        let r = t.restrict(&keep);
        prop_assert_eq!(s_of(&r), kept);
        prop_assert_eq!(r.leaf_count(), keep.iter().filter(|k| **k).count());
    }

    #[test]
    fn mirror_is_an_involution(t in weighted(6, 3)) {
        prop_assert_eq!(t.mirror().mirror(), t.clone());
        let mut rev = t.s_signature();
        rev.reverse();
        prop_assert_eq!(t.mirror().s_signature(), rev);
    }
}
