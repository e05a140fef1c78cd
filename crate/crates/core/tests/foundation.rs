use homhopf::foundation::{rat, ratio, LinComb, Membership, Rational, RowSpace, TruncSeries};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(small_rational(), c), r)
    })
}

fn rows_of(m: &[Vec<Rational>]) -> Vec<LinComb<usize>> {
    m.iter()
        .map(|row| {
            let mut v = LinComb::zero();
            for (j, x) in row.iter().enumerate() {
                v.add_term(j, x.clone());
            }
            v
        })
        .collect()
}

/// Laplace expansion along the first row.
fn det(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return rat(1);
    }
    let mut out = Rational::zero();
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            out += term;
        } else {
            out -= term;
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest nonvanishing minor.
fn brute_rank(m: &[Vec<Rational>]) -> usize {
    let (r, c) = (m.len(), m[0].len());
    for k in (1..=r.min(c)).rev() {
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let sub: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

#[test]
fn combine_examples() {
    let x = LinComb::basis("x");
    let y = LinComb::basis("y");
    assert!(LinComb::combine(&x, &x, &rat(1), &rat(-1)).is_zero());
    let v = LinComb::combine(&x, &y, &ratio(2, 3), &rat(1));
    assert_eq!(v.coeff(&"x"), ratio(2, 3));
    assert_eq!(v.coeff(&"y"), rat(1));
    let h = LinComb::term("x", ratio(1, 2));
    assert_eq!(&h + &h, x);
}

#[test]
fn reduce_examples() {
    let rows = vec![LinComb::basis(0), LinComb::term(0, rat(2))];
    assert_eq!(RowSpace::reduce(rows).rank(), 1);
    let space = RowSpace::reduce(vec![LinComb::basis(0)]);
    match space.membership(&LinComb::basis(1)) {
        Membership::NotIn(r) => assert_eq!(r, LinComb::basis(1)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn series_arithmetic() {
    let a = TruncSeries::new(vec![rat(1), rat(1), rat(0)]);
    let b = TruncSeries::new(vec![rat(1), rat(-1), rat(0)]);
    let p = a.multiply(&b, |x, y| x * y).unwrap();
    assert_eq!(p.coeffs(), &[rat(1), rat(0), rat(-1)]);
    assert!(a.add(&TruncSeries::new(vec![rat(1)])).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_idempotent(m in matrix(5)) {
        let space = RowSpace::reduce(rows_of(&m));
        prop_assert!(space.is_fully_reduced());
        let again = RowSpace::reduce(space.rows().to_vec());
        prop_assert_eq!(again.rows(), space.rows());
    }

    #[test]
    fn rank_matches_minors(m in matrix(5)) {
        prop_assert_eq!(RowSpace::reduce(rows_of(&m)).rank(), brute_rank(&m));
    }

    #[test]
    fn certificates_recombine(m in matrix(4), coefs in prop::collection::vec(small_rational(), 4)) {
        let rows = rows_of(&m);
        let space = RowSpace::reduce_tracked(rows.clone());
        let mut v = LinComb::zero();
        for (r, c) in rows.iter().zip(&coefs) {
            v.add_scaled(r, c);
        }
        match space.membership(&v) {
            Membership::In(cert) => {
                prop_assert_eq!(space.recombine(&cert), v.clone());
                let mut w = LinComb::zero();
                for (&i, c) in cert.inputs.as_ref().unwrap().iter() {
                    w.add_scaled(&rows[i], c);
                }
                prop_assert_eq!(w, v);
            }
            Membership::NotIn(r) => prop_assert!(false, "span element rejected, residual {:?}", r),
        }
    }

    #[test]
    fn residuals_are_reduced(m in matrix(4), probe in prop::collection::vec(small_rational(), 4)) {
        let space = RowSpace::reduce(rows_of(&m));
        let mut v = LinComb::zero();
        for (j, x) in probe.iter().enumerate() {
            v.add_term(j, x.clone());
        }
        if let Membership::NotIn(r) = space.membership(&v) {
            prop_assert!(!r.is_zero());
            prop_assert!(r.keys().all(|k| !space.is_pivot(k)));
            prop_assert_eq!(r, space.normal_form(&v));
        }
    }
}
