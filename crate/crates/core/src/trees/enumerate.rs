use std::collections::HashMap;

use super::shape::Shape;
use super::weighted::WeightedTree;

/// All undecorated weighted trees with the given s-signature, sorted by code.
///
/// A leaf at depth `d` needs `s_i >= d`; splitting the root lowers every
/// entry by one, so the search recurses on the two halves of `s - 1`.
pub fn enumerate_class(s: &[u32]) -> Vec<WeightedTree> {
    if s.is_empty() {
        return Vec::new();
    }
    let mut memo = HashMap::new();
    let mut out: Vec<WeightedTree> = class_rec(s, &mut memo)
        .into_iter()
        .map(|(shape, w)| WeightedTree::new(shape, w, None).expect("consistent lengths"))
        .collect();
    out.sort();
    out
}

type Partial = Vec<(Shape, Vec<u32>)>;

fn class_rec(s: &[u32], memo: &mut HashMap<Vec<u32>, Partial>) -> Partial {
    if s.len() == 1 {
        return vec![(Shape::Leaf, vec![s[0]])];
    }
    if let Some(v) = memo.get(s) {
        return v.clone();
    }
    let mut out = Vec::new();
    if s.iter().all(|&x| x >= 1) {
        let lowered: Vec<u32> = s.iter().map(|x| x - 1).collect();
        for m in 1..s.len() {
            let ls = class_rec(&lowered[..m], memo);
            if ls.is_empty() {
                continue;
            }
            let rs = class_rec(&lowered[m..], memo);
            for (lshape, lw) in &ls {
                for (rshape, rw) in &rs {
                    let mut w = lw.clone();
                    w.extend_from_slice(rw);
                    out.push((Shape::node(lshape.clone(), rshape.clone()), w));
                }
            }
        }
    }
    memo.insert(s.to_vec(), out.clone());
    out
}

/// All undecorated trees with `n` leaves and weights in `0..=max_weight`.
pub fn enumerate_weighted(n: usize, max_weight: u32) -> Vec<WeightedTree> {
    let mut out = Vec::new();
    for shape in Shape::enumerate(n) {
        let mut w = vec![0u32; n];
        loop {
            out.push(WeightedTree::new(shape.clone(), w.clone(), None).expect("lengths"));
            let mut i = 0;
            while i < n && w[i] == max_weight {
                w[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            w[i] += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_for_zero_signature() {
        assert!(enumerate_class(&[0, 0]).is_empty());
    }

    #[test]
    fn single_leaf() {
        let c = enumerate_class(&[3]);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].code(), "|3");
    }

    #[test]
    fn u_class_matches_shape_filter() {
        let s = [2, 3, 3, 2];
        // Oracle: filter the five shapes directly.
        let expected: Vec<String> = {
            let mut v: Vec<String> = Shape::enumerate(4)
                .into_iter()
                .filter(|sh| sh.depths().iter().zip(&s).all(|(d, x)| d <= x))
                .map(|sh| {
                    let w = sh.depths().iter().zip(&s).map(|(d, x)| x - d).collect();
                    WeightedTree::new(sh, w, None).unwrap().code().to_string()
                })
                .collect();
            v.sort();
            v
        };
        let got: Vec<String> = enumerate_class(&s)
            .iter()
            .map(|t| t.code().to_string())
            .collect();
        assert_eq!(got, expected);
        assert!(got.contains(&"((0 1) (1 0))".to_string()));
        assert!(got.contains(&"(1 ((0 0) 0))".to_string()));
    }

    #[test]
    fn weighted_count() {
        assert_eq!(enumerate_weighted(3, 1).len(), 2 * 8);
    }
}
