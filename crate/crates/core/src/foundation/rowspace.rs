use std::collections::BTreeMap;
use std::ops::Bound;

use num_traits::{One, Zero};

use super::lincomb::LinComb;
use super::rational::Rational;

/// Row span in fully reduced echelon form. The pivot of a row is its smallest
/// key, every pivot coefficient is 1, and no pivot column appears in any
/// other row.
#[derive(Clone, Debug)]
pub struct RowSpace<K: Ord> {
    rows: Vec<LinComb<K>>,
    pivots: BTreeMap<K, usize>,
    provenance: Option<Vec<LinComb<usize>>>,
}

/// Witness of membership: `v = sum coef_i * rows[i]` over the reduced rows.
/// When the space tracks provenance, `inputs` expresses the same vector as a
/// combination of the rows originally handed to [`RowSpace::reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub reduced: Vec<(usize, Rational)>,
    pub inputs: Option<LinComb<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership<K: Ord> {
    In(Certificate),
    NotIn(LinComb<K>),
}

impl<K: Ord> Membership<K> {
    pub fn is_in(&self) -> bool {
        matches!(self, Membership::In(_))
    }
}

impl<K: Ord + Clone> Default for RowSpace<K> {
    fn default() -> Self {
        RowSpace {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            provenance: None,
        }
    }
}

impl<K: Ord + Clone> RowSpace<K> {
    /// Row-reduces `rows` without provenance tracking.
    pub fn reduce(rows: impl IntoIterator<Item = LinComb<K>>) -> Self {
        Self::build(rows, false)
    }

    /// Row-reduces `rows` and records, for every reduced row, the input rows it
    /// came from.
    pub fn reduce_tracked(rows: impl IntoIterator<Item = LinComb<K>>) -> Self {
        Self::build(rows, true)
    }

    fn build(rows: impl IntoIterator<Item = LinComb<K>>, track: bool) -> Self {
        let mut echelon: Vec<LinComb<K>> = Vec::new();
        let mut prov: Vec<LinComb<usize>> = Vec::new();
        let mut pivots: BTreeMap<K, usize> = BTreeMap::new();

        for (idx, row) in rows.into_iter().enumerate() {
            let mut r = row;
            let mut p = if track {
                LinComb::basis(idx)
            } else {
                LinComb::zero()
            };
            // Forward reduction: eliminate existing pivots in increasing key order.
            // Subtracting a pivot row only introduces keys larger than its pivot.
            let mut cursor: Option<K> = None;
            loop {
                let next = {
                    let lower = match &cursor {
                        Some(c) => Bound::Excluded(c),
                        None => Bound::Unbounded,
                    };
                    r.terms
                        .range((lower, Bound::Unbounded))
                        .find(|(k, _)| pivots.contains_key(*k))
                        .map(|(k, c)| (k.clone(), c.clone()))
                };
                let Some((key, c)) = next else { break };
                let j = pivots[&key];
                r.add_scaled(&echelon[j], &-c.clone());
                if track {
                    p.add_scaled(&prov[j], &-c);
                }
                cursor = Some(key);
            }
            let Some((lead, lc)) = r.leading().map(|(k, c)| (k.clone(), c.clone())) else {
                continue;
            };
            let inv = lc.recip();
            let r = r.scaled(&inv);
            if track {
                p = p.scaled(&inv);
            }
            pivots.insert(lead, echelon.len());
            echelon.push(r);
            prov.push(p);
        }

        // Back substitution from the largest pivot down.
        let mut order: Vec<(K, usize)> = pivots.iter().map(|(k, &i)| (k.clone(), i)).collect();
        order.reverse();
        for (pk, i) in &order {
            let hits: Vec<(K, Rational)> = echelon[*i]
                .terms
                .range((Bound::Excluded(pk), Bound::Unbounded))
                .filter(|(k, _)| pivots.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect();
            for (k, c) in hits {
                let j = pivots[&k];
                let other = echelon[j].clone();
                echelon[*i].add_scaled(&other, &-c.clone());
                if track {
                    let op = prov[j].clone();
                    prov[*i].add_scaled(&op, &-c);
                }
            }
        }

        // Store sorted by pivot.
        let mut rows = Vec::with_capacity(echelon.len());
        let mut provenance = Vec::with_capacity(echelon.len());
        let mut new_pivots = BTreeMap::new();
        let mut echelon: Vec<Option<LinComb<K>>> = echelon.into_iter().map(Some).collect();
        let mut prov: Vec<Option<LinComb<usize>>> = prov.into_iter().map(Some).collect();
        for (k, i) in pivots {
            new_pivots.insert(k, rows.len());
            rows.push(echelon[i].take().expect("row used once"));
            provenance.push(prov[i].take().expect("row used once"));
        }
        RowSpace {
            rows,
            pivots: new_pivots,
            provenance: track.then_some(provenance),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LinComb<K>] {
        &self.rows
    }

    pub fn pivot(&self, row: usize) -> &K {
        self.rows[row]
            .leading()
            .expect("reduced rows are nonzero")
            .0
    }

    pub fn is_pivot(&self, key: &K) -> bool {
        self.pivots.contains_key(key)
    }

    pub fn provenance(&self) -> Option<&[LinComb<usize>]> {
        self.provenance.as_deref()
    }

    /// Fully reduced remainder of `v`; zero iff `v` is in the span. This is the
    /// normal form of `v` modulo the span.
    pub fn normal_form(&self, v: &LinComb<K>) -> LinComb<K> {
        self.split(v).1
    }

    fn split(&self, v: &LinComb<K>) -> (Vec<(usize, Rational)>, LinComb<K>) {
        let mut residual = v.clone();
        let mut used = Vec::new();
        // Rows are fully reduced, so each pivot coefficient of v is untouched
        // by subtracting the other rows.
        for (k, c) in v.iter() {
            if let Some(&i) = self.pivots.get(k) {
                residual.add_scaled(&self.rows[i], &-c.clone());
                used.push((i, c.clone()));
            }
        }
        (used, residual)
    }

    pub fn membership(&self, v: &LinComb<K>) -> Membership<K> {
        let (used, residual) = self.split(v);
        if !residual.is_zero() {
            return Membership::NotIn(residual);
        }
        let inputs = self.provenance.as_ref().map(|prov| {
            let mut lc = LinComb::zero();
            for (i, c) in &used {
                lc.add_scaled(&prov[*i], c);
            }
            lc
        });
        Membership::In(Certificate {
            reduced: used,
            inputs,
        })
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Recombines a certificate over the reduced rows.
    pub fn recombine(&self, cert: &Certificate) -> LinComb<K> {
        let mut out = LinComb::zero();
        for (i, c) in &cert.reduced {
            out.add_scaled(&self.rows[*i], c);
        }
        out
    }

    /// Checks the echelon invariants; used by tests.
    pub fn is_fully_reduced(&self) -> bool {
        let mut last: Option<&K> = None;
        for (i, row) in self.rows.iter().enumerate() {
            let Some((lead, c)) = row.leading() else {
                return false;
            };
            if !c.is_one() || last.is_some_and(|l| l >= lead) {
                return false;
            }
            last = Some(lead);
            for (j, other) in self.rows.iter().enumerate() {
                if i != j && other.get(lead).is_some_and(|c| !c.is_zero()) {
                    return false;
                }
            }
        }
        true
    }
}

/// Recombines input-row coefficients against the original rows.
pub fn recombine_inputs<K: Ord + Clone>(
    inputs: &LinComb<usize>,
    rows: &[LinComb<K>],
) -> LinComb<K> {
    let mut out = LinComb::zero();
    for (i, c) in inputs.iter() {
        out.add_scaled(&rows[*i], c);
    }
    out
}
