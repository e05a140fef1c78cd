use num_traits::Zero;

use super::lincomb::LinComb;
use super::rational::{one, Rational};
use crate::error::{Error, Result};

/// Values that can sit in a truncated series: an additive group with a zero.
pub trait Coefficient: Clone {
    fn zero_value() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, s: &Rational) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl Coefficient for Rational {
    fn zero_value() -> Self {
        Rational::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, s: &Rational) -> Self {
        self * s
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl<K: Ord + Clone> Coefficient for LinComb<K> {
    fn zero_value() -> Self {
        LinComb::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, s: &Rational) -> Self {
        self.scaled(s)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

/// `c_0 + c_1 nu + ... + c_p nu^p`, computed modulo `nu^(p+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<V> {
    coeffs: Vec<V>,
}

impl<V: Coefficient> TruncSeries<V> {
    /// Panics on an empty coefficient list; a series has order >= 0.
    pub fn new(coeffs: Vec<V>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        TruncSeries { coeffs }
    }

    pub fn constant(c: V, order: usize) -> Self {
        let mut coeffs = vec![V::zero_value(); order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![V::zero_value(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[V] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &V {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<V> {
        self.coeffs
    }

    pub fn map<W: Coefficient>(&self, f: impl FnMut(&V) -> W) -> TruncSeries<W> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Same series read modulo a lower power of `nu`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map(|c| c.times(s))
    }

    /// `f(-nu)`.
    pub fn negate_variable(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i % 2 == 1 {
                        c.times(&-one())
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        }
    }

    /// Cauchy product with a bilinear coefficient product, truncated at the
    /// common order.
    pub fn multiply<W: Coefficient, U: Coefficient>(
        &self,
        other: &TruncSeries<W>,
        mut mul: impl FnMut(&V, &W) -> U,
    ) -> Result<TruncSeries<U>> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let p = self.order();
        let mut out = vec![U::zero_value(); p + 1];
        for i in 0..=p {
            if self.coeffs[i].is_zero_value() {
                continue;
            }
            for j in 0..=(p - i) {
                if other.coeffs[j].is_zero_value() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&mul(&self.coeffs[i], &other.coeffs[j]));
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero_value)
    }

    fn check_order<W>(&self, other: &TruncSeries<W>) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.coeffs.len() - 1,
            });
        }
        Ok(())
    }
}
