use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseError;

/// Exact scalar used everywhere. `BigRational` normalizes to lowest terms
/// with a positive denominator on construction.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Parses `"-3/2"`, `"7"`, `"+1/3"`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let bad = || ParseError::new(0, format!("invalid rational `{text}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ParseError::new(0, format!("zero denominator in `{text}`")));
    }
    Ok(Rational::new(n, d))
}

/// `s^i / i!` for the exponential series.
pub fn exp_coefficient(s: &Rational, i: usize) -> Rational {
    let mut c = one();
    for j in 1..=i {
        c = c * s / rat(j as i64);
    }
    c
}

pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return zero();
    }
    let mut c = one();
    for j in 0..k {
        c = c * rat((n - j) as i64) / rat((j + 1) as i64);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(" 4 ").unwrap(), rat(4));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("1/-2").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = ratio(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn exp_and_binomial() {
        assert_eq!(exp_coefficient(&rat(2), 3), ratio(8, 6));
        assert_eq!(binomial(4, 2), rat(6));
        assert_eq!(binomial(2, 3), zero());
    }
}
