//! Text form of tree polynomials.

use num_traits::{One, Signed};

use crate::error::ParseError;
use crate::foundation::Rational;
use crate::hopf::{Poly, Tensor};
use crate::trees::codec::{parse_raw_expression, resolve};
use crate::trees::{Basis, RawBasis};

/// Parses `coef*tree` terms joined by `+`/`-` into an undecorated polynomial.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut out = Poly::zero();
    for (c, raw) in parse_raw_expression(text)? {
        if let RawBasis::Tree(t) = &raw {
            if let Some(Some(d)) = t.decorations.first() {
                return Err(ParseError::new(
                    d.position,
                    "decorations need an algebra (pass one to use decorated trees)",
                ));
            }
        }
        let b = resolve(raw, &mut |d| {
            Err(ParseError::new(d.position, "unexpected decoration"))
        })?;
        out.add_term(b, c);
    }
    Ok(out)
}

fn write_terms<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Rational)>,
    show: impl Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (k, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(&show(k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_poly(p: &Poly) -> String {
    write_terms(p.iter(), |b: &Basis| b.code().to_string())
}

/// Uses basis names for decorations.
pub fn format_poly_with(p: &Poly, names: &[String]) -> String {
    write_terms(p.iter(), |b: &Basis| b.display_with(names))
}

pub fn format_tensor(t: &Tensor) -> String {
    write_terms(t.iter(), |(a, b): &(Basis, Basis)| {
        format!("{} ⊗ {}", a.code(), b.code())
    })
}

pub fn format_tensor_with(t: &Tensor, names: &[String]) -> String {
    write_terms(t.iter(), |(a, b): &(Basis, Basis)| {
        format!("{} ⊗ {}", a.display_with(names), b.display_with(names))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in [
            "((0 1) (1 0)) - (1 ((0 0) 0))",
            "1 + |1 + 1/2*(0 0)",
            "-3/2*|0",
            "0",
        ] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&format_poly(&p)).unwrap(), p);
        }
        assert_eq!(format_poly(&parse_poly("|0 + |0").unwrap()), "2*|0");
        assert!(parse_poly("(0:E 0:F)").is_err());
    }
}
