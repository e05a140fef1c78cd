//! Text form of enveloping-algebra elements. Decorations are basis names,
//! basis indices, or bracketed combinations such as `0:[E + 1/2*H]`.

use crate::error::{Error, ParseError, Result};
use crate::freehom::expr::{format_poly_with, format_tensor_with};
use crate::homlie::{HomLieAlgebra, Vector};
use crate::hopf::{Poly, Tensor};
use crate::trees::codec::{parse_raw_expression, RawDecoration};
use crate::trees::RawBasis;

use super::UEnvelope;

fn decoration_vector(g: &HomLieAlgebra, d: &RawDecoration) -> Result<Vector> {
    let text = d.text.trim();
    if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        return g.parse_element(inner).map_err(|e| match e {
            Error::Parse(p) => Error::Parse(p.shifted(d.position + 1)),
            other => Error::Parse(ParseError::new(d.position, other.to_string())),
        });
    }
    if let Some(i) = g.index_of(text) {
        return Ok(g.basis_vector(i));
    }
    match text.parse::<usize>() {
        Ok(i) if i < g.dim() => Ok(g.basis_vector(i)),
        _ => Err(Error::Parse(ParseError::new(
            d.position,
            format!("unknown basis element `{text}`"),
        ))),
    }
}

/// Parses a decorated expression and absorbs its weights.
pub fn parse_upoly(env: &UEnvelope, text: &str) -> Result<Poly> {
    let mut out = Poly::zero();
    for (c, raw) in parse_raw_expression(text)? {
        match raw {
            RawBasis::Unit => out.add_term(crate::trees::Basis::Unit, c),
            RawBasis::Tree(t) => {
                let mut leaves = Vec::new();
                for d in &t.decorations {
                    let d = d.as_ref().ok_or_else(|| {
                        Error::Parse(ParseError::new(0, "every leaf needs a decoration"))
                    })?;
                    leaves.push(decoration_vector(env.algebra(), d)?);
                }
                out.add_scaled(&env.decorated(&t.shape, &t.weights, &leaves), &c);
            }
        }
    }
    Ok(out)
}

pub fn format_upoly(p: &Poly, names: &[String]) -> String {
    format_poly_with(p, names)
}

pub fn format_utensor(t: &Tensor, names: &[String]) -> String {
    format_tensor_with(t, names)
}
