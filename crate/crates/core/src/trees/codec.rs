//! Text format for trees and linear combinations of trees.
//!
//! ```text
//! tree  := "1" | "|" leaf | leaf | "(" tree " " tree ")"
//! leaf  := weight (":" dec)?
//! dec   := name | index | "[" combo "]"
//! expr  := term (("+" | "-") term)*
//! term  := (coef "*")? tree
//! ```
//!
//! A bare `1` is the unit; the one-leaf tree of weight 1 is written `|1`.

use super::shape::Shape;
use super::weighted::{Basis, WeightedTree};
use crate::error::ParseError;
use crate::foundation::{parse_rational, Rational};

/// Leaf decoration as written, before resolution against an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawDecoration {
    pub position: usize,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTree {
    pub shape: Shape,
    pub weights: Vec<u32>,
    pub decorations: Vec<Option<RawDecoration>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawBasis {
    Unit,
    Tree(RawTree),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn tree(&mut self, raw: &mut RawTree) -> Result<Shape, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let l = self.tree(raw)?;
                let before = self.pos;
                self.skip_ws();
                if self.pos == before && self.peek() != Some('(') {
                    return Err(self.err("expected a space between subtrees"));
                }
                let r = self.tree(raw)?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(Shape::node(l, r))
            }
            Some(c) if c.is_ascii_digit() => {
                self.leaf(raw)?;
                Ok(Shape::Leaf)
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn leaf(&mut self, raw: &mut RawTree) -> Result<(), ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.err("expected a leaf weight"));
        }
        let w: u32 = self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "leaf weight out of range"))?;
        raw.weights.push(w);
        if self.peek() == Some(':') {
            self.bump();
            let dstart = self.pos;
            if self.peek() == Some('[') {
                let mut depth = 0usize;
                loop {
                    match self.bump() {
                        Some('[') => depth += 1,
                        Some(']') => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        Some(_) => {}
                        None => return Err(ParseError::new(dstart, "unclosed `[`")),
                    }
                }
            } else {
                while self
                    .peek()
                    .is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '\'')
                {
                    self.bump();
                }
            }
            if dstart == self.pos {
                return Err(self.err("expected a decoration after `:`"));
            }
            raw.decorations.push(Some(RawDecoration {
                position: dstart,
                text: self.src[dstart..self.pos].to_string(),
            }));
        } else {
            raw.decorations.push(None);
        }
        Ok(())
    }

    /// One basis term at the top level.
    fn basis(&mut self) -> Result<RawBasis, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let explicit_leaf = self.peek() == Some('|');
        if explicit_leaf {
            self.bump();
        }
        let mut raw = RawTree {
            shape: Shape::Leaf,
            weights: vec![],
            decorations: vec![],
        };
        raw.shape = self.tree(&mut raw)?;
        if !explicit_leaf && raw.shape.is_leaf() && &self.src[start..self.pos] == "1" {
            return Ok(RawBasis::Unit);
        }
        if explicit_leaf && !raw.shape.is_leaf() {
            return Err(ParseError::new(start, "`|` only prefixes a single leaf"));
        }
        let some = raw.decorations.iter().filter(|d| d.is_some()).count();
        if some != 0 && some != raw.decorations.len() {
            return Err(ParseError::new(
                start,
                "either every leaf is decorated or none is",
            ));
        }
        Ok(RawBasis::Tree(raw))
    }
}

pub fn parse_raw(text: &str) -> Result<RawBasis, ParseError> {
    let mut c = Cursor { src: text, pos: 0 };
    let b = c.basis()?;
    c.skip_ws();
    if c.pos != text.len() {
        return Err(c.err("trailing input"));
    }
    Ok(b)
}

/// Parses a basis element whose decorations, if any, are numeric indices.
pub fn parse_basis(text: &str) -> Result<Basis, ParseError> {
    resolve(parse_raw(text)?, &mut |d| {
        d.text
            .parse::<u32>()
            .map_err(|_| ParseError::new(d.position, format!("`{}` is not a basis index", d.text)))
    })
}

/// Parses a single tree (not the unit).
pub fn parse_tree(text: &str) -> Result<WeightedTree, ParseError> {
    match parse_basis(text)? {
        Basis::Tree(t) => Ok(t),
        Basis::Unit => Err(ParseError::new(0, "expected a tree, found the unit")),
    }
}

/// Resolves decorations with `lookup`, which maps a written decoration to a
/// basis index.
pub fn resolve(
    raw: RawBasis,
    lookup: &mut dyn FnMut(&RawDecoration) -> Result<u32, ParseError>,
) -> Result<Basis, ParseError> {
    let RawBasis::Tree(raw) = raw else {
        return Ok(Basis::Unit);
    };
    let decorations = if raw.decorations.iter().all(Option::is_none) {
        None
    } else {
        Some(
            raw.decorations
                .iter()
                .map(|d| lookup(d.as_ref().expect("checked uniform")))
                .collect::<Result<Vec<_>, _>>()?,
        )
    };
    Ok(Basis::Tree(
        WeightedTree::new(raw.shape, raw.weights, decorations)
            .expect("lengths match by construction"),
    ))
}

/// Splits `text` at top-level `+`/`-` into signed terms, then each term at a
/// top-level `*` into coefficient and body. Returns `(coef, body, offset)`.
pub fn split_terms(text: &str) -> Result<Vec<(Rational, String, usize)>, ParseError> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut sign = Rational::from_integer(1.into());
    let mut start = 0usize;
    let mut pending = false;
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let flush =
        |end: usize, sign: &Rational, start: usize, terms: &mut Vec<_>| -> Result<(), ParseError> {
            let body = &text[start..end];
            let trimmed = body.trim_start();
            let lead = body.len() - trimmed.len();
            let trimmed = trimmed.trim_end();
            if trimmed.is_empty() {
                return Err(ParseError::new(start, "empty term"));
            }
            let (coef, tree, off) = match top_level_star(trimmed) {
                Some(i) => {
                    let c = parse_rational(&trimmed[..i]).map_err(|e| e.shifted(start + lead))?;
                    let rest = &trimmed[i + 1..];
                    let rest_lead = rest.len() - rest.trim_start().len();
                    (c, rest.trim().to_string(), start + lead + i + 1 + rest_lead)
                }
                None => (
                    Rational::from_integer(1.into()),
                    trimmed.to_string(),
                    start + lead,
                ),
            };
            terms.push((sign * coef, tree, off));
            Ok(())
        };
    for &(i, ch) in &bytes {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let before = text[start..i].trim();
                // A sign directly after `*` or `/` belongs to the coefficient.
                let glued = before.ends_with('*') || before.ends_with('/');
                if glued {
                    continue;
                }
                if before.is_empty() {
                    if pending {
                        return Err(ParseError::new(i, "two signs in a row"));
                    }
                } else {
                    flush(i, &sign, start, &mut terms)?;
                }
                sign = if ch == '-' {
                    Rational::from_integer((-1).into())
                } else {
                    Rational::from_integer(1.into())
                };
                start = i + 1;
                pending = true;
                continue;
            }
            _ => {}
        }
        if !ch.is_whitespace() {
            pending = false;
        }
    }
    if depth != 0 {
        return Err(ParseError::new(text.len(), "unbalanced brackets"));
    }
    flush(text.len(), &sign, start, &mut terms)?;
    Ok(terms)
}

fn top_level_star(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '*' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Parses a linear combination of basis elements.
pub fn parse_raw_expression(text: &str) -> Result<Vec<(Rational, RawBasis)>, ParseError> {
    if text.trim() == "0" {
        return Ok(Vec::new());
    }
    split_terms(text)?
        .into_iter()
        .map(|(c, body, off)| parse_raw(&body).map(|b| (c, b)).map_err(|e| e.shifted(off)))
        .collect()
}

/// Parses `E + 1/2*H - F` into scaled names.
pub fn parse_name_combination(text: &str) -> Result<Vec<(Rational, String)>, ParseError> {
    split_terms(text)?
        .into_iter()
        .map(|(c, body, off)| {
            if body.is_empty()
                || !body
                    .chars()
                    .all(|ch| ch.is_alphanumeric() || ch == '_' || ch == '\'')
            {
                Err(ParseError::new(
                    off,
                    format!("`{body}` is not a basis name"),
                ))
            } else {
                Ok((c, body))
            }
        })
        .collect()
}
