use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;

use super::matrix::{add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
use crate::error::{Error, Result};
use crate::foundation::{parse_rational, rat, Rational};

/// Finite-dimensional Hom-Lie algebra given by structure constants and the
/// matrix of `alpha`. `alpha[i][j]` is the coefficient of `e_i` in `alpha(e_j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    name: String,
    basis: Vec<String>,
    /// `table[i][j]` is `[e_i, e_j]` in coordinates.
    table: Vec<Vec<Vector>>,
    alpha: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    SkewSymmetry,
    Multiplicativity,
    HomJacobi,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::SkewSymmetry => "skew-symmetry",
            Law::Multiplicativity => "multiplicativity",
            Law::HomJacobi => "Hom-Jacobi",
        })
    }
}

/// A failed axiom on specific basis elements, with the nonzero defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
    pub residual: Vector,
}

impl Violation {
    pub fn describe(&self, names: &[String]) -> String {
        let w: Vec<&str> = self.witness.iter().map(|&i| names[i].as_str()).collect();
        let r: Vec<String> = self.residual.iter().map(ToString::to_string).collect();
        format!(
            "{} fails on ({}), residual [{}]",
            self.law,
            w.join(", "),
            r.join(", ")
        )
    }
}

#[derive(Deserialize)]
struct AlgebraFile {
    #[serde(default)]
    name: String,
    basis: Vec<String>,
    #[serde(default)]
    bracket: BTreeMap<String, BTreeMap<String, Value>>,
    alpha: Option<Vec<Vec<Value>>>,
}

fn value_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() => {
            Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into()))
        }
        other => Err(Error::Algebra(format!(
            "expected a rational string, found {other}"
        ))),
    }
}

impl HomLieAlgebra {
    /// Builds an algebra from a full bracket table; the table is taken as is
    /// (see [`HomLieAlgebra::validate`]).
    pub fn from_table(
        name: impl Into<String>,
        basis: Vec<String>,
        table: Vec<Vec<Vector>>,
        alpha: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::Algebra("the basis is empty".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for b in &basis {
            if !seen.insert(b) {
                return Err(Error::Algebra(format!("duplicate basis name `{b}`")));
            }
            if b.is_empty()
                || !b
                    .chars()
                    .all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
            {
                return Err(Error::Algebra(format!("invalid basis name `{b}`")));
            }
        }
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::Algebra("bracket table has the wrong shape".into()));
        }
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::Algebra(format!("alpha must be {n}x{n}")));
        }
        Ok(HomLieAlgebra {
            name: name.into(),
            basis,
            table,
            alpha,
        })
    }

    /// Like `from_table` without checks; allows the zero algebra.
    pub(crate) fn from_parts(
        name: impl Into<String>,
        basis: Vec<String>,
        table: Vec<Vec<Vector>>,
        alpha: Matrix,
    ) -> Self {
        HomLieAlgebra {
            name: name.into(),
            basis,
            table,
            alpha,
        }
    }

    /// Builds an algebra from brackets `[e_i, e_j]` with `i < j`; the rest is
    /// filled in by skew-symmetry.
    pub fn from_brackets(
        name: impl Into<String>,
        basis: &[&str],
        brackets: &[(usize, usize, Vector)],
        alpha: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        let mut table = vec![vec![zero_vector(n); n]; n];
        let mut set = std::collections::HashSet::new();
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || v.len() != n {
                return Err(Error::Algebra(format!("bracket ({i},{j}) out of range")));
            }
            if i == j {
                return Err(Error::Algebra(format!("diagonal bracket ({i},{i})")));
            }
            let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
            if !set.insert((a, b)) {
                return Err(Error::Algebra(format!("bracket ({a},{b}) given twice")));
            }
            let s = Rational::from_integer(sign.into());
            table[a][b] = v.iter().map(|x| x * &s).collect();
            table[b][a] = v.iter().map(|x| -(x * &s)).collect();
        }
        Self::from_table(
            name,
            basis.iter().map(|s| s.to_string()).collect(),
            table,
            alpha,
        )
    }

    /// Reads the JSON description. Bracket keys are `"i,j"` with 0-based
    /// indices or basis names; `"j,i"` is accepted and negated. A missing
    /// `alpha` means the identity.
    pub fn from_json(text: &str) -> Result<Self> {
        let f: AlgebraFile = serde_json::from_str(text)?;
        let n = f.basis.len();
        let lookup = |tok: &str| -> Result<usize> {
            let tok = tok.trim();
            if let Some(i) = f.basis.iter().position(|b| b == tok) {
                return Ok(i);
            }
            match tok.parse::<usize>() {
                Ok(i) if i < n => Ok(i),
                _ => Err(Error::Algebra(format!("unknown basis element `{tok}`"))),
            }
        };
        let mut brackets = Vec::new();
        for (key, vals) in &f.bracket {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| Error::Algebra(format!("bracket key `{key}` is not `i,j`")))?;
            let (i, j) = (lookup(a)?, lookup(b)?);
            let mut v = zero_vector(n);
            for (k, c) in vals {
                v[lookup(k)?] += value_rational(c)?;
            }
            brackets.push((i, j, v));
        }
        let alpha = match &f.alpha {
            None => Matrix::identity(n),
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::Algebra(format!("alpha must be {n}x{n}")));
                }
                Matrix::from_rows(
                    rows.iter()
                        .map(|r| r.iter().map(value_rational).collect::<Result<Vec<_>>>())
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        let names: Vec<&str> = f.basis.iter().map(String::as_str).collect();
        Self::from_brackets(f.name.clone(), &names, &brackets, alpha)
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let mut bracket = serde_json::Map::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.table[i][j];
                if is_zero_vector(v) {
                    continue;
                }
                let mut m = serde_json::Map::new();
                for (k, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        m.insert(self.basis[k].clone(), Value::String(c.to_string()));
                    }
                }
                bracket.insert(
                    format!("{},{}", self.basis[i], self.basis[j]),
                    Value::Object(m),
                );
            }
        }
        let alpha: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    self.alpha
                        .row(i)
                        .iter()
                        .map(|c| Value::String(c.to_string()))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "basis": self.basis,
            "bracket": bracket,
            "alpha": alpha,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn alpha_matrix(&self) -> &Matrix {
        &self.alpha
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &self.table[i][j], &(a * b));
                }
            }
        }
        out
    }

    pub fn alpha(&self, x: &[Rational]) -> Vector {
        self.alpha.apply(x)
    }

    /// Stable text identifying the structure, used as a cache key.
    pub fn fingerprint(&self) -> String {
        self.to_json().to_string()
    }

    /// Checks skew-symmetry, multiplicativity of `alpha` and Hom-Jacobi on
    /// all basis pairs and triples, in that order.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let mut s = self.table[i][j].clone();
                if i != j {
                    add_scaled(&mut s, &self.table[j][i], &rat(1));
                }
                if !is_zero_vector(&s) {
                    return Err(Violation {
                        law: Law::SkewSymmetry,
                        witness: vec![i, j],
                        residual: s,
                    });
                }
            }
        }
        let images: Vec<Vector> = (0..n).map(|i| self.alpha.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let mut d = self.alpha(&self.table[i][j]);
                add_scaled(&mut d, &self.bracket(&images[i], &images[j]), &rat(-1));
                if !is_zero_vector(&d) {
                    return Err(Violation {
                        law: Law::Multiplicativity,
                        witness: vec![i, j],
                        residual: d,
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = self.jacobiator(i, j, k, &images);
                    if !is_zero_vector(&d) {
                        return Err(Violation {
                            law: Law::HomJacobi,
                            witness: vec![i, j, k],
                            residual: d,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize, images: &[Vector]) -> Vector {
        let mut d = self.bracket(&images[i], &self.table[j][k]);
        let one = rat(1);
        add_scaled(&mut d, &self.bracket(&images[j], &self.table[k][i]), &one);
        add_scaled(&mut d, &self.bracket(&images[k], &self.table[i][j]), &one);
        d
    }

    /// `(g, alpha o [,], alpha)` for an endomorphism `alpha` of this bracket.
    pub fn twist(&self, alpha: Matrix, name: impl Into<String>) -> Result<HomLieAlgebra> {
        let n = self.dim();
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::Algebra(format!("alpha must be {n}x{n}")));
        }
        let images: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                if alpha.apply(&self.table[i][j]) != self.bracket(&images[i], &images[j]) {
                    return Err(Error::NotEndomorphism(i, j));
                }
            }
        }
        let table = (0..n)
            .map(|i| (0..n).map(|j| alpha.apply(&self.table[i][j])).collect())
            .collect();
        Self::from_table(name, self.basis.clone(), table, alpha)
    }

    /// Direct sum with another algebra; basis names must not clash.
    pub fn direct_sum(
        &self,
        other: &HomLieAlgebra,
        name: impl Into<String>,
    ) -> Result<HomLieAlgebra> {
        let (n, m) = (self.dim(), other.dim());
        let d = n + m;
        let mut table = vec![vec![zero_vector(d); d]; d];
        for i in 0..n {
            for j in 0..n {
                table[i][j][..n].clone_from_slice(&self.table[i][j]);
            }
        }
        for i in 0..m {
            for j in 0..m {
                table[n + i][n + j][n..].clone_from_slice(&other.table[i][j]);
            }
        }
        let mut alpha = Matrix::zeros(d, d);
        for i in 0..n {
            for j in 0..n {
                alpha.set(i, j, self.alpha.get(i, j).clone());
            }
        }
        for i in 0..m {
            for j in 0..m {
                alpha.set(n + i, n + j, other.alpha.get(i, j).clone());
            }
        }
        let basis = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::from_table(name, basis, table, alpha)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// Parses `E + 1/2*H` into coordinates.
    pub fn parse_element(&self, text: &str) -> Result<Vector> {
        let mut v = zero_vector(self.dim());
        for (c, name) in crate::trees::codec::parse_name_combination(text)? {
            let i = self
                .index_of(&name)
                .ok_or_else(|| Error::Algebra(format!("unknown basis element `{name}`")))?;
            v[i] += c;
        }
        Ok(v)
    }

    pub fn format_element(&self, v: &[Rational]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*{}", self.basis[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Debug for HomLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomLieAlgebra({}, {:?})", self.name, self.basis)
    }
}
