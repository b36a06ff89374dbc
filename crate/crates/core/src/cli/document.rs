//! Line-oriented algebra definition files.
//!
//! ```text
//! # comment
//! name total_assoc_2dim
//! field Q                      # or: field Qsqrt 5
//! dim 2
//! arity 3
//! product (1,1,2) = 1*e2
//! product (2,2,2) = (0 + 7/5*r)*e1 - (0 + 4/5*r)*e2
//! alpha 1 = [[1,1],[0,-1]]
//! map rho = [[1,1],[0,-1]]
//! ```
//!
//! Indices are 1-based. Unlisted products are zero and unlisted alphas are
//! identities. Coefficients with a radical part are wrapped in parentheses.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::exactnum::{FieldContext, QuadScalar, ScalarError};
use crate::{ExactAlgebra, ExactMap, ExactVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct DocumentError {
    /// 1-based; 0 for errors about the document as a whole.
    pub line: usize,
    pub message: String,
}

impl DocumentError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        DocumentError {
            line,
            message: message.into(),
        }
    }
}

/// Parsed contents of an algebra definition file.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraDocument {
    pub name: Option<String>,
    pub field: FieldContext,
    pub dim: usize,
    pub arity: usize,
    /// Nonzero products keyed by 0-based tuple.
    pub products: BTreeMap<Vec<usize>, ExactVector>,
    /// Explicit twist maps keyed by 0-based position.
    pub alphas: BTreeMap<usize, ExactMap>,
    pub maps: BTreeMap<String, ExactMap>,
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();

        let mut name = None;
        let mut field = None;
        let mut dim = None;
        let mut arity = None;
        for &(no, line) in &lines {
            let (key, rest) = split_keyword(line);
            match key {
                "name" => set_once(&mut name, no, "name", parse_name(no, rest)?)?,
                "field" => set_once(&mut field, no, "field", parse_field(no, rest)?)?,
                "dim" => set_once(&mut dim, no, "dim", parse_count(no, rest, "dim")?)?,
                "arity" => set_once(&mut arity, no, "arity", parse_count(no, rest, "arity")?)?,
                "product" | "alpha" | "map" => {}
                other => {
                    return Err(DocumentError::at(
                        no,
                        format!("unknown directive `{other}`"),
                    ))
                }
            }
        }
        let field = field.unwrap_or_default();
        let dim = dim.ok_or_else(|| DocumentError::at(0, "missing `dim`"))?;
        let arity = arity.ok_or_else(|| DocumentError::at(0, "missing `arity`"))?;
        if arity < 2 {
            return Err(DocumentError::at(0, "arity must be at least 2"));
        }

        let mut doc = AlgebraDocument {
            name,
            field,
            dim,
            arity,
            products: BTreeMap::new(),
            alphas: BTreeMap::new(),
            maps: BTreeMap::new(),
        };
        for &(no, line) in &lines {
            let (key, rest) = split_keyword(line);
            match key {
                "product" => {
                    let (lhs, rhs) = split_assignment(no, rest)?;
                    let tuple = parse_tuple(no, lhs, dim, arity)?;
                    let value = parse_terms(no, rhs, dim, field)?;
                    if doc.products.contains_key(&tuple) {
                        return Err(DocumentError::at(
                            no,
                            format!("product {} listed twice", tuple_text(&tuple)),
                        ));
                    }
                    if !value.is_zero() {
                        doc.products.insert(tuple, value);
                    }
                }
                "alpha" => {
                    let (lhs, rhs) = split_assignment(no, rest)?;
                    let j = lhs
                        .parse::<usize>()
                        .ok()
                        .filter(|j| (1..arity).contains(j))
                        .ok_or_else(|| {
                            DocumentError::at(
                                no,
                                format!("alpha index must be in 1..{}", arity - 1),
                            )
                        })?;
                    let m = parse_matrix(no, rhs, dim, field)?;
                    if doc.alphas.insert(j - 1, m).is_some() {
                        return Err(DocumentError::at(no, format!("alpha {j} given twice")));
                    }
                }
                "map" => {
                    let (lhs, rhs) = split_assignment(no, rest)?;
                    let map_name = parse_name(no, lhs)?;
                    let m = parse_matrix(no, rhs, dim, field)?;
                    if doc.maps.insert(map_name.clone(), m).is_some() {
                        return Err(DocumentError::at(
                            no,
                            format!("map `{map_name}` given twice"),
                        ));
                    }
                }
                _ => {}
            }
        }
        Ok(doc)
    }

    /// Canonical text form; `parse(dump(d)) == d`.
    pub fn dump(&self) -> String {
        self.dump_with_header(&[])
    }

    /// [`dump`](Self::dump) preceded by `# `-comment lines.
    pub fn dump_with_header(&self, header: &[String]) -> String {
        let mut out = String::new();
        for line in header {
            let _ = writeln!(out, "# {line}");
        }
        if let Some(name) = &self.name {
            let _ = writeln!(out, "name {name}");
        }
        let _ = match self.field {
            FieldContext::Rational => writeln!(out, "field Q"),
            FieldContext::Quadratic(d) => writeln!(out, "field Qsqrt {d}"),
        };
        let _ = writeln!(out, "dim {}", self.dim);
        let _ = writeln!(out, "arity {}", self.arity);
        for (tuple, value) in &self.products {
            let _ = writeln!(
                out,
                "product {} = {}",
                tuple_text(tuple),
                format_terms(value)
            );
        }
        for (j, m) in &self.alphas {
            let _ = writeln!(out, "alpha {} = {}", j + 1, format_matrix(m));
        }
        for (name, m) in &self.maps {
            let _ = writeln!(out, "map {name} = {}", format_matrix(m));
        }
        out
    }

    /// Document for an algebra; twist maps are written only when the algebra
    /// is not classical.
    pub fn from_algebra(alg: &ExactAlgebra) -> Self {
        let alphas = if alg.is_classical() {
            BTreeMap::new()
        } else {
            alg.alphas().iter().cloned().enumerate().collect()
        };
        AlgebraDocument {
            name: Some(alg.name().to_string()).filter(|n| is_name(n)),
            field: alg.context(),
            dim: alg.dim(),
            arity: alg.arity(),
            products: alg
                .nonzero_products()
                .map(|(t, v)| (t, v.clone()))
                .collect(),
            alphas,
            maps: BTreeMap::new(),
        }
    }

    pub fn with_map(mut self, name: &str, map: ExactMap) -> Result<Self, ScalarError> {
        self.field = self.field.join(map.context())?;
        self.maps.insert(name.to_string(), map);
        Ok(self)
    }

    pub fn to_algebra(&self) -> Result<ExactAlgebra, AlgebraError> {
        let alg = ExactAlgebra::from_products(
            self.name.clone().unwrap_or_else(|| "algebra".to_string()),
            self.dim,
            self.arity,
            self.products.iter().map(|(t, v)| (t.clone(), v.clone())),
        )?
        .with_context(self.field)?;
        if self.alphas.is_empty() {
            return Ok(alg);
        }
        let alphas = (0..self.arity - 1)
            .map(|j| {
                self.alphas
                    .get(&j)
                    .cloned()
                    .unwrap_or_else(|| ExactMap::identity(self.dim))
            })
            .collect();
        alg.with_alphas(alphas)
    }

    pub fn map(&self, name: &str) -> Option<&ExactMap> {
        self.maps.get(name)
    }
}

fn split_keyword(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((k, rest)) => (k, rest.trim()),
        None => (line, ""),
    }
}

fn set_once<T>(
    slot: &mut Option<T>,
    line: usize,
    key: &str,
    value: T,
) -> Result<(), DocumentError> {
    if slot.replace(value).is_some() {
        return Err(DocumentError::at(line, format!("`{key}` given twice")));
    }
    Ok(())
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| {
            c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '(' | ')' | ',' | '/')
        })
}

fn parse_name(line: usize, text: &str) -> Result<String, DocumentError> {
    if is_name(text) {
        Ok(text.to_string())
    } else {
        Err(DocumentError::at(line, format!("bad name `{text}`")))
    }
}

fn parse_field(line: usize, text: &str) -> Result<FieldContext, DocumentError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["Q"] => Ok(FieldContext::Rational),
        ["Qsqrt", d] => {
            let d: u64 = d
                .parse()
                .map_err(|_| DocumentError::at(line, format!("bad extension `{d}`")))?;
            FieldContext::quadratic(d).map_err(|e| DocumentError::at(line, e.to_string()))
        }
        _ => Err(DocumentError::at(
            line,
            format!("bad field `{text}`, expected `Q` or `Qsqrt d`"),
        )),
    }
}

fn parse_count(line: usize, text: &str, key: &str) -> Result<usize, DocumentError> {
    text.parse::<usize>()
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| {
            DocumentError::at(
                line,
                format!("`{key}` must be a positive integer, got `{text}`"),
            )
        })
}

fn split_assignment(line: usize, text: &str) -> Result<(&str, &str), DocumentError> {
    text.split_once('=')
        .map(|(l, r)| (l.trim(), r.trim()))
        .ok_or_else(|| DocumentError::at(line, "expected `=`"))
}

fn tuple_text(tuple: &[usize]) -> String {
    let parts: Vec<String> = tuple.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

fn parse_index(line: usize, text: &str, dim: usize) -> Result<usize, DocumentError> {
    let i: usize = text
        .trim()
        .parse()
        .map_err(|_| DocumentError::at(line, format!("bad index `{text}`")))?;
    if i == 0 || i > dim {
        return Err(DocumentError::at(
            line,
            format!("index {i} out of range 1..{dim}"),
        ));
    }
    Ok(i - 1)
}

fn parse_tuple(
    line: usize,
    text: &str,
    dim: usize,
    arity: usize,
) -> Result<Vec<usize>, DocumentError> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| DocumentError::at(line, format!("expected `(i1,...,in)`, got `{text}`")))?;
    let tuple = inner
        .split(',')
        .map(|p| parse_index(line, p, dim))
        .collect::<Result<Vec<_>, _>>()?;
    if tuple.len() != arity {
        return Err(DocumentError::at(
            line,
            format!(
                "arity mismatch: tuple has {} entries, arity is {arity}",
                tuple.len()
            ),
        ));
    }
    Ok(tuple)
}

/// A scalar, optionally wrapped in one pair of parentheses.
fn scalar(line: usize, text: &str, field: FieldContext) -> Result<QuadScalar, DocumentError> {
    let text = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    QuadScalar::parse(text, field).map_err(|e| DocumentError::at(line, scalar_message(e)))
}

fn scalar_message(e: ScalarError) -> String {
    match e {
        ScalarError::RadicalInRationalField(s) => {
            format!("context mismatch: radical scalar `{s}` in field Q")
        }
        other => other.to_string(),
    }
}

/// `c1*e_k1 ± c2*e_k2 …`, where each `c` is a rational or a parenthesized
/// scalar and may be omitted; `0` is the zero vector.
fn parse_terms(
    line: usize,
    text: &str,
    dim: usize,
    field: FieldContext,
) -> Result<ExactVector, DocumentError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coords = vec![QuadScalar::zero(); dim];
    if compact == "0" {
        return Ok(ExactVector::new(coords));
    }
    let bad = || DocumentError::at(line, format!("malformed product value `{text}`"));
    // split on top-level signs
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    let mut negative = false;
    for (pos, ch) in compact.chars().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or_else(bad)?,
            '+' | '-' if depth == 0 => {
                if pos > 0 {
                    if current.is_empty() {
                        return Err(bad());
                    }
                    terms.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    if depth != 0 || current.is_empty() {
        return Err(bad());
    }
    terms.push((negative, current));

    for (negative, term) in terms {
        let (coeff_text, basis) = match term.rsplit_once('*') {
            Some((c, b)) => (Some(c), b),
            None => (None, term.as_str()),
        };
        let k = basis.strip_prefix('e').ok_or_else(|| {
            DocumentError::at(line, format!("expected basis vector `e<k>` in `{term}`"))
        })?;
        let k = parse_index(line, k, dim)?;
        let mut c = match coeff_text {
            None => QuadScalar::one(),
            Some(c) => scalar(line, c, field)?,
        };
        if negative {
            c = -c;
        }
        coords[k] = &coords[k] + &c;
    }
    Ok(ExactVector::new(coords))
}

fn format_terms(v: &ExactVector) -> String {
    let mut out = String::new();
    for (k, c) in v.support() {
        let leading_negative = if c.rational_part().is_zero() {
            c.radical_part().is_negative()
        } else {
            c.rational_part().is_negative()
        };
        let magnitude = if leading_negative {
            -c.clone()
        } else {
            c.clone()
        };
        let sign = match (out.is_empty(), leading_negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let coeff = if magnitude.is_rational() {
            magnitude.to_string()
        } else {
            format!("({magnitude})")
        };
        let _ = write!(out, "{sign}{coeff}*e{}", k + 1);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_matrix(
    line: usize,
    text: &str,
    dim: usize,
    field: FieldContext,
) -> Result<ExactMap, DocumentError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| DocumentError::at(line, format!("expected `[[..],[..]]`, got `{text}`")))?;
    let rows = inner
        .split("],[")
        .map(|row| {
            row.split(',')
                .map(|s| scalar(line, s, field))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(DocumentError::at(
            line,
            format!("matrix must be {dim}x{dim}"),
        ));
    }
    ExactMap::from_rows(rows).map_err(|e| DocumentError::at(line, e.to_string()))
}

fn format_matrix(m: &ExactMap) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let entries: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
