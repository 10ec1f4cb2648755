//! Line-oriented text formats for algebras and modules.
//!
//! ```text
//! # cyclic, radical square zero
//! vertices: 1 2 3
//! arrow a1: 1 -> 2
//! arrow a2: 2 -> 3
//! arrow a3: 3 -> 1
//! relations: a1*a2, a2*a3, a3*a1
//! char: 2
//! ```
//!
//! ```text
//! module over cyclic3.alg
//! dims: 1 1 0
//! arrow a1: [[1]]
//! ```

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{FormatError, ParseError};
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::quiver::{Path, PathElement, Quiver};
use crate::rep::Representation;

pub const DEFAULT_CHARACTERISTIC: u32 = 2;

/// Parsed algebra file, before the residue basis is computed.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub quiver: Quiver,
    /// Coefficients as written; reduced mod p when the algebra is built.
    pub relations: Vec<Vec<(i64, Path)>>,
    pub characteristic: Option<u32>,
}

impl AlgebraSpec {
    /// `char_override` wins over the file's `char:` line, which wins over 2.
    pub fn build(&self, char_override: Option<u32>) -> Result<Arc<BoundQuiverAlgebra>, FormatError> {
        let p = char_override
            .or(self.characteristic)
            .unwrap_or(DEFAULT_CHARACTERISTIC);
        let field = Fp::new(p)?;
        let relations = self
            .relations
            .iter()
            .map(|terms| PathElement::from_terms(field, terms.iter().cloned()))
            .collect();
        Ok(BoundQuiverAlgebra::build(self.quiver.clone(), relations, p)?)
    }
}

struct Line<'a> {
    number: usize,
    /// Content with comments stripped.
    text: &'a str,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let text = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if text.trim().is_empty() {
            None
        } else {
            Some(Line { number: i + 1, text })
        }
    })
}

fn column_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

/// Splits `key: rest`, returning the key and the byte offset of `rest`.
fn split_key<'a>(line: &Line<'a>) -> Result<(&'a str, usize), ParseError> {
    let text = line.text;
    let lead = text.len() - text.trim_start().len();
    match text.find(':') {
        Some(k) => {
            let value = &text[k + 1..];
            Ok((text[..k].trim(), k + 1 + value.len() - value.trim_start().len()))
        }
        None => {
            let first = text.trim_start();
            if first.starts_with("module") {
                return Ok(("module", lead));
            }
            Err(ParseError::new(line.number, lead + 1, "expected `key: value`"))
        }
    }
}

/// Whitespace-separated words of `text[from..]` with their columns.
fn words(text: &str, from: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text[from..].char_indices() {
        let i = i + from;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((column_of(text, s), &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((column_of(text, s), &text[s..]));
    }
    out
}

pub fn parse_algebra_spec(text: &str) -> Result<AlgebraSpec, ParseError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, &str, usize)> = Vec::new();
    let mut characteristic = None;

    for line in lines(text) {
        let (key, rest) = split_key(&line)?;
        let value_col = column_of(line.text, rest);
        if key == "vertices" {
            if vertices.is_some() {
                return Err(ParseError::new(line.number, 1, "duplicate `vertices:` line"));
            }
            let names: Vec<String> = words(line.text, rest)
                .into_iter()
                .flat_map(|(_, w)| w.split(',').filter(|s| !s.is_empty()).map(str::to_string))
                .collect();
            vertices = Some(names);
        } else if let Some(label) = key.strip_prefix("arrow") {
            let label = label.trim();
            if label.is_empty() || label.contains(char::is_whitespace) {
                return Err(ParseError::new(line.number, 1, "expected `arrow <label>: <source> -> <target>`"));
            }
            let value = &line.text[rest..];
            let Some(k) = value.find("->") else {
                return Err(ParseError::new(line.number, value_col, "expected `<source> -> <target>`"));
            };
            let source = value[..k].trim();
            let target = value[k + 2..].trim();
            if source.is_empty() || target.is_empty() {
                return Err(ParseError::new(line.number, value_col, "missing arrow endpoint"));
            }
            arrows.push((label.to_string(), source.to_string(), target.to_string()));
        } else if key == "relations" {
            relation_lines.push((line.number, line.text, rest));
        } else if key == "char" {
            let value = line.text[rest..].trim();
            let p: u32 = value.parse().map_err(|_| {
                ParseError::new(line.number, value_col, format!("invalid characteristic `{value}`"))
            })?;
            characteristic = Some(p);
        } else {
            return Err(ParseError::new(line.number, 1, format!("unknown key `{key}`")));
        }
    }

    let vertices = vertices.ok_or_else(|| ParseError::new(1, 1, "missing `vertices:` line"))?;
    let quiver = Quiver::new(&vertices, &arrows).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let mut relations = Vec::new();
    for (number, text, rest) in relation_lines {
        relations.extend(parse_relations(&quiver, number, text, rest)?);
    }
    Ok(AlgebraSpec {
        quiver,
        relations,
        characteristic,
    })
}

/// Parses `r1, r2, ...` where each relation is a signed sum of
/// `[coefficient *] label * label * ...` terms.
fn parse_relations(
    quiver: &Quiver,
    number: usize,
    text: &str,
    from: usize,
) -> Result<Vec<Vec<(i64, Path)>>, ParseError> {
    let mut out = Vec::new();
    let mut start = from;
    for piece in text[from..].split(',') {
        let end = start + piece.len();
        if !piece.trim().is_empty() && piece.trim() != "-" {
            out.push(parse_relation(quiver, number, text, start, end)?);
        }
        start = end + 1;
    }
    Ok(out)
}

fn parse_relation(
    quiver: &Quiver,
    number: usize,
    text: &str,
    start: usize,
    end: usize,
) -> Result<Vec<(i64, Path)>, ParseError> {
    let err = |byte: usize, msg: String| ParseError::new(number, column_of(text, byte), msg);
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut term_start = start;
    let mut pending_sign = false;
    let bytes = text.as_bytes();
    let mut i = start;
    while i <= end {
        let at_end = i == end;
        let c = if at_end { b'+' } else { bytes[i] };
        if c == b'+' || c == b'-' {
            let body = &text[term_start..i];
            if body.trim().is_empty() {
                if at_end && pending_sign {
                    return Err(err(i, "dangling sign".into()));
                }
                if !at_end && c == b'-' {
                    sign = -sign;
                }
                pending_sign = true;
            } else {
                terms.push(parse_term(quiver, text, term_start, i, sign, &err)?);
                sign = if c == b'-' { -1 } else { 1 };
                pending_sign = !at_end;
            }
            term_start = i + 1;
        }
        i += 1;
    }
    if terms.is_empty() {
        return Err(err(start, "empty relation".into()));
    }
    Ok(terms)
}

fn parse_term(
    quiver: &Quiver,
    text: &str,
    start: usize,
    end: usize,
    sign: i64,
    err: &dyn Fn(usize, String) -> ParseError,
) -> Result<(i64, Path), ParseError> {
    let mut coef = sign;
    let mut arrows = Vec::new();
    let mut trivial = None;
    let mut factor_start = start;
    for factor in text[start..end].split('*') {
        let lead = factor.len() - factor.trim_start().len();
        let pos = factor_start + lead;
        let f = factor.trim();
        factor_start += factor.len() + 1;
        if f.is_empty() {
            return Err(err(pos, "empty factor".into()));
        }
        if f.bytes().all(|b| b.is_ascii_digit()) {
            if !arrows.is_empty() {
                return Err(err(pos, "coefficient must precede the path".into()));
            }
            let c: i64 = f.parse().map_err(|_| err(pos, format!("coefficient `{f}` out of range")))?;
            coef = coef.wrapping_mul(c);
        } else if let Some(a) = quiver.arrow_index(f) {
            arrows.push(a);
        } else if let Some(v) = f.strip_prefix('e').and_then(|v| quiver.vertex_index(v).ok()) {
            trivial = Some(v);
        } else {
            return Err(err(pos, format!("unknown arrow `{f}`")));
        }
    }
    let path = if arrows.is_empty() {
        match trivial {
            Some(v) => Path::trivial(v),
            None => return Err(err(start, "term has no path".into())),
        }
    } else {
        quiver
            .path(&arrows)
            .ok_or_else(|| err(start, "arrows do not compose".into()))?
    };
    Ok((coef, path))
}

pub fn parse_algebra(text: &str, char_override: Option<u32>) -> Result<Arc<BoundQuiverAlgebra>, FormatError> {
    parse_algebra_spec(text)?.build(char_override)
}

pub fn write_algebra(alg: &BoundQuiverAlgebra) -> String {
    let q = alg.quiver();
    let mut out = format!("vertices: {}\n", q.vertices().join(" "));
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {}: {} -> {}\n",
            a.label,
            q.vertex_name(a.source),
            q.vertex_name(a.target)
        ));
    }
    if !alg.relations().is_empty() {
        let rels: Vec<String> = alg
            .relations()
            .iter()
            .map(|r| {
                r.terms()
                    .iter()
                    .map(|(c, p)| {
                        let label = q.path_label(p);
                        if *c == 1 {
                            label
                        } else {
                            format!("{c}*{label}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            })
            .collect();
        out.push_str(&format!("relations: {}\n", rels.join(", ")));
    }
    out.push_str(&format!("char: {}\n", alg.characteristic()));
    out
}

/// Parsed module file; matrices are checked against an algebra in [`ModuleSpec::build`].
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    pub algebra_path: Option<String>,
    pub dims: Vec<usize>,
    pub arrows: Vec<(String, usize, Vec<Vec<i64>>)>,
    dims_line: usize,
}

pub fn parse_module_spec(text: &str) -> Result<ModuleSpec, ParseError> {
    let mut algebra_path = None;
    let mut dims = None;
    let mut dims_line = 1;
    let mut arrows = Vec::new();
    for line in lines(text) {
        let trimmed = line.text.trim_start();
        if let Some(rest) = trimmed.strip_prefix("module") {
            let rest = rest.trim();
            let path = rest.strip_prefix("over").map(str::trim).unwrap_or("");
            if path.is_empty() {
                return Err(ParseError::new(line.number, 1, "expected `module over <algebra-file>`"));
            }
            algebra_path = Some(path.to_string());
            continue;
        }
        let (key, rest) = split_key(&line)?;
        let value_col = column_of(line.text, rest);
        if key == "dims" {
            let mut ds = Vec::new();
            for (col, w) in words(line.text, rest) {
                for part in w.split(',').filter(|s| !s.is_empty()) {
                    ds.push(part.parse::<usize>().map_err(|_| {
                        ParseError::new(line.number, col, format!("invalid dimension `{part}`"))
                    })?);
                }
            }
            dims = Some(ds);
            dims_line = line.number;
        } else if let Some(label) = key.strip_prefix("arrow") {
            let label = label.trim();
            if label.is_empty() {
                return Err(ParseError::new(line.number, 1, "missing arrow label"));
            }
            let value = &line.text[rest..];
            let matrix: Vec<Vec<i64>> = serde_json::from_str(value.trim()).map_err(|e| {
                ParseError::new(line.number, value_col + e.column().saturating_sub(1), format!("invalid matrix: {e}"))
            })?;
            arrows.push((label.to_string(), line.number, matrix));
        } else {
            return Err(ParseError::new(line.number, 1, format!("unknown key `{key}`")));
        }
    }
    let dims = dims.ok_or_else(|| ParseError::new(1, 1, "missing `dims:` line"))?;
    Ok(ModuleSpec {
        algebra_path,
        dims,
        arrows,
        dims_line,
    })
}

impl ModuleSpec {
    /// Unlisted arrows act as zero.
    pub fn build(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation, FormatError> {
        let q = alg.quiver();
        let f = alg.field();
        if self.dims.len() != q.vertex_count() {
            return Err(ParseError::new(
                self.dims_line,
                1,
                format!("expected {} dimensions, got {}", q.vertex_count(), self.dims.len()),
            )
            .into());
        }
        let mut action: Vec<Option<Matrix>> = vec![None; q.arrow_count()];
        for (label, number, rows) in &self.arrows {
            let a = q
                .arrow_index(label)
                .ok_or_else(|| ParseError::new(*number, 1, format!("unknown arrow `{label}`")))?;
            if action[a].is_some() {
                return Err(ParseError::new(*number, 1, format!("arrow `{label}` given twice")).into());
            }
            let arrow = q.arrow(a);
            let (r, c) = (self.dims[arrow.target], self.dims[arrow.source]);
            let empty = rows.is_empty() || rows.iter().all(Vec::is_empty);
            let shape_ok = if r == 0 || c == 0 {
                empty && (rows.is_empty() || rows.len() == r)
            } else {
                rows.len() == r && rows.iter().all(|row| row.len() == c)
            };
            if !shape_ok {
                return Err(crate::error::RepError::ShapeMismatch {
                    arrow: label.clone(),
                    rows: r,
                    cols: c,
                    got_rows: rows.len(),
                    got_cols: rows.first().map_or(0, Vec::len),
                }
                .into());
            }
            let mut m = Matrix::zeros(f, r, c);
            for (i, row) in rows.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    m.set(i, j, f.from_i64(x));
                }
            }
            action[a] = Some(m);
        }
        let action = action
            .into_iter()
            .enumerate()
            .map(|(a, m)| {
                m.unwrap_or_else(|| {
                    let arrow = q.arrow(a);
                    Matrix::zeros(f, self.dims[arrow.target], self.dims[arrow.source])
                })
            })
            .collect();
        Ok(Representation::new(alg.clone(), self.dims.clone(), action)?)
    }
}

pub fn parse_module(text: &str, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation, FormatError> {
    parse_module_spec(text)?.build(alg)
}

fn matrix_json(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            let entries: Vec<String> = r.iter().map(u32::to_string).collect();
            format!("[{}]", entries.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Writes every arrow, including zero ones, so the output round-trips.
pub fn write_module(m: &Representation, algebra_path: &str) -> String {
    let q = m.algebra().quiver();
    let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    let mut out = format!("module over {algebra_path}\ndims: {}\n", dims.join(" "));
    for (a, arrow) in q.arrows().iter().enumerate() {
        out.push_str(&format!("arrow {}: {}\n", arrow.label, matrix_json(m.action(a))));
    }
    out
}
