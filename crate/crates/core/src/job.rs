//! Job files.
//!
//! ```text
//! # comment
//! [ring]
//! vars = x1 x2 x3 y1 y2
//! [ideal]
//! g = y1; y2
//! [matrix]
//! h = [[x3, x2], [x2, x1^2 - x3]]
//! [options]
//! a1 = zero            # or an integer, or `estimate`
//! f = x3*y1^2 + ...    # optional cross-check of g*H*g^t
//! ```
//!
//! A matrix may span several lines as long as its brackets stay open.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hessian::{A1Mode, SingularityInput};
use crate::poly::{parse_polynomial, PolyMatrix, Polynomial};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Section {
    Ring,
    Ideal,
    Matrix,
    Options,
}

impl Section {
    fn parse(name: &str) -> Option<Section> {
        Some(match name {
            "ring" => Section::Ring,
            "ideal" => Section::Ideal,
            "matrix" => Section::Matrix,
            "options" => Section::Options,
            _ => return None,
        })
    }
}

/// One `key = value` entry with the line it started on.
struct Entry {
    line: usize,
    section: Section,
    key: String,
    value: String,
}

fn job_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Job(format!("line {line}: {msg}"))
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn bracket_depth(s: &str) -> i64 {
    s.chars().map(|c| (c == '[') as i64 - (c == ']') as i64).sum()
}

fn entries(text: &str) -> Result<Vec<Entry>> {
    let mut out: Vec<Entry> = Vec::new();
    let mut section = None;
    let mut open: Option<Entry> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw).trim();
        if let Some(mut e) = open.take() {
            e.value.push(' ');
            e.value.push_str(body);
            if bracket_depth(&e.value) > 0 {
                open = Some(e);
            } else {
                out.push(e);
            }
            continue;
        }
        if body.is_empty() {
            continue;
        }
        if let Some(name) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let name = name.trim();
            section = Some(Section::parse(name).ok_or_else(|| job_err(line, format!("unknown section [{name}]")))?);
            continue;
        }
        let (key, value) = body.split_once('=').ok_or_else(|| job_err(line, "expected `key = value`"))?;
        let sec = section.ok_or_else(|| job_err(line, "entry outside any section"))?;
        let e = Entry { line, section: sec, key: key.trim().to_string(), value: value.trim().to_string() };
        if bracket_depth(&e.value) > 0 {
            open = Some(e);
        } else {
            out.push(e);
        }
    }
    if let Some(e) = open {
        return Err(job_err(e.line, "unclosed bracket"));
    }
    Ok(out)
}

/// Splits at top-level commas, ignoring commas nested in brackets or
/// parentheses.
fn split_top(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i64, 0);
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn bracketed(s: &str) -> Option<&str> {
    s.trim().strip_prefix('[')?.strip_suffix(']')
}

fn parse_matrix(text: &str, ring: &Arc<Ring>, line: usize) -> Result<PolyMatrix> {
    let inner = bracketed(text).ok_or_else(|| job_err(line, "matrix must look like [[p, q], [q, r]]"))?;
    let mut rows = Vec::new();
    for row in split_top(inner) {
        let cells = bracketed(row).ok_or_else(|| job_err(line, format!("malformed matrix row `{}`", row.trim())))?;
        let row = split_top(cells)
            .into_iter()
            .map(|c| parse_polynomial(c.trim(), ring).map_err(|e| job_err(line, e)))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    PolyMatrix::from_rows(ring, rows).map_err(|e| job_err(line, e))
}

fn parse_a1(value: &str, line: usize) -> Result<A1Mode> {
    match value {
        "zero" => Ok(A1Mode::AssumeZero),
        "estimate" => Ok(A1Mode::Estimate),
        v => v
            .parse::<u64>()
            .map(A1Mode::Provided)
            .map_err(|_| job_err(line, format!("a1 must be a non-negative integer, `zero` or `estimate`, got `{v}`"))),
    }
}

/// Parses a job file into a validated input. Every failure, including a
/// non-symmetric matrix, is a [`Error::Job`] naming the offending line.
pub fn parse_job(text: &str) -> Result<SingularityInput> {
    let entries = entries(text)?;
    let find = |sec: Section, key: &str| entries.iter().find(|e| e.section == sec && e.key == key);
    for e in &entries {
        let known = matches!(
            (e.section, e.key.as_str()),
            (Section::Ring, "vars") | (Section::Ideal, "g") | (Section::Matrix, "h") | (Section::Options, "a1" | "f")
        );
        if !known {
            return Err(job_err(e.line, format!("unknown key `{}`", e.key)));
        }
        if entries.iter().filter(|o| o.section == e.section && o.key == e.key).count() > 1 {
            return Err(job_err(e.line, format!("duplicate key `{}`", e.key)));
        }
    }

    let vars = find(Section::Ring, "vars").ok_or_else(|| Error::Job("missing [ring] vars".into()))?;
    let names: Vec<&str> = vars.value.split_whitespace().collect();
    let ring = Ring::new(&names).map_err(|e| job_err(vars.line, e))?;

    let g = find(Section::Ideal, "g").ok_or_else(|| Error::Job("missing [ideal] g".into()))?;
    let gens = g
        .value
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_polynomial(s, &ring).map_err(|e| job_err(g.line, e)))
        .collect::<Result<Vec<_>>>()?;

    let h = find(Section::Matrix, "h").ok_or_else(|| Error::Job("missing [matrix] h".into()))?;
    let matrix = parse_matrix(&h.value, &ring, h.line)?;
    if matrix.is_square() && !matrix.is_symmetric() {
        return Err(job_err(h.line, "H is not symmetric"));
    }

    let a1 = match find(Section::Options, "a1") {
        Some(e) => parse_a1(&e.value, e.line)?,
        None => A1Mode::default(),
    };
    let f: Option<Polynomial> = match find(Section::Options, "f") {
        Some(e) => Some(parse_polynomial(&e.value, &ring).map_err(|err| job_err(e.line, err))?),
        None => None,
    };
    SingularityInput::new(&ring, gens, matrix, f, a1).map_err(|e| Error::Job(e.to_string()))
}

/// Renders an input back into job syntax.
pub fn render_job(input: &SingularityInput) -> String {
    let h = input.h();
    let rows: Vec<String> = (0..h.rows())
        .map(|i| format!("[{}]", (0..h.cols()).map(|j| h.get(i, j).to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    let mut out = format!(
        "[ring]\nvars = {}\n[ideal]\ng = {}\n[matrix]\nh = [{}]\n",
        input.ring().vars().join(" "),
        input.g().iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        rows.join(", ")
    );
    let a1 = match input.a1_mode() {
        A1Mode::AssumeZero => None,
        A1Mode::Estimate => Some("estimate".to_string()),
        A1Mode::Provided(v) => Some(v.to_string()),
    };
    if a1.is_some() || input.f_expected().is_some() {
        out.push_str("[options]\n");
    }
    if let Some(a1) = a1 {
        out.push_str(&format!("a1 = {a1}\n"));
    }
    if let Some(f) = input.f_expected() {
        out.push_str(&format!("f = {f}\n"));
    }
    out
}
