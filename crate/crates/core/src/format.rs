//! Text formats for exponent matrices.
//!
//! *Grid*: an optional header `q <q> n <rows> [m <cols>]`, then one line per row with
//! exponents separated by single spaces. Blank lines, `#` comments, `hline` rules and
//! `|`/`&` separators left over from typeset tables are ignored on input.
//!
//! *Structured*: a JSON document `{format_version: 1, q, n_rows, n_cols, rows}`.
//! [`write_json`] emits one canonical layout, and re-serialising a parsed canonical
//! document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::bmatrix::ExponentMatrix;
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub format_version: u32,
    pub q: u32,
    pub n_rows: usize,
    pub n_cols: usize,
    pub rows: Vec<Vec<u32>>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &ExponentMatrix) -> Self {
        MatrixDocument {
            format_version: FORMAT_VERSION,
            q: m.q(),
            n_rows: m.n_rows(),
            n_cols: m.n_cols(),
            rows: m.to_rows(),
        }
    }

    pub fn to_matrix(&self) -> Result<ExponentMatrix> {
        if self.format_version != FORMAT_VERSION {
            return Err(parse_err(1, 1, format!("unsupported format_version {}", self.format_version)));
        }
        if self.rows.len() != self.n_rows {
            return Err(parse_err(
                1,
                1,
                format!("n_rows is {} but {} rows are present", self.n_rows, self.rows.len()),
            ));
        }
        if let Some(i) = self.rows.iter().position(|r| r.len() != self.n_cols) {
            return Err(parse_err(
                1,
                1,
                format!("row {i} has {} entries, n_cols is {}", self.rows[i].len(), self.n_cols),
            ));
        }
        ExponentMatrix::from_rows(self.q, &self.rows)
            .map_err(|e| parse_err(1, 1, e.to_string()))
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Tokens of a line with their 1-based column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..idx]));
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, t)| (s + 1, t))
}

struct Header {
    q: u32,
    rows: usize,
    cols: Option<usize>,
}

fn parse_header(lineno: usize, line: &str) -> Result<Header> {
    let toks: Vec<(usize, &str)> = tokens(line).collect();
    let value = |idx: usize, key: &str| -> Result<usize> {
        match (toks.get(idx), toks.get(idx + 1)) {
            (Some((_, k)), Some((col, v))) if *k == key => v
                .parse::<usize>()
                .map_err(|_| parse_err(lineno, *col, format!("`{v}` is not a valid value for `{key}`"))),
            (Some((col, k)), _) => Err(parse_err(lineno, *col, format!("expected `{key}`, found `{k}`"))),
            (None, _) => Err(parse_err(lineno, line.len() + 1, format!("header is missing `{key}`"))),
        }
    };
    let q = value(0, "q")?;
    let rows = value(2, "n")?;
    let cols = if toks.len() > 4 { Some(value(4, "m")?) } else { None };
    if toks.len() > 6 {
        return Err(parse_err(lineno, toks[6].0, "unexpected trailing header field"));
    }
    let q = u32::try_from(q)
        .ok()
        .filter(|&q| q >= 1)
        .ok_or_else(|| parse_err(lineno, toks[1].0, "q must be a positive integer"))?;
    Ok(Header { q, rows, cols })
}

fn is_rule(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#') || t.starts_with('%') || t == "hline" || t == "\\hline"
}

/// Parses the grid format. `default_q` applies when no header is present.
pub fn parse_grid(text: &str, default_q: Option<u32>) -> Result<ExponentMatrix> {
    let mut header: Option<Header> = None;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut q = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        if is_rule(raw) {
            continue;
        }
        if rows.is_empty() && header.is_none() && raw.trim_start().starts_with('q') {
            let h = parse_header(lineno, raw)?;
            q = Some(h.q);
            header = Some(h);
            continue;
        }
        let q = match q {
            Some(q) => q,
            None => *q.insert(default_q.ok_or_else(|| {
                parse_err(lineno, 1, "no `q ... n ...` header and no default q given")
            })?),
        };
        let mut row = Vec::new();
        for (col, tok) in tokens(raw) {
            let tok = tok.trim_end_matches("\\\\");
            if tok.is_empty() || tok == "|" || tok == "&" {
                continue;
            }
            let v: u32 = tok
                .parse()
                .map_err(|_| parse_err(lineno, col, format!("`{tok}` is not an exponent")))?;
            if v >= q {
                return Err(parse_err(lineno, col, format!("exponent {v} is not below q = {q}")));
            }
            row.push(v);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(parse_err(
                    lineno,
                    1,
                    format!("row has {} entries, previous rows have {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(last_line.max(1), 1, "no matrix rows found"));
    }
    if let Some(h) = &header {
        if h.rows != rows.len() {
            return Err(parse_err(
                last_line,
                1,
                format!("header declares {} rows, found {}", h.rows, rows.len()),
            ));
        }
        let cols = h.cols.unwrap_or(h.rows);
        if cols != rows[0].len() {
            return Err(parse_err(
                last_line,
                1,
                format!("header declares {cols} columns, found {}", rows[0].len()),
            ));
        }
    }
    ExponentMatrix::from_rows(q.expect("set with the first row"), &rows)
        .map_err(|e| parse_err(1, 1, e.to_string()))
}

pub fn write_grid(m: &ExponentMatrix) -> String {
    let mut out = format!("q {} n {}", m.q(), m.n_rows());
    if !m.is_square() {
        out.push_str(&format!(" m {}", m.n_cols()));
    }
    out.push('\n');
    out.push_str(&m.to_string());
    out
}

pub fn parse_json(text: &str) -> Result<ExponentMatrix> {
    let doc: MatrixDocument = serde_json::from_str(text)
        .map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    doc.to_matrix()
}

pub fn write_json(m: &ExponentMatrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .map(|r| {
            let items: Vec<String> = r.iter().map(u32::to_string).collect();
            format!("    [{}]", items.join(", "))
        })
        .collect();
    format!(
        "{{\n  \"format_version\": {FORMAT_VERSION},\n  \"q\": {},\n  \"n_rows\": {},\n  \"n_cols\": {},\n  \"rows\": [\n{}\n  ]\n}}\n",
        m.q(),
        m.n_rows(),
        m.n_cols(),
        rows.join(",\n")
    )
}

/// Detects the format from the first non-blank character.
pub fn parse_matrix(text: &str, default_q: Option<u32>) -> Result<ExponentMatrix> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_grid(text, default_q)
    }
}
