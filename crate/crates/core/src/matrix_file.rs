//! JSON files holding a square Laurent matrix:
//!
//! ```json
//! {"n": 2, "field": "F5", "entries": [["t", "1"], ["0", "t^-1"]]}
//! ```
//!
//! `field` is `Q`, a concrete prime field such as `F5`, or the placeholder
//! `Fp` (the prime then has to come from the caller). Canonical lattices are
//! written in the same shape with extra `window` and `component` keys.

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, LaurentMatrix, LaurentPoly};
use crate::error::{Error, Result};
use crate::lattice_model::WindowLattice;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    n: usize,
    field: String,
    entries: Vec<Vec<String>>,
    // canonical-lattice outputs carry these; they are informational on input
    #[serde(default, rename = "window")]
    _window: Option<i64>,
    #[serde(default, rename = "component")]
    _component: Option<i64>,
}

#[derive(Serialize)]
struct OutFile {
    n: usize,
    field: String,
    entries: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    window: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    component: Option<i64>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn resolve_field(declared: &str, override_field: Option<Field>) -> Result<Field> {
    if declared == "Fp" {
        return override_field.ok_or_else(|| {
            Error::InvalidField("`Fp` needs an explicit prime (use F<p> or --field)".into())
        });
    }
    let field = Field::parse(declared)?;
    match override_field {
        Some(o) if o != field => Err(Error::FieldMismatch(field.to_string(), o.to_string())),
        _ => Ok(field),
    }
}

/// Line and column (1-based) of every JSON string literal in `src`, in order,
/// paired with its raw contents.
fn string_literals(src: &str) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = src.chars();
    while let Some(c) = chars.next() {
        if c == '"' {
            let (l0, c0) = (line, col);
            let mut raw = String::new();
            col += 1;
            while let Some(d) = chars.next() {
                col += 1;
                match d {
                    '\\' => {
                        raw.push(d);
                        if let Some(e) = chars.next() {
                            raw.push(e);
                            col += 1;
                        }
                    }
                    '"' => break,
                    _ => raw.push(d),
                }
            }
            out.push((l0, c0, raw));
        } else if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    out
}

/// Where the `k`-th entry string starts: the `k`-th literal after the
/// `"entries"` key. Falls back to the start of the file.
fn entry_position(src: &str, k: usize) -> (usize, usize) {
    let lits = string_literals(src);
    lits.iter()
        .position(|(_, _, s)| s == "entries")
        .and_then(|i| lits.get(i + 1 + k))
        .map_or((1, 1), |&(l, c, _)| (l, c + 1))
}

/// Reads a matrix file. `override_field` supplies the prime for `Fp` and must
/// agree with a concrete field named in the file.
pub fn parse_matrix_json(src: &str, override_field: Option<Field>) -> Result<LaurentMatrix> {
    let raw: RawFile =
        serde_json::from_str(src).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let field = resolve_field(&raw.field, override_field)?;
    if raw.n == 0 {
        return Err(parse_error(1, 1, "n must be positive"));
    }
    if raw.entries.len() != raw.n || raw.entries.iter().any(|r| r.len() != raw.n) {
        return Err(parse_error(
            1,
            1,
            format!("entries must be a {0}x{0} array", raw.n),
        ));
    }
    let mut rows = Vec::with_capacity(raw.n);
    for (i, row) in raw.entries.iter().enumerate() {
        let mut parsed = Vec::with_capacity(raw.n);
        for (j, s) in row.iter().enumerate() {
            let p = LaurentPoly::parse(field, s).map_err(|e| match e {
                Error::Parse {
                    column, message, ..
                } => {
                    let (line, start) = entry_position(src, i * raw.n + j);
                    parse_error(
                        line,
                        start + column - 1,
                        format!("entry [{i}][{j}]: {message}"),
                    )
                }
                other => other,
            })?;
            parsed.push(p);
        }
        rows.push(parsed);
    }
    LaurentMatrix::invertible(field, rows)
}

pub fn read_matrix_file(
    path: &std::path::Path,
    override_field: Option<Field>,
) -> Result<LaurentMatrix> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix_json(&src, override_field)
}

fn render(m: &LaurentMatrix, window: Option<i64>, component: Option<i64>) -> String {
    let doc = OutFile {
        n: m.size(),
        field: m.field().to_string(),
        entries: m
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect(),
        window,
        component,
    };
    serde_json::to_string(&doc).expect("plain data serialises")
}

pub fn matrix_to_json(m: &LaurentMatrix) -> String {
    render(m, None, None)
}

/// The generator `t^-N · basis` of a canonical lattice, plus its window and
/// component.
pub fn lattice_to_json(l: &WindowLattice) -> String {
    render(&l.generator(), Some(l.window()), Some(l.component()))
}
