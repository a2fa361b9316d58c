//! Line-oriented text formats for algebras and modules.
//!
//! Both formats are UTF-8, `#` starts a comment, blank lines are ignored,
//! and every integer is reduced mod `p` on load. Serialization is canonical
//! (fixed ordering, single spaces, `\n` endings), so serialize-parse-
//! serialize is byte-identical.
//!
//! Algebra format:
//! ```text
//! p <prime>
//! dim <d>
//! unit <d integers>
//! mult <i> <j> <d integers>    # one line per nonzero product e_i e_j
//! ```
//! Missing `mult` lines default to the zero product; a duplicate `(i, j)`
//! is an error.
//!
//! Module format:
//! ```text
//! module-of <algebra-name>
//! mdim <m>
//! act <i>
//! <m rows of m integers>       # repeated for each algebra basis index
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{AlgebraRef, StructureAlgebra};
use crate::field::PrimeField;
use crate::mat::Mat;
use crate::module::RightModule;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> Vec<(usize, Vec<String>)> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let stripped = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let fields: Vec<String> = stripped.split_whitespace().map(str::to_string).collect();
            if fields.is_empty() {
                None
            } else {
                Some((idx + 1, fields))
            }
        })
        .collect()
}

fn parse_u64(line: usize, s: &str, what: &str) -> Result<u64, ParseError> {
    s.parse()
        .map_err(|_| err(line, format!("invalid {what}: {s:?}")))
}

fn parse_usize(line: usize, s: &str, what: &str) -> Result<usize, ParseError> {
    s.parse()
        .map_err(|_| err(line, format!("invalid {what}: {s:?}")))
}

fn parse_vector(
    line: usize,
    fields: &[String],
    expected: usize,
    what: &str,
) -> Result<Vec<u64>, ParseError> {
    if fields.len() != expected {
        return Err(err(
            line,
            format!("{what} needs {expected} integers, got {}", fields.len()),
        ));
    }
    fields.iter().map(|s| parse_u64(line, s, what)).collect()
}

/// Parses the algebra format. The name is external metadata (callers pass
/// the file stem or a constructed label).
pub fn parse_algebra(text: &str, name: &str) -> Result<StructureAlgebra, ParseError> {
    let lines = content_lines(text);
    let mut p: Option<(usize, u64)> = None;
    let mut dim: Option<usize> = None;
    let mut unit: Option<Vec<u64>> = None;
    let mut mult: Vec<Option<Vec<u64>>> = Vec::new();
    let mut seen_mult: Vec<bool> = Vec::new();
    for (ln, fields) in &lines {
        let ln = *ln;
        match fields[0].as_str() {
            "p" => {
                if p.is_some() {
                    return Err(err(ln, "duplicate p line"));
                }
                if fields.len() != 2 {
                    return Err(err(ln, "p line needs one integer"));
                }
                p = Some((ln, parse_u64(ln, &fields[1], "prime")?));
            }
            "dim" => {
                if dim.is_some() {
                    return Err(err(ln, "duplicate dim line"));
                }
                if fields.len() != 2 {
                    return Err(err(ln, "dim line needs one integer"));
                }
                let d = parse_usize(ln, &fields[1], "dimension")?;
                if d == 0 {
                    return Err(err(ln, "dimension must be at least 1"));
                }
                dim = Some(d);
                mult = vec![None; d * d];
                seen_mult = vec![false; d * d];
            }
            "unit" => {
                let d = dim.ok_or_else(|| err(ln, "unit line before dim"))?;
                if unit.is_some() {
                    return Err(err(ln, "duplicate unit line"));
                }
                unit = Some(parse_vector(
                    ln,
                    &fields[1..],
                    d,
                    "unit coefficient vector",
                )?);
            }
            "mult" => {
                let d = dim.ok_or_else(|| err(ln, "mult line before dim"))?;
                if fields.len() != 3 + d {
                    return Err(err(ln, format!("mult line needs i j and {d} integers")));
                }
                let i = parse_usize(ln, &fields[1], "basis index")?;
                let j = parse_usize(ln, &fields[2], "basis index")?;
                if i >= d || j >= d {
                    return Err(err(
                        ln,
                        format!("mult indices ({i}, {j}) out of range for dim {d}"),
                    ));
                }
                if seen_mult[i * d + j] {
                    return Err(err(ln, format!("duplicate mult line for ({i}, {j})")));
                }
                seen_mult[i * d + j] = true;
                mult[i * d + j] = Some(parse_vector(ln, &fields[3..], d, "product coefficients")?);
            }
            other => return Err(err(ln, format!("unknown directive {other:?}"))),
        }
    }
    let (pline, p) =
        p.ok_or_else(|| err(lines.last().map(|l| l.0).unwrap_or(1), "missing p line"))?;
    let field = PrimeField::new(p).map_err(|e| err(pline, e.to_string()))?;
    let d = dim.ok_or_else(|| err(pline, "missing dim line"))?;
    let unit = unit.ok_or_else(|| err(pline, "missing unit line"))?;
    let mult: Vec<Vec<u64>> = mult
        .into_iter()
        .map(|m| m.unwrap_or_else(|| vec![0; d]))
        .collect();
    Ok(StructureAlgebra::from_tables(field, d, mult, unit, name))
}

/// Canonical serialization of an algebra (zero products omitted).
pub fn serialize_algebra(a: &StructureAlgebra) -> String {
    let mut out = String::new();
    let d = a.dim();
    writeln!(out, "p {}", a.field().modulus()).unwrap();
    writeln!(out, "dim {d}").unwrap();
    writeln!(out, "unit {}", join(a.unit())).unwrap();
    for i in 0..d {
        for j in 0..d {
            let prod = a.basis_product(i, j);
            if prod.iter().any(|&c| c != 0) {
                writeln!(out, "mult {i} {j} {}", join(prod)).unwrap();
            }
        }
    }
    out
}

fn join(v: &[u64]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses the module format over the given algebra.
pub fn parse_module(text: &str, algebra: &AlgebraRef) -> Result<RightModule, ParseError> {
    let lines = content_lines(text);
    let mut cursor = 0usize;
    let next = |cursor: &mut usize| -> Option<&(usize, Vec<String>)> {
        let item = lines.get(*cursor);
        *cursor += 1;
        item
    };
    let (ln, fields) = next(&mut cursor).ok_or_else(|| err(1, "empty module file"))?;
    if fields[0] != "module-of" || fields.len() != 2 {
        return Err(err(*ln, "expected: module-of <algebra-name>"));
    }
    if fields[1] != algebra.name() {
        return Err(err(
            *ln,
            format!(
                "module is over {:?} but the supplied algebra is {:?}",
                fields[1],
                algebra.name()
            ),
        ));
    }
    let (ln, fields) = next(&mut cursor).ok_or_else(|| err(*ln, "missing mdim line"))?;
    if fields[0] != "mdim" || fields.len() != 2 {
        return Err(err(*ln, "expected: mdim <m>"));
    }
    let m = parse_usize(*ln, &fields[1], "module dimension")?;
    let d = algebra.dim();
    let field = algebra.field();
    let mut action: Vec<Option<Mat>> = vec![None; d];
    while let Some((ln, fields)) = next(&mut cursor) {
        if fields[0] != "act" || fields.len() != 2 {
            return Err(err(*ln, "expected: act <i>"));
        }
        let i = parse_usize(*ln, &fields[1], "basis index")?;
        if i >= d {
            return Err(err(*ln, format!("act index {i} out of range for dim {d}")));
        }
        if action[i].is_some() {
            return Err(err(*ln, format!("duplicate act block for index {i}")));
        }
        let mut rows = Vec::with_capacity(m);
        for _ in 0..m {
            let (rln, rfields) = next(&mut cursor)
                .ok_or_else(|| err(*ln, format!("act {i}: missing matrix rows")))?;
            rows.push(parse_vector(*rln, rfields, m, "matrix row")?);
        }
        action[i] = Some(Mat::from_rows(field, m, &rows));
    }
    let action: Vec<Mat> = action
        .into_iter()
        .enumerate()
        .map(|(i, a)| {
            a.ok_or_else(|| {
                err(
                    lines.last().map(|l| l.0).unwrap_or(1),
                    format!("missing act block for index {i}"),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(RightModule::new(algebra.clone(), m, action))
}

/// Canonical serialization of a module (all action blocks, ascending).
pub fn serialize_module(m: &RightModule) -> String {
    let mut out = String::new();
    writeln!(out, "module-of {}", m.algebra().name()).unwrap();
    writeln!(out, "mdim {}", m.mdim()).unwrap();
    for i in 0..m.algebra().dim() {
        writeln!(out, "act {i}").unwrap();
        for r in 0..m.mdim() {
            writeln!(out, "{}", join(m.act(i).row(r))).unwrap();
        }
    }
    out
}

/// Loads an algebra from a file, naming it after the file stem.
pub fn load_algebra_file(path: &std::path::Path) -> Result<AlgebraRef, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("algebra");
    let alg = parse_algebra(&text, name).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Arc::new(alg))
}
