//! The matrix document format.
//!
//! ```text
//! # comment lines start with '#'
//! format: selfint-matrix 1
//! n: 3
//! structure: antibidiagonal
//! a: 1
//! b: 1 1
//! c: 1 1
//! rows:
//! 0 0 1
//! 0 1 1
//! 1 1 0
//! ```
//!
//! Header lines are `key: value`. Numbers are exact: integers (`3`),
//! fractions (`3/7`) or decimals (`0.25`, `1e-9`), never binary floats.
//! `rows:` introduces exactly `n` lines of `n` numbers each. A structured
//! document may omit the rows; they are then built from the parameter
//! lines. When both are present they must agree.

use selfint::rational::to_exact_string;
use selfint::{
    anti_bidiagonal, anti_jacobi, bidiagonal_upper, jacobi_matrix, parse_rational,
    AntiBidiagonalSpec, JacobiSpec, Matrix, Rational,
};

use crate::CliError;

pub const FORMAT_LINE: &str = "selfint-matrix 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    General,
    Bidiagonal,
    AntiBidiagonal,
    Jacobi,
    AntiJacobi,
}

impl Structure {
    fn parse(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "general" => Structure::General,
            "bidiagonal" => Structure::Bidiagonal,
            "antibidiagonal" => Structure::AntiBidiagonal,
            "jacobi" => Structure::Jacobi,
            "antijacobi" => Structure::AntiJacobi,
            other => return Err(CliError::input(format!("unknown structure {other:?}"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Structure::General => "general",
            Structure::Bidiagonal => "bidiagonal",
            Structure::AntiBidiagonal => "antibidiagonal",
            Structure::Jacobi => "jacobi",
            Structure::AntiJacobi => "antijacobi",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    pub a: Option<Vec<Rational>>,
    pub b: Option<Vec<Rational>>,
    pub c: Option<Vec<Rational>>,
    pub d: Option<Vec<Rational>>,
    pub e: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub structure: Structure,
    pub params: Params,
    pub matrix: Matrix,
    pub comments: Vec<String>,
}

pub fn parse_numbers(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(CliError::from))
        .collect()
}

fn need<'a>(
    p: &'a Option<Vec<Rational>>,
    key: &str,
    structure: Structure,
) -> Result<&'a [Rational], CliError> {
    p.as_deref().ok_or_else(|| {
        CliError::input(format!(
            "structure {} needs a '{key}:' line",
            structure.name()
        ))
    })
}

/// Builds the matrix a structure tag and its parameters describe.
pub fn build_structured(structure: Structure, params: &Params) -> Result<Option<Matrix>, CliError> {
    let m = match structure {
        Structure::General => return Ok(None),
        Structure::Bidiagonal => bidiagonal_upper(
            need(&params.d, "d", structure)?,
            need(&params.e, "e", structure)?,
        )?,
        Structure::AntiBidiagonal => {
            let a = need(&params.a, "a", structure)?;
            if a.len() != 1 {
                return Err(CliError::input(
                    "antibidiagonal 'a:' takes exactly one value",
                ));
            }
            let spec = AntiBidiagonalSpec::new(
                a[0].clone(),
                need(&params.b, "b", structure)?.to_vec(),
                need(&params.c, "c", structure)?.to_vec(),
            )?;
            anti_bidiagonal(&spec)
        }
        Structure::Jacobi | Structure::AntiJacobi => {
            let spec = JacobiSpec::new(
                need(&params.a, "a", structure)?.to_vec(),
                need(&params.b, "b", structure)?.to_vec(),
                need(&params.c, "c", structure)?.to_vec(),
            )?;
            if structure == Structure::Jacobi {
                jacobi_matrix(&spec)
            } else {
                anti_jacobi(&spec)
            }
        }
    };
    Ok(Some(m))
}

pub fn parse_document(text: &str) -> Result<MatrixDocument, CliError> {
    let mut n: Option<usize> = None;
    let mut structure = Structure::General;
    let mut params = Params::default();
    let mut rows: Option<Vec<Vec<Rational>>> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| CliError::input(format!("line {}: {msg}", lineno + 1));
        if let Some(rows) = rows.as_mut() {
            rows.push(parse_numbers(line).map_err(|e| at(e.to_string()))?);
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| at(format!("expected 'key: value', got {line:?}")))?;
        let value = value.trim();
        let slot = match key.trim() {
            "format" => {
                if value != FORMAT_LINE {
                    return Err(at(format!("unsupported format {value:?}")));
                }
                continue;
            }
            "n" => {
                n = Some(
                    value
                        .parse()
                        .map_err(|_| at(format!("bad dimension {value:?}")))?,
                );
                continue;
            }
            "structure" => {
                structure = Structure::parse(value).map_err(|e| at(e.to_string()))?;
                continue;
            }
            "rows" => {
                if !value.is_empty() {
                    return Err(at("'rows:' must be on its own line".into()));
                }
                rows = Some(Vec::new());
                continue;
            }
            "a" => &mut params.a,
            "b" => &mut params.b,
            "c" => &mut params.c,
            "d" => &mut params.d,
            "e" => &mut params.e,
            other => return Err(at(format!("unknown key {other:?}"))),
        };
        *slot = Some(parse_numbers(value).map_err(|e| at(e.to_string()))?);
    }

    let built = build_structured(structure, &params)?;
    let matrix = match (rows, built) {
        (Some(rows), built) => {
            if rows.is_empty() {
                return Err(CliError::input("'rows:' is followed by no rows"));
            }
            let m = Matrix::from_rows(rows)?;
            if let Some(b) = built {
                if b != m {
                    return Err(CliError::input(format!(
                        "rows do not match the {} parameters",
                        structure.name()
                    )));
                }
            }
            m
        }
        (None, Some(b)) => b,
        (None, None) => return Err(CliError::input("document has no 'rows:' section")),
    };
    if let Some(n) = n {
        if n != matrix.n() {
            return Err(CliError::input(format!(
                "header says n = {n} but the matrix is {0}x{0}",
                matrix.n()
            )));
        }
    }
    Ok(MatrixDocument {
        structure,
        params,
        matrix,
        comments: Vec::new(),
    })
}

fn join(v: &[Rational]) -> String {
    v.iter().map(to_exact_string).collect::<Vec<_>>().join(" ")
}

pub fn render_document(doc: &MatrixDocument) -> String {
    let mut out = String::new();
    for c in &doc.comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("format: {FORMAT_LINE}\n"));
    out.push_str(&format!("n: {}\n", doc.matrix.n()));
    out.push_str(&format!("structure: {}\n", doc.structure.name()));
    let p = &doc.params;
    for (key, value) in [
        ("a", &p.a),
        ("b", &p.b),
        ("c", &p.c),
        ("d", &p.d),
        ("e", &p.e),
    ] {
        if let Some(v) = value {
            out.push_str(&format!("{key}: {}\n", join(v)));
        }
    }
    out.push_str("rows:\n");
    out.push_str(&doc.matrix.to_string());
    out
}
