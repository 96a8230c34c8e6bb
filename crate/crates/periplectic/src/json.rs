//! Canonical JSON form of a representation: all scalars as `"p/q"` strings in
//! lowest terms (integers without the `/1`), matrices row-major, generator
//! keys in `s1..`, `e1..`, `y1..` order. Emission is deterministic, so
//! emit → parse → emit is byte-identical.

use crate::linalg::{format_rational, parse_rational, ExactMatrix};
use crate::rep::{Algebra, Provenance, Representation};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub algebra: String,
    pub n: usize,
    pub k: Option<usize>,
    pub alpha: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub generators: Map<String, Value>,
}

fn matrix_value(m: &ExactMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| Value::String(format_rational(m.get(r, c))))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn matrix_from_value(v: &Value, dim: usize) -> Result<ExactMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("matrix must be an array of rows".into()))?;
    if rows.len() != dim {
        return Err(Error::InvalidInput(format!(
            "expected {dim} rows, got {}",
            rows.len()
        )));
    }
    let mut out = ExactMatrix::zero(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| Error::InvalidInput("matrix row must be an array".into()))?;
        if cells.len() != dim {
            return Err(Error::InvalidInput(format!(
                "expected {dim} columns, got {}",
                cells.len()
            )));
        }
        for (c, cell) in cells.iter().enumerate() {
            let s = cell
                .as_str()
                .ok_or_else(|| Error::InvalidInput("matrix entries must be strings".into()))?;
            out.set(r, c, parse_rational(s)?);
        }
    }
    Ok(out)
}

/// Serializable view of a representation.
pub fn rep_to_json(rep: &Representation) -> RepJson {
    let mut generators = Map::new();
    for i in 1..rep.n() {
        generators.insert(format!("s{i}"), matrix_value(rep.s(i)));
    }
    for i in 1..rep.n() {
        generators.insert(format!("e{i}"), matrix_value(rep.e(i)));
    }
    for j in 1..=rep.n() {
        generators.insert(format!("y{j}"), matrix_value(rep.y(j)));
    }
    RepJson {
        algebra: rep.algebra().as_str().to_string(),
        n: rep.n(),
        k: rep.exterior_degree(),
        alpha: format_rational(rep.alpha()),
        dimension: rep.dim(),
        basis: rep.basis_labels().to_vec(),
        generators,
    }
}

/// Canonical text emission (pretty-printed, trailing newline).
pub fn emit(rep_json: &RepJson) -> String {
    let mut s = serde_json::to_string_pretty(rep_json).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<RepJson> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))
}

/// Rebuilds a representation from its JSON view.
pub fn rep_from_json(rj: &RepJson) -> Result<Representation> {
    let algebra = match rj.algebra.as_str() {
        "sVV" => Algebra::SVV,
        "A" => Algebra::A,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown algebra {other:?} (expected \"sVV\" or \"A\")"
            )))
        }
    };
    let fetch = |key: String| -> Result<ExactMatrix> {
        let v = rj
            .generators
            .get(&key)
            .ok_or_else(|| Error::InvalidInput(format!("missing generator {key}")))?;
        matrix_from_value(v, rj.dimension)
    };
    let s_mats = (1..rj.n)
        .map(|i| fetch(format!("s{i}")))
        .collect::<Result<_>>()?;
    let e_mats = (1..rj.n)
        .map(|i| fetch(format!("e{i}")))
        .collect::<Result<_>>()?;
    let y_mats = (1..=rj.n)
        .map(|j| fetch(format!("y{j}")))
        .collect::<Result<_>>()?;
    Representation::from_parts(
        algebra,
        rj.n,
        parse_rational(&rj.alpha)?,
        s_mats,
        e_mats,
        y_mats,
        rj.basis.clone(),
        Provenance::Fixture("json".into()),
    )
}
