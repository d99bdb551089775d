//! JSON input formats.
//!
//! A matrix is an array of rows, each an array of entries in the polynomial
//! text format, e.g. `[["0", "-1"], ["1", "0"]]`. Integer JSON numbers are
//! accepted as entries too. A tuple file is an object with keys `"a"`, `"b"`
//! (lists of 2×2 matrices) and `"m"` (a 2×2 matrix); only `"a"` is required.

use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rings::{parse_scalar, Field, QuotientRing, RingElement, Scalar};

fn entry_text(v: &Value, i: usize, j: usize) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(Error::Input(format!("entry ({i}, {j}) must be a string, found {other}"))),
    }
}

fn matrix_from_value<T: crate::linalg::Element>(
    v: &Value,
    mut parse: impl FnMut(&str) -> Result<T>,
) -> Result<Matrix<T>> {
    let rows = v.as_array().ok_or_else(|| Error::Input("a matrix must be an array of rows".into()))?;
    if rows.is_empty() {
        return Err(Error::Shape("a matrix needs at least one row".into()));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        let entries = r.as_array().ok_or_else(|| Error::Input(format!("row {i} must be an array")))?;
        let mut parsed = Vec::with_capacity(entries.len());
        for (j, e) in entries.iter().enumerate() {
            let text = entry_text(e, i, j)?;
            let value = parse(&text).map_err(|err| match err {
                Error::Parse { position, message } => {
                    Error::Parse { position, message: format!("in entry ({i}, {j}) `{text}`: {message}") }
                }
                other => other,
            })?;
            parsed.push(value);
        }
        out.push(parsed);
    }
    Matrix::from_rows(out)
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column())))
}

pub fn scalar_matrix_from_json(text: &str, field: Field) -> Result<Matrix<Scalar>> {
    matrix_from_value(&parse_json(text)?, |s| parse_scalar(s, field))
}

pub fn ring_matrix_from_json(text: &str, ring: &Arc<QuotientRing>) -> Result<Matrix<RingElement>> {
    matrix_from_value(&parse_json(text)?, |s| RingElement::parse(ring, s))
}

pub fn matrix_to_json<T: crate::linalg::Element>(m: &Matrix<T>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|e| Value::String(e.to_string())).collect()))
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct TupleInput {
    pub a: Vec<Matrix<Scalar>>,
    pub b: Option<Vec<Matrix<Scalar>>>,
    pub m: Option<Matrix<Scalar>>,
}

pub fn tuple_from_json(text: &str, field: Field) -> Result<TupleInput> {
    let v = parse_json(text)?;
    let obj = v.as_object().ok_or_else(|| Error::Input("a tuple file must be a JSON object".into()))?;
    if let Some(k) = obj.keys().find(|k| !matches!(k.as_str(), "a" | "b" | "m")) {
        return Err(Error::Input(format!("unknown key `{k}` in tuple file")));
    }
    let list = |key: &str| -> Result<Option<Vec<Matrix<Scalar>>>> {
        let Some(v) = obj.get(key) else {
            return Ok(None);
        };
        let items = v.as_array().ok_or_else(|| Error::Input(format!("`{key}` must be a list of matrices")))?;
        items.iter().map(|m| matrix_from_value(m, |s| parse_scalar(s, field))).collect::<Result<Vec<_>>>().map(Some)
    };
    let a = list("a")?.ok_or_else(|| Error::Input("tuple file is missing `a`".into()))?;
    let b = list("b")?;
    let m = obj.get("m").map(|m| matrix_from_value(m, |s| parse_scalar(s, field))).transpose()?;
    Ok(TupleInput { a, b, m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_scalar_and_ring_matrices() {
        let f = Field::prime(5).unwrap();
        let w = scalar_matrix_from_json(r#"[["0", "-1"], ["1", 0]]"#, f).unwrap();
        assert_eq!(w, crate::linalg::symplectic_w(&f.one()));
        assert_eq!(matrix_to_json(&w).to_string(), r#"[["0","4"],["1","0"]]"#);
        let r = QuotientRing::sphere(f, 2);
        let m = ring_matrix_from_json(r#"[["1", "0"], ["0", "x0"]]"#, &r).unwrap();
        assert_eq!(m.get(1, 1), &RingElement::var(&r, 0));
    }

    #[test]
    fn malformed_inputs() {
        let f = Field::prime(5).unwrap();
        assert!(matches!(scalar_matrix_from_json("[[1, 2], [3]]", f), Err(Error::Shape(_))));
        assert!(matches!(scalar_matrix_from_json("{", f), Err(Error::Input(_))));
        match scalar_matrix_from_json(r#"[["1", "2 +"]]"#, f) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("entry (0, 1)")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tuple_files() {
        let f = Field::prime(5).unwrap();
        let t = tuple_from_json(r#"{"a": [[["0","1"],["0","0"]], [["0","0"],["1","0"]]], "m": [["1","2"],["3","4"]]}"#, f).unwrap();
        assert_eq!(t.a.len(), 2);
        assert!(t.b.is_none());
        assert!(t.m.is_some());
        assert!(tuple_from_json(r#"{"b": []}"#, f).is_err());
        assert!(tuple_from_json(r#"{"a": [], "z": 1}"#, f).is_err());
    }
}
