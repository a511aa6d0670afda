use serde_json::{json, Value};

use knotoid_core::{InvariantValue, PartitionReport};

fn strings<T: ToString>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Integers stay integers, polynomials and maps become strings, matrices
/// are row-major nested arrays and multisets are sorted arrays.
pub fn value_json(value: &InvariantValue) -> Value {
    match value {
        InvariantValue::Count(c) => json!(c),
        InvariantValue::Matrix(m) => json!(m.entries),
        InvariantValue::Polynomial(p) => Value::String(p.to_string()),
        InvariantValue::Permutations(ps) => strings(ps),
        InvariantValue::Pairs(ps) => Value::Array(
            ps.iter()
                .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                .collect(),
        ),
        InvariantValue::Affine(ms) => strings(ms),
        InvariantValue::PolynomialMatrix(m) => Value::Array(m.entries.iter().map(|row| strings(row)).collect()),
    }
}

pub fn report_json(report: &PartitionReport) -> Value {
    let groups: Vec<Value> = report
        .groups
        .iter()
        .map(|g| {
            json!({
                "canonical": g.value.canonical(),
                "value": value_json(&g.value),
                "names": g.names,
            })
        })
        .collect();
    json!({ "invariant": report.invariant.name(), "groups": groups })
}
