//! Canonical JSON interchange for symmetric functions, charged states and
//! matrix descriptions.
//!
//! Writers emit a unique byte representation: term lists are sorted by
//! power-sum monomial (reverse-lexicographic on the part vectors) and
//! coefficient terms by their parameter monomial; object keys are sorted by
//! serde_json itself. Readers accept the fields in any order.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::coef::{CoefPoly, ParamMono};
use crate::error::{Error, Result};
use crate::fields::ChargedState;
use crate::matrix::{MatrixKind, RowDefault, RowFiniteMatrix};
use crate::partition::Partition;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::symfun::SymFun;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadDocument(msg.into())
}

// ---------------------------------------------------------------------------
// CoefPoly
// ---------------------------------------------------------------------------

pub fn coef_to_value(c: &CoefPoly) -> Value {
    let mut terms: Vec<(&ParamMono, &Rat)> = c.terms().collect();
    terms.sort_by(|a, b| a.0.cmp(b.0));
    Value::Array(
        terms
            .into_iter()
            .map(|(mono, val)| {
                let params: Map<String, Value> = mono
                    .iter()
                    .map(|(k, &e)| (k.clone(), json!(e)))
                    .collect();
                json!({ "params": params, "value": format_rat(val) })
            })
            .collect(),
    )
}

pub fn coef_from_value(v: &Value) -> Result<CoefPoly> {
    let arr = v.as_array().ok_or_else(|| bad("coef must be an array"))?;
    let mut out = CoefPoly::zero();
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| bad("coef term must be an object"))?;
        let mut mono = ParamMono::new();
        if let Some(params) = obj.get("params") {
            let pobj = params
                .as_object()
                .ok_or_else(|| bad("params must be an object"))?;
            for (name, exp) in pobj {
                let e = exp
                    .as_u64()
                    .ok_or_else(|| bad(format!("exponent of {name} must be a nonnegative integer")))?;
                if e > 0 {
                    mono.insert(name.clone(), e as u32);
                }
            }
        }
        let val = obj
            .get("value")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("coef term needs a string `value`"))?;
        out.add_term(mono, parse_rat(val)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// SymFun
// ---------------------------------------------------------------------------

pub fn symfun_to_value(f: &SymFun) -> Value {
    let mut terms: Vec<(&Partition, &CoefPoly)> = f.terms().collect();
    // reverse-lexicographic on the part vectors: larger monomials first
    terms.sort_by(|a, b| b.0.cmp(a.0));
    let arr: Vec<Value> = terms
        .into_iter()
        .map(|(mu, c)| {
            json!({
                "pmono": mu.parts(),
                "coef": coef_to_value(c),
            })
        })
        .collect();
    json!({ "terms": arr })
}

pub fn symfun_to_string(f: &SymFun) -> String {
    symfun_to_value(f).to_string()
}

pub fn symfun_from_value(v: &Value) -> Result<SymFun> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad("symmetric function must be an object"))?;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing `terms` array"))?;
    let mut out = SymFun::zero();
    for term in terms {
        let tobj = term
            .as_object()
            .ok_or_else(|| bad("term must be an object"))?;
        let pmono = tobj
            .get("pmono")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("term needs a `pmono` array"))?;
        let parts: Option<Vec<i64>> = pmono.iter().map(Value::as_i64).collect();
        let parts = parts.ok_or_else(|| bad("pmono entries must be integers"))?;
        let mu = Partition::new(parts)?;
        let coef = tobj
            .get("coef")
            .ok_or_else(|| bad("term needs a `coef` array"))?;
        out.add_term(mu, coef_from_value(coef)?);
    }
    Ok(out)
}

pub fn symfun_from_str(s: &str) -> Result<SymFun> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    symfun_from_value(&v)
}

// ---------------------------------------------------------------------------
// ChargedState
// ---------------------------------------------------------------------------

pub fn charged_to_value(s: &ChargedState) -> Value {
    json!({ "charge": s.charge, "body": symfun_to_value(&s.body) })
}

pub fn charged_to_string(s: &ChargedState) -> String {
    charged_to_value(s).to_string()
}

/// Accepts either a charged-state object or a bare symmetric function
/// (read as charge 0).
pub fn charged_from_str(s: &str) -> Result<ChargedState> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
    if let Some(charge) = obj.get("charge") {
        let m = charge
            .as_i64()
            .ok_or_else(|| bad("charge must be an integer"))?;
        let body = obj.get("body").ok_or_else(|| bad("missing `body`"))?;
        Ok(ChargedState::new(m, symfun_from_value(body)?))
    } else {
        Ok(ChargedState::new(0, symfun_from_value(&v)?))
    }
}

// ---------------------------------------------------------------------------
// Matrix descriptions
// ---------------------------------------------------------------------------

pub fn matrix_to_value(a: &RowFiniteMatrix) -> Value {
    match a.kind() {
        MatrixKind::Explicit { default, rows } => {
            let rows_v: Vec<Value> = rows
                .iter()
                .map(|(&i, row)| {
                    let entries: Vec<Value> = row
                        .iter()
                        .map(|(&j, c)| json!({ "j": j, "coef": coef_to_value(c) }))
                        .collect();
                    json!({ "i": i, "entries": entries })
                })
                .collect();
            let default = match default {
                RowDefault::Identity => "identity",
                RowDefault::Zero => "zero",
            };
            json!({ "kind": "explicit", "default": default, "rows": rows_v })
        }
        MatrixKind::Toeplitz { symbol } => {
            let entries: Vec<Value> = symbol
                .iter()
                .map(|(&k, c)| json!({ "k": k, "coef": coef_to_value(c) }))
                .collect();
            json!({ "kind": "toeplitz", "params": { "symbol": entries } })
        }
        MatrixKind::Cumulative => json!({ "kind": "cumulative", "params": {} }),
        MatrixKind::Multiparameter { a } => {
            let vals: Vec<Value> = a.iter().map(|r| json!(format_rat(r))).collect();
            json!({ "kind": "multiparameter", "params": { "a": vals } })
        }
        MatrixKind::Pascal => json!({ "kind": "pascal", "params": {} }),
        MatrixKind::BinomialSeriesRows { lambda } => {
            json!({ "kind": "grothendieck-dual", "params": { "lambda": lambda } })
        }
        other => json!({ "kind": "internal", "note": format!("{other:?}") }),
    }
}

pub fn matrix_from_str(s: &str) -> Result<RowFiniteMatrix> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    matrix_from_value(&v)
}

pub fn matrix_from_value(v: &Value) -> Result<RowFiniteMatrix> {
    let obj = v.as_object().ok_or_else(|| bad("matrix must be an object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("matrix needs a string `kind`"))?;
    let params = obj.get("params");
    let get_params = || -> Result<&Map<String, Value>> {
        params
            .and_then(Value::as_object)
            .ok_or_else(|| bad(format!("kind `{kind}` needs a `params` object")))
    };
    let kind = match kind {
        "explicit" => {
            let default = match obj.get("default").and_then(Value::as_str) {
                None | Some("identity") => RowDefault::Identity,
                Some("zero") => RowDefault::Zero,
                Some(other) => return Err(bad(format!("unknown default `{other}`"))),
            };
            let mut rows = BTreeMap::new();
            if let Some(list) = obj.get("rows") {
                let list = list.as_array().ok_or_else(|| bad("rows must be an array"))?;
                for rv in list {
                    let robj = rv.as_object().ok_or_else(|| bad("row must be an object"))?;
                    let i = robj
                        .get("i")
                        .and_then(Value::as_i64)
                        .ok_or_else(|| bad("row needs an integer `i`"))?;
                    let mut row = BTreeMap::new();
                    let entries = robj
                        .get("entries")
                        .and_then(Value::as_array)
                        .ok_or_else(|| bad("row needs an `entries` array"))?;
                    for ev in entries {
                        let eobj = ev.as_object().ok_or_else(|| bad("entry must be an object"))?;
                        let j = eobj
                            .get("j")
                            .and_then(Value::as_i64)
                            .ok_or_else(|| bad("entry needs an integer `j`"))?;
                        let c = eobj
                            .get("coef")
                            .ok_or_else(|| bad("entry needs a `coef`"))?;
                        row.insert(j, coef_from_value(c)?);
                    }
                    rows.insert(i, row);
                }
            }
            MatrixKind::Explicit { default, rows }
        }
        "toeplitz" => {
            let p = get_params()?;
            let list = p
                .get("symbol")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("toeplitz needs params.symbol"))?;
            let mut symbol = BTreeMap::new();
            for ev in list {
                let eobj = ev.as_object().ok_or_else(|| bad("symbol entry must be an object"))?;
                let k = eobj
                    .get("k")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| bad("symbol entry needs integer `k`"))?;
                let c = eobj.get("coef").ok_or_else(|| bad("symbol entry needs `coef`"))?;
                symbol.insert(k, coef_from_value(c)?);
            }
            if symbol.is_empty() {
                return Err(bad("toeplitz symbol must be nonempty"));
            }
            MatrixKind::Toeplitz { symbol }
        }
        "cumulative" => MatrixKind::Cumulative,
        "multiparameter" => {
            let p = get_params()?;
            let list = p
                .get("a")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("multiparameter needs params.a"))?;
            let mut a = Vec::new();
            for item in list {
                let s = item
                    .as_str()
                    .ok_or_else(|| bad("parameters must be rational strings"))?;
                a.push(parse_rat(s)?);
            }
            MatrixKind::Multiparameter { a }
        }
        "pascal" => MatrixKind::Pascal,
        "grothendieck-dual" => {
            let p = get_params()?;
            let list = p
                .get("lambda")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("grothendieck-dual needs params.lambda"))?;
            let lambda: Option<Vec<i64>> = list.iter().map(Value::as_i64).collect();
            let lambda = lambda.ok_or_else(|| bad("lambda entries must be integers"))?;
            if !(lambda.iter().all(|&p| p > 0) && lambda.windows(2).all(|w| w[0] > w[1])) {
                return Err(bad("grothendieck-dual lambda must be strict and positive"));
            }
            MatrixKind::BinomialSeriesRows { lambda }
        }
        other => return Err(bad(format!("unknown matrix kind `{other}`"))),
    };
    Ok(RowFiniteMatrix::new(kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::hall_littlewood;
    use crate::rat::{rat, ratq};

    #[test]
    fn hall_littlewood_row_one_bytes() {
        // canonical bytes for the first Hall-Littlewood function
        let f = hall_littlewood(&[1]);
        assert_eq!(
            symfun_to_string(&f),
            r#"{"terms":[{"coef":[{"params":{},"value":"1"},{"params":{"t":1},"value":"-1"}],"pmono":[1]}]}"#
        );
    }

    #[test]
    fn symfun_round_trip_and_reader_tolerance() {
        let f = hall_littlewood(&[2, 1]);
        let s = symfun_to_string(&f);
        assert_eq!(symfun_from_str(&s).unwrap(), f);
        // identical invocations, identical bytes
        assert_eq!(s, symfun_to_string(&hall_littlewood(&[2, 1])));
        // scrambled key order still parses
        let scrambled = r#"{"terms":[{"coef":[{"value":"3/2","params":{"t":2}}],"pmono":[2,1]}]}"#;
        let g = symfun_from_str(scrambled).unwrap();
        let mut expect = SymFun::zero();
        let mut c = CoefPoly::zero();
        let mut mono = ParamMono::new();
        mono.insert("t".into(), 2);
        c.add_term(mono, ratq(3, 2));
        expect.add_term(Partition::new(vec![2, 1]).unwrap(), c);
        assert_eq!(g, expect);
    }

    #[test]
    fn charged_state_round_trip() {
        let s = ChargedState::new(-2, &SymFun::p(2) + &SymFun::one());
        let text = charged_to_string(&s);
        let back = charged_from_str(&text).unwrap();
        assert!(back.eq_state(&s));
        // bare symmetric function reads as charge zero
        let bare = symfun_to_string(&SymFun::p(1));
        assert_eq!(charged_from_str(&bare).unwrap().charge, 0);
    }

    #[test]
    fn matrix_round_trip() {
        let mut symbol = std::collections::BTreeMap::new();
        symbol.insert(-1, CoefPoly::param("c"));
        symbol.insert(0, CoefPoly::one());
        let mats = vec![
            crate::gallery::toeplitz_matrix(symbol),
            crate::gallery::cumulative_matrix(),
            crate::gallery::pascal_matrix(),
            crate::gallery::multiparameter_matrix(vec![
                rat(1),
                ratq(1, 2),
                rat(3),
                ratq(-2, 5),
                rat(7),
                rat(2),
            ]),
            crate::gallery::grothendieck_dual_matrix(&[3, 1]),
        ];
        for a in mats {
            let text = matrix_to_value(&a).to_string();
            let back = matrix_from_str(&text).unwrap();
            for i in -4..=4 {
                for j in -4..=4 {
                    assert_eq!(a.entry(i, j), back.entry(i, j), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn explicit_matrix_from_document() {
        let doc = r#"{
            "kind": "explicit",
            "default": "identity",
            "rows": [
                { "i": -2, "entries": [
                    { "j": -2, "coef": [ { "params": {}, "value": "1" } ] },
                    { "j": 0, "coef": [ { "params": {"a": 1}, "value": "1" } ] }
                ] }
            ]
        }"#;
        let a = matrix_from_str(doc).unwrap();
        assert!(a.entry(-2, -2).is_one());
        assert_eq!(a.entry(-2, 0), CoefPoly::param("a"));
        assert!(a.entry(0, 0).is_one());
        assert!(a.entry(-2, -1).is_zero());
    }

    #[test]
    fn malformed_documents_error() {
        assert!(symfun_from_str("not json").is_err());
        assert!(symfun_from_str(r#"{"terms": 3}"#).is_err());
        assert!(symfun_from_str(r#"{"terms":[{"pmono":[1,2],"coef":[]}]}"#).is_err());
        assert!(matrix_from_str(r#"{"kind":"diagonal"}"#).is_err());
        assert!(matrix_from_str(r#"{"kind":"grothendieck-dual","params":{"lambda":[1,3]}}"#).is_err());
    }
}
