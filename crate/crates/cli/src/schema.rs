//! JSON document schemas and their parsers/serializers.
//!
//! Point-set document: `{"n": <int>, "points": [[<symbol>, ...], ...]}`
//! where a symbol is a JSON string or number; numeric literals are
//! canonicalized to their decimal string form, so `0` and `"0"` denote the
//! same symbol.
//!
//! Function-table document: `{"values": [{"point": [...], "value": v}]}`
//! with `v` either a bare integer or a rational string `"p/q"`.
//!
//! Loop-certificate document: `{"points": [...], "coefficients": [...]}`.
//!
//! Output documents (verdicts, decompositions, component partitions) are
//! emitted with sorted object keys, so byte-identical reruns are guaranteed.

use std::str::FromStr;

use anyhow::{bail, Context, Result};
use serde_json::{json, Map, Value};

use addsep_core::{
    ComponentPartition, Decomposition, FunctionTable, GoodnessVerdict, Int, LoopCertificate,
    Point, PointSet, Rational, Symbol,
};

fn symbol_from_value(v: &Value) -> Result<Symbol> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => bail!("symbols must be JSON strings or numbers, got {other}"),
    }
}

fn point_from_value(v: &Value) -> Result<Point> {
    let tuple = v.as_array().context("a point must be a JSON array")?;
    tuple.iter().map(symbol_from_value).collect()
}

fn point_to_value(p: &[Symbol]) -> Value {
    Value::Array(p.iter().map(|s| Value::String(s.clone())).collect())
}

fn points_from_value(v: &Value, field: &str) -> Result<Vec<Point>> {
    let arr = v
        .as_array()
        .with_context(|| format!("\"{field}\" must be an array"))?;
    arr.iter()
        .enumerate()
        .map(|(j, pv)| point_from_value(pv).with_context(|| format!("in point {j}")))
        .collect()
}

/// Parses a point-set document.
pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let value: Value = serde_json::from_str(text).context("invalid JSON")?;
    let obj = value
        .as_object()
        .context("point-set document must be a JSON object")?;
    let n = obj
        .get("n")
        .context("missing field \"n\"")?
        .as_u64()
        .context("\"n\" must be a non-negative integer")? as usize;
    let points = points_from_value(
        obj.get("points").context("missing field \"points\"")?,
        "points",
    )?;
    PointSet::new(n, points).context("invalid point set")
}

/// Serializes a point set; parsing the result reproduces the set exactly.
pub fn point_set_to_value(s: &PointSet) -> Value {
    json!({
        "n": s.axes(),
        "points": s.points().iter().map(|p| point_to_value(p)).collect::<Vec<_>>(),
    })
}

/// Parses `"p/q"` strings and bare JSON integers into exact rationals.
fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => {
            Rational::from_str(s).with_context(|| format!("invalid rational {s:?}"))
        }
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                bail!("numeric values must be exact integers; write {n} as \"p/q\"")
            }
        }
        other => bail!("values must be integers or \"p/q\" strings, got {other}"),
    }
}

/// Canonical text form of a rational: `p/q` in lowest terms, or `p` when
/// the denominator is one.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

fn int_from_value(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Int::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Int::from(u))
            } else {
                bail!("coefficient {n} is not an integer")
            }
        }
        Value::String(s) => Int::from_str(s).with_context(|| format!("invalid integer {s:?}")),
        other => bail!("coefficients must be integers, got {other}"),
    }
}

fn int_to_value(v: &Int) -> Value {
    match i64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(v.to_string()),
    }
}

/// Parses a function-table document.
pub fn parse_function_table(text: &str) -> Result<FunctionTable> {
    let value: Value = serde_json::from_str(text).context("invalid JSON")?;
    let obj = value
        .as_object()
        .context("function-table document must be a JSON object")?;
    let entries = obj
        .get("values")
        .context("missing field \"values\"")?
        .as_array()
        .context("\"values\" must be an array")?;
    let mut pairs = Vec::with_capacity(entries.len());
    for (j, entry) in entries.iter().enumerate() {
        let obj = entry
            .as_object()
            .with_context(|| format!("entry {j} must be an object"))?;
        let point = point_from_value(obj.get("point").with_context(|| {
            format!("entry {j} is missing field \"point\"")
        })?)
        .with_context(|| format!("in entry {j}"))?;
        let rational = rational_from_value(
            obj.get("value")
                .with_context(|| format!("entry {j} is missing field \"value\""))?,
        )
        .with_context(|| format!("in entry {j}"))?;
        pairs.push((point, rational));
    }
    FunctionTable::new(pairs).context("invalid function table")
}

/// Serializes a function table.
pub fn function_table_to_value(f: &FunctionTable) -> Value {
    let values: Vec<Value> = f
        .iter()
        .map(|(p, v)| {
            json!({
                "point": point_to_value(p),
                "value": rational_to_string(v),
            })
        })
        .collect();
    json!({ "values": values })
}

/// Parses a loop-certificate document.
pub fn parse_certificate(text: &str) -> Result<LoopCertificate> {
    let value: Value = serde_json::from_str(text).context("invalid JSON")?;
    let obj = value
        .as_object()
        .context("certificate document must be a JSON object")?;
    let points = points_from_value(
        obj.get("points").context("missing field \"points\"")?,
        "points",
    )?;
    let coefficients = obj
        .get("coefficients")
        .context("missing field \"coefficients\"")?
        .as_array()
        .context("\"coefficients\" must be an array")?
        .iter()
        .map(int_from_value)
        .collect::<Result<Vec<_>>>()?;
    LoopCertificate::new(points, coefficients).context("invalid certificate")
}

/// Serializes a loop certificate.
pub fn certificate_to_value(c: &LoopCertificate) -> Value {
    json!({
        "points": c.points().iter().map(|p| point_to_value(p)).collect::<Vec<_>>(),
        "coefficients": c.coefficients().iter().map(int_to_value).collect::<Vec<_>>(),
    })
}

/// Serializes a goodness verdict; the certificate field is present exactly
/// when the set is not good.
pub fn verdict_to_value(v: &GoodnessVerdict) -> Value {
    let mut map = Map::new();
    map.insert("good".into(), Value::Bool(v.good));
    map.insert("rank".into(), Value::from(v.rank));
    map.insert("cardinality".into(), Value::from(v.cardinality));
    map.insert("bound".into(), Value::from(v.bound));
    if let Some(cert) = &v.certificate {
        map.insert("certificate".into(), certificate_to_value(cert));
    }
    Value::Object(map)
}

/// Serializes a decomposition as per-axis symbol tables.
pub fn decomposition_to_value(d: &Decomposition) -> Value {
    let tables: Vec<Value> = d
        .tables()
        .iter()
        .map(|table| {
            let mut map = Map::new();
            for (sym, value) in table {
                map.insert(sym.clone(), Value::String(rational_to_string(value)));
            }
            Value::Object(map)
        })
        .collect();
    json!({ "tables": tables })
}

/// Serializes an obstruction: the loop plus its nonzero signed value sum.
pub fn obstruction_to_value(cert: &LoopCertificate, functional: &Rational) -> Value {
    let mut inner = match certificate_to_value(cert) {
        Value::Object(map) => map,
        _ => unreachable!(),
    };
    inner.insert(
        "functional".into(),
        Value::String(rational_to_string(functional)),
    );
    json!({ "obstruction": Value::Object(inner) })
}

/// Serializes a component partition, materializing component points.
pub fn partition_to_value(s: &PointSet, partition: &ComponentPartition) -> Value {
    let components: Vec<Value> = partition
        .components()
        .iter()
        .map(|component| {
            let points: Vec<Value> = component
                .point_indices()
                .iter()
                .map(|&j| point_to_value(s.point(j)))
                .collect();
            json!({
                "points": points,
                "uniquely_linked": component.uniquely_linked(),
            })
        })
        .collect();
    json!({ "components": components })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_string_and_numeric_symbols_alike() {
        let a = parse_point_set(r#"{"n":2,"points":[["0","1"],["1","0"]]}"#).unwrap();
        let b = parse_point_set(r#"{"n":2,"points":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn singleton_document() {
        let s = parse_point_set(r#"{"n":2,"points":[["a","b"]]}"#).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.alphabet_size(0), 1);
        assert_eq!(s.alphabet_size(1), 1);
    }

    #[test]
    fn numeric_canonicalization_builds_alphabets() {
        let s = parse_point_set(r#"{"n":3,"points":[[0,0,0],[0,0,1]]}"#).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.alphabets()[2], vec!["0".to_string(), "1".to_string()]);
    }

    #[test]
    fn duplicate_points_error_carries_the_pair() {
        let err =
            parse_point_set(r#"{"n":2,"points":[["a","b"],["a","b"]]}"#).unwrap_err();
        assert!(format!("{err:#}").contains("points 0 and 1 are identical"));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(parse_point_set("not json").is_err());
        assert!(parse_point_set("[1,2]").is_err());
        assert!(parse_point_set(r#"{"points":[["a"]]}"#).is_err());
        assert!(parse_point_set(r#"{"n":1,"points":[[true]]}"#).is_err());
        assert!(parse_point_set(r#"{"n":2,"points":[["a"]]}"#).is_err());
        assert!(parse_point_set(r#"{"n":2,"points":[]}"#).is_err());
    }

    #[test]
    fn function_values_accept_integers_and_fraction_strings() {
        let f = parse_function_table(
            r#"{"values":[
                {"point":["a","x"],"value":3},
                {"point":["b","x"],"value":"-7/2"},
                {"point":["c","x"],"value":"4/6"}
            ]}"#,
        )
        .unwrap();
        assert_eq!(f.len(), 3);
        let canonical = f
            .get(&["c".to_string(), "x".to_string()])
            .map(rational_to_string)
            .unwrap();
        assert_eq!(canonical, "2/3");
        assert!(parse_function_table(r#"{"values":[{"point":["a"],"value":1.5}]}"#).is_err());
        assert!(parse_function_table(r#"{"values":[{"point":["a"],"value":"1/0"}]}"#).is_err());
    }

    #[test]
    fn rational_strings_round_trip() {
        for text in ["0", "5", "-7", "2/3", "-11/4"] {
            let r = Rational::from_str(text).unwrap();
            assert_eq!(rational_to_string(&r), text);
        }
    }

    #[test]
    fn certificate_round_trip() {
        let text = r#"{"points":[["0","0"],["0","1"],["1","0"],["1","1"]],
                       "coefficients":[1,-1,-1,1]}"#;
        let cert = parse_certificate(text).unwrap();
        let value = certificate_to_value(&cert);
        let again = parse_certificate(&value.to_string()).unwrap();
        assert_eq!(cert, again);
    }

    #[test]
    fn big_coefficients_serialize_as_strings() {
        let big = Int::from_str("123456789012345678901234567890").unwrap();
        let v = int_to_value(&big);
        assert_eq!(v, Value::String("123456789012345678901234567890".into()));
        assert_eq!(int_from_value(&v).unwrap(), big);
    }
}
