//! JSON form of friezes and scalars.
//!
//! A frieze file looks like
//!
//! ```json
//! {
//!   "type": "D4",
//!   "period": 2,
//!   "backend": "exact:Q",
//!   "values": { "1": [...], "2": [...], "+": [...], "-": [...] }
//! }
//! ```
//!
//! where each value is either a plain number (float backend) or an exact
//! scalar object `{"field": "Q" | "sqrt2" | "phi" | "heptagon" | "sqrt2phi",
//! "coeffs": ["p/q", ...]}` listing rational coefficients of ascending
//! powers of the field generator.

use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use frieze_core::algebra::scalar::AlgebraicElement;
use frieze_core::algebra::BigRational;
use frieze_core::{Backend, DynkinType, FieldId, PeriodicFrieze, Scalar};
use frieze_core::quiver::BipartiteQuiver;

pub fn backend_name(f: &PeriodicFrieze) -> String {
    match f.backend() {
        Backend::Float => "float".into(),
        Backend::Exact => match f.field() {
            None => "exact:Q".into(),
            Some(field) => format!("exact:{}", field.name()),
        },
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Float(x) => json!(x),
        Scalar::Rational(r) => json!({
            "field": "Q",
            "coeffs": [r.to_string()],
        }),
        Scalar::Algebraic(el) => json!({
            "field": el.field().name(),
            "coeffs": el.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    if let Some(x) = v.as_f64() {
        return Ok(Scalar::float(x));
    }
    let obj = v
        .as_object()
        .ok_or_else(|| anyhow!("scalar must be a number or an object, got {v}"))?;
    let field = obj
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("exact scalar needs a string \"field\""))?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("exact scalar needs a \"coeffs\" array"))?;
    let parsed: Vec<BigRational> = coeffs
        .iter()
        .map(|c| {
            let s = c
                .as_str()
                .ok_or_else(|| anyhow!("coefficients are \"p/q\" strings, got {c}"))?;
            BigRational::from_str(s).map_err(|e| anyhow!("bad coefficient {s:?}: {e}"))
        })
        .collect::<Result<_>>()?;
    if field == "Q" {
        if parsed.len() != 1 {
            bail!("rational scalar takes exactly one coefficient, got {}", parsed.len());
        }
        return Ok(Scalar::Rational(parsed.into_iter().next().unwrap()));
    }
    let field = FieldId::parse_name(field)
        .ok_or_else(|| anyhow!("unknown field {field:?} (expected Q, sqrt<n>, phi, heptagon or sqrt2phi)"))?;
    if parsed.len() > field.degree() {
        bail!(
            "field {} holds at most {} coefficients, got {}",
            field.name(),
            field.degree(),
            parsed.len()
        );
    }
    Ok(Scalar::algebraic(AlgebraicElement::new(field, parsed)))
}

pub fn frieze_to_json(f: &PeriodicFrieze) -> Value {
    let quiver = f.quiver();
    let mut values = Map::new();
    for v in 0..quiver.rank() {
        let entries: Vec<Value> = (0..f.period())
            .map(|n| scalar_to_json(f.value(v, n as i64)))
            .collect();
        values.insert(quiver.label(v).to_string(), Value::Array(entries));
    }
    json!({
        "type": quiver.dynkin().to_string(),
        "period": f.period(),
        "backend": backend_name(f),
        "values": Value::Object(values),
    })
}

pub fn frieze_from_json(v: &Value) -> Result<PeriodicFrieze> {
    let obj = v.as_object().ok_or_else(|| anyhow!("frieze file must be a JSON object"))?;
    let dynkin = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("missing string field \"type\""))?;
    let dynkin = DynkinType::parse(dynkin).map_err(|e| anyhow!("{e}"))?;
    let period = obj
        .get("period")
        .and_then(Value::as_u64)
        .ok_or_else(|| anyhow!("missing positive integer field \"period\""))? as usize;
    let values_obj = obj
        .get("values")
        .and_then(Value::as_object)
        .ok_or_else(|| anyhow!("missing object field \"values\""))?;
    let quiver = BipartiteQuiver::new(dynkin);
    for label in values_obj.keys() {
        if quiver.vertex(label).is_none() {
            bail!("unknown vertex label {label:?} for {dynkin}");
        }
    }
    let mut values = Vec::with_capacity(quiver.rank());
    for v in 0..quiver.rank() {
        let label = quiver.label(v);
        let arr = values_obj
            .get(label)
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("missing value array for vertex {label:?}"))?;
        let row: Vec<Scalar> = arr
            .iter()
            .map(scalar_from_json)
            .collect::<Result<_>>()
            .with_context(|| format!("vertex {label:?}"))?;
        values.push(row);
    }
    let frieze = PeriodicFrieze::new(quiver, values).map_err(|e| anyhow!("{e}"))?;
    if frieze.period() != period {
        bail!("period field says {period} but rows have {} entries", frieze.period());
    }
    if let Some(declared) = obj.get("backend").and_then(Value::as_str) {
        let actual = backend_name(&frieze);
        if declared != actual {
            bail!("backend field says {declared:?} but values are {actual:?}");
        }
    }
    Ok(frieze)
}

#[cfg(test)]
mod tests {
    use super::*;
    use frieze_core::families;

    #[test]
    fn scalar_round_trips() {
        let cases = [
            Scalar::float(1.25),
            Scalar::rational(-7, 3),
            Scalar::sqrt(2),
            &Scalar::phi() * &Scalar::rational(1, 2),
            Scalar::sqrt2_phi(),
            Scalar::heptagon_beta(),
        ];
        for s in &cases {
            let j = scalar_to_json(s);
            let back = scalar_from_json(&j).unwrap();
            assert_eq!(&back, s, "{j}");
        }
    }

    #[test]
    fn frieze_round_trips_exactly() {
        let friezes = [
            families::constant_frieze(DynkinType::parse("E8").unwrap()).unwrap(),
            families::periodic2_e7(&Scalar::rational(3, 2)).unwrap(),
            families::periodic4_e8(&Scalar::float(1.7), false).unwrap(),
            families::periodic2_d_even(6, &Scalar::one(), &Scalar::sqrt(3)).unwrap(),
        ];
        for f in &friezes {
            let j = frieze_to_json(f);
            let back = frieze_from_json(&j).unwrap();
            assert!(back.entrywise_eq(f), "{j}");
            assert_eq!(back.backend(), f.backend());
        }
    }

    #[test]
    fn rejects_malformed_input() {
        let base = frieze_to_json(&families::constant_frieze(DynkinType::parse("D4").unwrap()).unwrap());
        let mut bad_type = base.clone();
        bad_type["type"] = json!("F4");
        assert!(frieze_from_json(&bad_type).is_err());
        let mut bad_backend = base.clone();
        bad_backend["backend"] = json!("float");
        assert!(frieze_from_json(&bad_backend).is_err());
        let mut bad_label = base.clone();
        bad_label["values"]["5"] = json!([1.0]);
        assert!(frieze_from_json(&bad_label).is_err());
        let mut negative = base.clone();
        negative["values"]["1"] = json!([{"field": "Q", "coeffs": ["-2"]}]);
        assert!(frieze_from_json(&negative).is_err());
        let mut mixed = base;
        mixed["values"]["1"] = json!([2.0]);
        assert!(frieze_from_json(&mixed).is_err());
    }
}
