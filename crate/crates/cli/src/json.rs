//! JSON forms of series, certificates, towers, and oracle reports.
//!
//! Objects are `serde_json::Map`s, which keep keys sorted, so output is
//! deterministic. Betti numbers are written as exact JSON integers of any
//! size.

use std::str::FromStr;

use coadjoint_core::combinatorics::format_chain;
use coadjoint_core::oracle::CrossCheckReport;
use coadjoint_core::orbits::{Factor, Side};
use coadjoint_core::{GradedDims, SplitCertificate, Tower};
use serde_json::{json, Number, Value};

use crate::SCHEMA_VERSION;

pub fn envelope(command: &str, inputs: Value, result: Value) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "schema_version": SCHEMA_VERSION,
    })
}

fn big(n: &impl ToString) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

/// `{"dense": [...], "sparse": ["degree:dim", ...], "total_dim": N}`.
pub fn series(s: &GradedDims) -> Value {
    json!({
        "dense": s.betti().iter().map(big).collect::<Vec<_>>(),
        "sparse": s.sparse().iter().map(|(d, b)| format!("{d}:{b}")).collect::<Vec<_>>(),
        "total_dim": big(&s.total_dim()),
    })
}

pub fn certificate(c: &SplitCertificate) -> Value {
    json!({
        "lhs": series(&c.lhs),
        "rhs": series(&c.rhs),
        "factors": c.factors.iter().map(|f| json!({
            "label": f.label,
            "side": f.side.as_str(),
            "series": series(&f.series),
        })).collect::<Vec<_>>(),
        "verdict": c.verdict,
        "hypothesis_notes": c.hypothesis_notes,
    })
}

pub fn tower(t: &Tower) -> Value {
    json!({
        "chain": format_chain(&t.chain),
        "step_certificates": t.step_certificates.iter().map(certificate).collect::<Vec<_>>(),
        "product_certificate": certificate(&t.product_certificate),
        "all_true": t.all_true(),
    })
}

pub fn cross_check(r: &CrossCheckReport) -> Value {
    json!({
        "subject": r.subject,
        "enumeration_size": r.enumeration_size,
        "mismatched_degrees": r.mismatched_degrees,
        "agree": r.agree(),
        "certificates": r.certificates.iter().map(certificate).collect::<Vec<_>>(),
    })
}

#[derive(Debug, PartialEq, Eq)]
pub struct DecodeError(pub String);

impl std::fmt::Display for DecodeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DecodeError {}

fn err(msg: impl Into<String>) -> DecodeError {
    DecodeError(msg.into())
}

/// Reads the `dense` array of a series object.
pub fn series_from_json(v: &Value) -> Result<GradedDims, DecodeError> {
    let dense = v
        .get("dense")
        .and_then(Value::as_array)
        .ok_or_else(|| err("series without a dense array"))?;
    let betti = dense
        .iter()
        .map(|x| match x {
            Value::Number(n) => n
                .to_string()
                .parse()
                .map_err(|_| err(format!("{n} is not a nonnegative integer"))),
            other => Err(err(format!("{other} is not a number"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedDims::new(betti))
}

/// Rebuilds a certificate from `lhs`, `rhs`, `factors`, and `verdict`; run
/// [`SplitCertificate::recheck`] on the result to re-verify it.
pub fn certificate_from_json(v: &Value) -> Result<SplitCertificate, DecodeError> {
    let factors = v
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| err("certificate without factors"))?
        .iter()
        .map(|f| {
            let side = match f.get("side").and_then(Value::as_str) {
                Some("lhs") => Side::Lhs,
                Some("rhs") => Side::Rhs,
                other => return Err(err(format!("bad factor side {other:?}"))),
            };
            let label = f.get("label").and_then(Value::as_str).unwrap_or_default();
            let series = series_from_json(f.get("series").ok_or_else(|| err("factor without series"))?)?;
            Ok(Factor::new(side, label, series))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let notes = v
        .get("hypothesis_notes")
        .and_then(Value::as_array)
        .map(|a| a.iter().filter_map(Value::as_str).map(String::from).collect())
        .unwrap_or_default();
    Ok(SplitCertificate {
        lhs: series_from_json(v.get("lhs").ok_or_else(|| err("missing lhs"))?)?,
        rhs: series_from_json(v.get("rhs").ok_or_else(|| err("missing rhs"))?)?,
        factors,
        verdict: v
            .get("verdict")
            .and_then(Value::as_bool)
            .ok_or_else(|| err("missing verdict"))?,
        hypothesis_notes: notes,
    })
}
