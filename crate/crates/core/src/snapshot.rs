//! JSON configuration snapshots.
//!
//! A snapshot is the line `gca-trace v1` followed by one JSON object:
//! `{"n", "m", "variant", "shape", "t", "states": [{"d", "p": [...]}]}`.
//! Data values encode as a number (int, real), `[re, im]` (complex) or
//! `{"sym": k}`; addresses as a number (relative), `{"abs": k}`, `[dx, dy]`
//! or `{"abs": [x, y]}`.

use num_complex::Complex;
use serde_json::{json, Value};
use thiserror::Error;

use crate::address::Address;
use crate::data::DataValue;
use crate::rules::Variant;
use crate::scalar::Scalar;
use crate::state::{CellState, Configuration};
use crate::topology::Topology;
use crate::trace::FORMAT_HEADER;

#[derive(Debug, Error)]
pub enum SnapshotError {
    #[error("missing or unsupported format header (expected {FORMAT_HEADER:?})")]
    Header,
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid snapshot: {0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> SnapshotError {
    SnapshotError::Invalid(msg.into())
}

fn data_json<S: Scalar>(d: &DataValue<S>) -> Value {
    match *d {
        DataValue::Int(v) => json!(v),
        DataValue::Real(v) => json!(v.to_f64_lossy()),
        DataValue::Complex(c) => json!([c.re.to_f64_lossy(), c.im.to_f64_lossy()]),
        DataValue::Symbol(v) => json!({ "sym": v }),
    }
}

fn address_json(a: &Address) -> Value {
    match *a {
        Address::Rel(v) => json!(v),
        Address::Abs(v) => json!({ "abs": v }),
        Address::Rel2 { dx, dy } => json!([dx, dy]),
        Address::Abs2 { x, y } => json!({ "abs": [x, y] }),
    }
}

pub fn to_json<S: Scalar>(cfg: &Configuration<S>, variant: Variant) -> String {
    let (w, h) = cfg.topology.extents();
    let m = cfg.states.first().map_or(0, |s| s.pointers.len());
    let states: Vec<Value> = cfg
        .states
        .iter()
        .map(|s| {
            json!({
                "d": data_json(&s.data),
                "p": s.pointers.iter().map(address_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let shape = if cfg.topology.is_2d() { "torus" } else { "ring" };
    let body = json!({
        "n": cfg.len(),
        "m": m,
        "variant": variant.as_str(),
        "shape": shape,
        "w": w,
        "h": h,
        "t": cfg.time,
        "states": states,
    });
    format!("{FORMAT_HEADER}\n{body}\n")
}

fn parse_data<S: Scalar>(v: &Value) -> Result<DataValue<S>, SnapshotError> {
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(DataValue::Int(i))
            } else {
                let f = num.as_f64().ok_or_else(|| invalid("bad number"))?;
                Ok(DataValue::Real(S::from_f64_lossy(f)))
            }
        }
        Value::Array(parts) if parts.len() == 2 => {
            let re = parts[0].as_f64().ok_or_else(|| invalid("bad complex"))?;
            let im = parts[1].as_f64().ok_or_else(|| invalid("bad complex"))?;
            Ok(DataValue::Complex(Complex::new(S::from_f64_lossy(re), S::from_f64_lossy(im))))
        }
        Value::Object(o) => {
            let k = o
                .get("sym")
                .and_then(Value::as_u64)
                .ok_or_else(|| invalid("bad symbol"))?;
            u8::try_from(k).map(DataValue::Symbol).map_err(|_| invalid("symbol out of range"))
        }
        _ => Err(invalid(format!("unsupported data value {v}"))),
    }
}

fn parse_address(v: &Value) -> Result<Address, SnapshotError> {
    let as_usize = |v: &Value| v.as_u64().map(|x| x as usize).ok_or_else(|| invalid("bad index"));
    let as_i64 = |v: &Value| v.as_i64().ok_or_else(|| invalid("bad offset"));
    match v {
        Value::Number(_) => Ok(Address::Rel(as_i64(v)?)),
        Value::Array(p) if p.len() == 2 => Ok(Address::Rel2 { dx: as_i64(&p[0])?, dy: as_i64(&p[1])? }),
        Value::Object(o) => match o.get("abs") {
            Some(Value::Array(p)) if p.len() == 2 => {
                Ok(Address::Abs2 { x: as_usize(&p[0])?, y: as_usize(&p[1])? })
            }
            Some(x) => Ok(Address::Abs(as_usize(x)?)),
            None => Err(invalid("address object without \"abs\"")),
        },
        _ => Err(invalid(format!("unsupported address {v}"))),
    }
}

/// Parses a snapshot written by [`to_json`].
pub fn from_json<S: Scalar>(text: &str) -> Result<(Configuration<S>, Variant), SnapshotError> {
    let mut lines = text.splitn(2, '\n');
    if lines.next().map(str::trim) != Some(FORMAT_HEADER) {
        return Err(SnapshotError::Header);
    }
    let body: Value = serde_json::from_str(lines.next().unwrap_or(""))?;
    let field = |k: &str| body.get(k).ok_or_else(|| invalid(format!("missing field {k:?}")));
    let n = field("n")?.as_u64().ok_or_else(|| invalid("bad n"))? as usize;
    let variant = field("variant")?
        .as_str()
        .and_then(Variant::parse)
        .ok_or_else(|| invalid("bad variant"))?;
    let topology = match body.get("shape").and_then(Value::as_str) {
        Some("torus") => {
            let w = field("w")?.as_u64().ok_or_else(|| invalid("bad w"))? as usize;
            let h = field("h")?.as_u64().ok_or_else(|| invalid("bad h"))? as usize;
            Topology::torus(w, h)
        }
        _ => Topology::ring(n),
    };
    let time = body.get("t").and_then(Value::as_u64).unwrap_or(0);
    let raw = field("states")?.as_array().ok_or_else(|| invalid("states is not a list"))?;
    let mut states = Vec::with_capacity(raw.len());
    for s in raw {
        let data = parse_data(s.get("d").ok_or_else(|| invalid("state without d"))?)?;
        let pointers = match s.get("p") {
            Some(Value::Array(ps)) => ps.iter().map(parse_address).collect::<Result<_, _>>()?,
            None => Vec::new(),
            Some(_) => return Err(invalid("p is not a list")),
        };
        states.push(CellState { data, pointers });
    }
    let mut cfg = Configuration::new(topology, states).map_err(|e| invalid(e.to_string()))?;
    if cfg.len() != n {
        return Err(invalid(format!("n = {n} but {} states", cfg.len())));
    }
    cfg.time = time;
    Ok((cfg, variant))
}
