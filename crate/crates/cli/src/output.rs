//! Output records and their plain, JSON and CSV renderings.

use std::io::{self, Write};

use clap::ValueEnum;
use localh_core::{GammaVector, IntPoly};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    LocalH,
    Gamma,
    HPlus,
    NcCount,
    PermCount,
    VerifyReport,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

/// Keys whose coefficient arrays are shown as polynomials in plain output.
const POLY_KEYS: &[&str] = &[
    "ell",
    "h_plus",
    "derangement_polynomial",
    "descent_polynomial",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: Kind,
    pub payload: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(kind: Kind) -> Self {
        OutputRecord {
            kind,
            payload: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.payload.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// A JSON number when it fits in `i64`, a decimal string otherwise.
pub fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => Value::from(small),
        None => Value::String(v.to_string()),
    }
}

pub fn poly(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

pub fn gamma(xi: &GammaVector) -> Value {
    Value::Array(xi.xi().iter().map(big).collect())
}

fn value_to_big(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn plain_value(key: &str, v: &Value) -> String {
    match v {
        Value::Array(items) if POLY_KEYS.contains(&key) => {
            let coeffs: Option<Vec<BigInt>> = items.iter().map(value_to_big).collect();
            coeffs.map_or_else(|| v.to_string(), |c| IntPoly::from_coeffs(c).to_string())
        }
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("({})", parts.join(","))
        }
        Value::Array(_) | Value::Object(_) => v.to_string(),
        other => scalar_text(other),
    }
}

fn write_plain(out: &mut dyn Write, r: &OutputRecord) -> io::Result<()> {
    for (key, v) in &r.payload {
        match v {
            // long listings go one item per line
            Value::Array(items) if key == "items" => {
                writeln!(out, "{key}:")?;
                for item in items {
                    writeln!(out, "  {}", scalar_text(item))?;
                }
            }
            Value::Array(items) if key == "checks" => {
                for check in items {
                    let passed = check["passed"].as_bool().unwrap_or(false);
                    writeln!(
                        out,
                        "{} {} [{}]",
                        if passed { "PASS" } else { "FAIL" },
                        scalar_text(&check["name"]),
                        scalar_text(&check["detail"]),
                    )?;
                }
            }
            _ => writeln!(out, "{key}: {}", plain_value(key, v))?,
        }
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, r: &OutputRecord) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    for (key, v) in &r.payload {
        match v {
            Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                for item in items {
                    let mut row = vec![key.clone()];
                    row.extend(
                        item.as_object()
                            .into_iter()
                            .flatten()
                            .map(|(_, f)| scalar_text(f)),
                    );
                    w.write_record(&row)?;
                }
            }
            Value::Array(items) if key == "items" => {
                for item in items {
                    w.write_record([key.as_str(), &scalar_text(item)])?;
                }
            }
            Value::Array(items) => {
                let mut row = vec![key.clone()];
                row.extend(items.iter().map(scalar_text));
                w.write_record(&row)?;
            }
            other => w.write_record([key.as_str(), &scalar_text(other)])?,
        }
    }
    w.flush()
}

pub fn emit(out: &mut dyn Write, r: &OutputRecord, format: Format) -> io::Result<()> {
    match format {
        Format::Plain => write_plain(out, r),
        Format::Json => writeln!(out, "{}", r.to_json()),
        Format::Csv => write_csv(out, r),
    }
}
