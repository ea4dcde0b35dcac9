//! Tabular documents and their CSV / JSON / Markdown encodings.
//!
//! Exact values never pass through floating point. JSON carries rationals as
//! `{"num": "...", "den": "..."}` with decimal-string components; CSV writes
//! them as `num/den`.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

pub const DEFAULT_DIGITS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Markdown,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(BigInt),
    Bool(bool),
    Exact(BigRational),
    Decimal(BigRational),
    /// A ratio whose denominator area is zero.
    Undefined,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    pub fn int(i: impl Into<BigInt>) -> Self {
        Cell::Int(i.into())
    }
}

/// One emitted document: parameters, a table, and optional summary fields.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub params: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(&'static str, Cell)>,
}

impl Document {
    pub fn render(&self, format: OutputFormat, digits: usize) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(digits),
            OutputFormat::Json => self.to_json(digits),
            OutputFormat::Markdown => self.to_markdown(digits),
        }
    }

    fn to_csv(&self, digits: usize) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| csv_field(&plain(c, digits, true)))
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn to_markdown(&self, digits: usize) -> String {
        let mut out = String::new();
        if !self.params.is_empty() {
            let params: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k} = {}", plain(v, digits, false)))
                .collect();
            writeln!(out, "Parameters: {}", params.join(", ")).unwrap();
            out.push('\n');
        }
        writeln!(out, "| {} |", self.columns.join(" | ")).unwrap();
        let rule: Vec<&str> = self.columns.iter().map(|_| "---").collect();
        writeln!(out, "|{}|", rule.join("|")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| plain(c, digits, false).replace('|', "\\|"))
                .collect();
            writeln!(out, "| {} |", cells.join(" | ")).unwrap();
        }
        if !self.summary.is_empty() {
            out.push('\n');
            for (k, v) in &self.summary {
                writeln!(out, "- {k}: {}", plain(v, digits, false)).unwrap();
            }
        }
        out
    }

    pub fn to_json_value(&self, digits: usize) -> Value {
        let object = |pairs: &[(&'static str, Cell)]| {
            Value::Object(
                pairs
                    .iter()
                    .map(|(k, v)| (k.to_string(), json_cell(v, digits)))
                    .collect::<Map<_, _>>(),
            )
        };
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| (k.to_string(), json_cell(v, digits)))
                        .collect(),
                )
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("params".into(), object(&self.params));
        doc.insert("rows".into(), Value::Array(rows));
        if !self.summary.is_empty() {
            doc.insert("summary".into(), object(&self.summary));
        }
        Value::Object(doc)
    }

    fn to_json(&self, digits: usize) -> String {
        let mut s =
            serde_json::to_string_pretty(&self.to_json_value(digits)).expect("documents serialize");
        s.push('\n');
        s
    }
}

fn plain(cell: &Cell, digits: usize, always_fraction: bool) -> String {
    match cell {
        Cell::Text(s) => s.clone(),
        Cell::Int(i) => i.to_string(),
        Cell::Bool(b) => b.to_string(),
        Cell::Exact(r) if always_fraction || !r.denom().is_one() => {
            format!("{}/{}", r.numer(), r.denom())
        }
        Cell::Exact(r) => r.numer().to_string(),
        Cell::Decimal(r) => to_decimal(r, digits),
        Cell::Undefined => "undefined".into(),
    }
}

fn json_cell(cell: &Cell, digits: usize) -> Value {
    match cell {
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Int(i) => Value::String(i.to_string()),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Exact(r) => rational_to_json(r),
        Cell::Decimal(r) => Value::String(to_decimal(r, digits)),
        Cell::Undefined => Value::Null,
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn rational_to_json(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

/// Inverse of [`rational_to_json`]; re-reduces the fraction.
pub fn rational_from_json(v: &Value) -> Option<BigRational> {
    let num: BigInt = v.get("num")?.as_str()?.parse().ok()?;
    let den: BigInt = v.get("den")?.as_str()?.parse().ok()?;
    (!den.is_zero()).then(|| BigRational::new(num, den))
}

/// Decimal rendering with at most `digits` fractional digits, rounded half to
/// even, trailing zeros trimmed. The separator is always `.`.
pub fn to_decimal(r: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let (floor, rem) = scaled.numer().div_rem(scaled.denom());
    let twice_rem = rem * 2u32;
    let rounded = match twice_rem.cmp(scaled.denom()) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1u32,
        std::cmp::Ordering::Equal if floor.is_even() => floor,
        std::cmp::Ordering::Equal => floor + 1u32,
    };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if r.is_negative() && !rounded.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = format!("{:0>width$}", frac_part.to_string(), width = digits);
        let frac = frac.trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    }
    out
}
