//! Output documents: JSON (machine interface), CSV and Markdown.

use std::fmt::Write as _;

use pcyclic_core::codes::{Engine, WeightDistribution};
use pcyclic_core::expsums::{SymbolicSumValue, ValueDistribution};
use pcyclic_core::quadforms::CodeParams;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WeightRow {
    pub weight: u64,
    pub frequency: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Agreement {
    pub left: String,
    pub right: String,
    pub agree: bool,
}

/// Stable JSON schema for a weight distribution.
#[derive(Debug, Clone, Serialize)]
pub struct DistributionDocument {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub d: u32,
    pub s: u32,
    pub case: String,
    pub n: u64,
    pub dimension: u32,
    pub engine: String,
    pub rows: Vec<WeightRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub agreement: Vec<Agreement>,
}

impl DistributionDocument {
    pub fn new(params: &CodeParams, dist: &WeightDistribution) -> Self {
        DistributionDocument {
            p: params.p,
            m: params.m,
            k: params.k,
            d: params.d,
            s: params.s,
            case: params.case.to_string(),
            n: params.length(),
            dimension: 2 * params.m,
            engine: dist.engine().to_string(),
            rows: dist.rows().iter().map(|&(weight, frequency)| WeightRow { weight, frequency }).collect(),
            agreement: Vec::new(),
        }
    }

    pub fn with_agreement(mut self, verdicts: &[(Engine, Engine, bool)]) -> Self {
        self.agreement = verdicts
            .iter()
            .map(|&(a, b, agree)| Agreement { left: a.to_string(), right: b.to_string(), agree })
            .collect();
        self
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => json(self),
            OutputFormat::Csv => csv_rows(
                ["weight", "frequency"],
                self.rows.iter().map(|r| [r.weight.to_string(), r.frequency.to_string()]),
            ),
            OutputFormat::Markdown => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "Weight distribution, p = {}, m = {}, k = {} ({}, engine {})\n",
                    self.p, self.m, self.k, self.case, self.engine
                );
                out.push_str("| Weight | Frequency |\n|---:|---:|\n");
                for r in &self.rows {
                    let _ = writeln!(out, "| {} | {} |", r.weight, r.frequency);
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ValueRow {
    pub value: String,
    pub a: String,
    pub b: String,
    pub e: u32,
    pub decimal: String,
    pub frequency: u64,
}

/// A value census of T or S.
#[derive(Debug, Clone, Serialize)]
pub struct ValueDocument {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub d: u32,
    pub s: u32,
    pub case: String,
    pub q_star: String,
    pub sum: String,
    pub source: String,
    pub rows: Vec<ValueRow>,
}

impl ValueDocument {
    pub fn new(params: &CodeParams, sum: &str, source: &str, dist: &ValueDistribution) -> Self {
        ValueDocument {
            p: params.p,
            m: params.m,
            k: params.k,
            d: params.d,
            s: params.s,
            case: params.case.to_string(),
            q_star: params.q_star().to_string(),
            sum: sum.to_string(),
            source: source.to_string(),
            rows: dist
                .rows()
                .iter()
                .map(|(v, f)| ValueRow {
                    value: v.to_string(),
                    a: v.a.to_string(),
                    b: v.b.to_string(),
                    e: v.e,
                    decimal: decimal_embedding(v),
                    frequency: *f,
                })
                .collect(),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => json(self),
            OutputFormat::Csv => csv_rows(
                ["value", "decimal", "frequency"],
                self.rows.iter().map(|r| [r.value.clone(), r.decimal.clone(), r.frequency.to_string()]),
            ),
            OutputFormat::Markdown => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "Value distribution of {}, p = {}, m = {}, k = {} ({}, q* = {}, {})\n",
                    self.sum, self.p, self.m, self.k, self.case, self.q_star, self.source
                );
                out.push_str("| Value | Decimal | Frequency |\n|---|---:|---:|\n");
                for r in &self.rows {
                    let _ = writeln!(out, "| {} | {} | {} |", r.value, r.decimal, r.frequency);
                }
                out
            }
        }
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn csv_rows<const N: usize, I: Iterator<Item = [String; N]>>(header: [&str; N], rows: I) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// Decimal value under ζ_p ↦ e^(2πi/p), where √q* is √q or i√q. Display
/// only, 12 significant digits.
pub fn decimal_embedding(v: &SymbolicSumValue) -> String {
    let scale = (v.prime() as f64).powi(v.e as i32);
    let root = (v.q_star().unsigned_abs() as f64).sqrt();
    let (a, b) = (v.a as f64 * scale, v.b as f64 * scale * root);
    if v.b == 0 || v.q_star() > 0 {
        significant(a + b)
    } else if v.a == 0 {
        format!("{}i", significant(b))
    } else {
        let sign = if b < 0.0 { '-' } else { '+' };
        format!("{} {sign} {}i", significant(a), significant(b.abs()))
    }
}

fn significant(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if mag >= 12 {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embeddings() {
        assert_eq!(decimal_embedding(&SymbolicSumValue::integer(3, 1, -81)), "-81");
        let v = SymbolicSumValue::from_parts(3, 1, -9, 9);
        assert_eq!(decimal_embedding(&v), "-9 + 15.5884572681i");
        let w = SymbolicSumValue::from_parts(5, 1, 0, 1);
        assert_eq!(decimal_embedding(&w), "2.2360679775");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(significant(1.0 / 3.0), "0.333333333333");
        assert_eq!(significant(123456789012345.0), "1.23456789012e14");
        assert_eq!(significant(-1458.0), "-1458");
    }
}
