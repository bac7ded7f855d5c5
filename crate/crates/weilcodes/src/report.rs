//! Rendering of reports: JSON with exact numerics, the CSV verification
//! table, and human-readable summaries.
//!
//! JSON follows one convention everywhere: integers that can exceed 2^53
//! are emitted as decimal strings so generic tooling never rounds them.

use serde::Serialize;

use crate::claims::{Status, SweepRow, VerifySummary};
use crate::codes::{DualDistance, DualReport, WeightDistribution};
use crate::eisenstein::{serialize_exact_uint, ExactInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// u128 with the exact-JSON convention.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExactUint(#[serde(serialize_with = "serialize_exact_uint")] pub u128);

/// JSON-safe mirror of a weight distribution.
#[derive(Debug, Clone, Serialize)]
pub struct DistReport {
    pub n: ExactUint,
    pub k: u32,
    pub weights: Vec<WeightCount>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightCount {
    pub w: ExactUint,
    pub count: ExactUint,
}

impl From<&WeightDistribution> for DistReport {
    fn from(d: &WeightDistribution) -> Self {
        DistReport {
            n: ExactUint(d.n),
            k: d.k,
            weights: d
                .weights
                .iter()
                .map(|(&w, &count)| WeightCount {
                    w: ExactUint(w),
                    count: ExactUint(count),
                })
                .collect(),
        }
    }
}

/// JSON-safe mirror of a dual report.
#[derive(Debug, Clone, Serialize)]
pub struct DualJson {
    pub n: ExactUint,
    pub dual_dim: ExactUint,
    pub d_min: String,
    pub a2_perp: ExactUint,
    pub sphere_packing_optimal: Option<bool>,
    pub n_exceeds_half_qm1: bool,
}

impl From<&DualReport> for DualJson {
    fn from(d: &DualReport) -> Self {
        DualJson {
            n: ExactUint(d.n),
            dual_dim: ExactUint(d.dual_dim),
            d_min: match d.d_min {
                DualDistance::Two => "2".into(),
                DualDistance::AtLeastThree => ">=3".into(),
            },
            a2_perp: ExactUint(d.a2_perp),
            sphere_packing_optimal: d.sphere_packing_optimal,
            n_exceeds_half_qm1: d.n_exceeds_half_qm1,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization")
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn verify_csv(summary: &VerifySummary) -> String {
    let mut out = String::from("alpha,T_alpha,j_class,n,weights,enumerators,status\n");
    for row in &summary.rows {
        let t = row
            .t_alpha
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.alpha,
            t,
            csv_field(&row.j_class),
            row.n,
            csv_field(&row.weights),
            csv_field(&row.enumerators),
            row.status
        ));
    }
    out
}

pub fn records_csv(summary: &VerifySummary) -> String {
    let mut out = String::from("clause,inputs,published,computed,status,note\n");
    for r in &summary.records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            csv_field(&r.clause),
            csv_field(&r.inputs),
            csv_field(&r.published),
            csv_field(&r.computed),
            r.status,
            csv_field(&r.note)
        ));
    }
    out
}

pub fn verify_pretty(summary: &VerifySummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "verification sweep at (ell, m) = ({}, {}), enumeration: {}\n\n",
        summary.ell, summary.m, summary.enumeration
    ));
    out.push_str("alpha  T  j_class  n        weights / enumerators                 status\n");
    for row in &summary.rows {
        let t = row
            .t_alpha
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{:<6} {:<2} {:<8} {:<8} {:<38} {}\n",
            row.alpha,
            t,
            row.j_class,
            row.n,
            format!("{} / {}", row.weights, row.enumerators),
            row.status
        ));
    }
    out.push('\n');
    for rec in &summary.records {
        out.push_str(&format!(
            "[{}] {}entry {} | published {} | computed {}{}\n",
            rec.status,
            if rec.note.is_empty() {
                String::new()
            } else {
                format!("({}) ", rec.note)
            },
            rec.clause,
            rec.published,
            rec.computed,
            if rec.inputs.is_empty() {
                String::new()
            } else {
                format!(" | at {}", rec.inputs)
            },
        ));
    }
    let counts = |s: Status| {
        summary.records.iter().filter(|r| r.status == s).count()
            + summary.rows.iter().filter(|r| r.status == s).count()
    };
    out.push_str(&format!(
        "\nconfirmed: {}, reinterpreted: {}, skipped: {}, failed: {}\n",
        counts(Status::Confirmed),
        counts(Status::Reinterpreted),
        counts(Status::Skipped),
        counts(Status::Failed)
    ));
    out
}

/// CSV for a sweep-row listing outside verify (unused columns stay empty).
pub fn rows_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("alpha,T_alpha,j_class,n,weights,enumerators,status\n");
    for row in rows {
        let t = row
            .t_alpha
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.alpha, t, row.j_class, row.n, row.weights, row.enumerators, row.status
        ));
    }
    out
}

/// The exact-Eisenstein JSON wrapper re-exported for CLI use.
pub fn exact_int(v: i128) -> ExactInt {
    ExactInt(v)
}
