use std::collections::BTreeMap;
use std::fs;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{AuditArgs, CliError};
use crate::closed_forms::{self, Family, SpecialValuePoint, SpecialValueResult};
use crate::error::Result;
use crate::rational::{ratio, render, ExactRational, RationalJson};
use crate::series::{
    default_grid, mu_phi_odd_num, verify_identity, ArithmeticWeight, ComplexValue, GridSize, IdentityId,
    IdentityPoint, IdentityReport, TruncationParams, Verdict,
};
use crate::Parity;

pub const SCHEMA_VERSION: &str = "1.0.0";
pub const MAX_SPECIAL_M: u32 = 9;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AuditEntry {
    Identity(IdentityReport),
    SpecialValue(SpecialValueResult),
}

/// Verdict counts for one identity across its grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentitySection {
    pub identity_id: IdentityId,
    pub statement: &'static str,
    pub terms: u64,
    pub points: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    /// Passes of the alternative right side, where one is evaluated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternative_pass: Option<usize>,
    pub max_residual: f64,
    pub max_tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParityAdditivity {
    pub family: Family,
    pub track: &'static str,
    pub m: u32,
    pub k: u64,
    pub x: RationalJson,
    /// `None` when one of the three values is not finite.
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArithmeticFactor {
    pub which: ArithmeticWeight,
    pub s: ComplexValue,
    pub value: ComplexValue,
    pub truncation: TruncationParams,
    pub closed_form: f64,
    pub closed_form_label: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SpecialValueTally {
    pub points: usize,
    pub agree: usize,
    pub disagree: usize,
    pub continuation_pole: usize,
    pub printed_pole: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub schema_version: &'static str,
    pub tool_version: &'static str,
    pub timestamp: String,
    pub seed: u64,
    pub grid: GridSize,
    pub identity_sections: Vec<IdentitySection>,
    pub special_value_summary: BTreeMap<Family, SpecialValueTally>,
    pub parity_additivity: Vec<ParityAdditivity>,
    pub arithmetic_factors: Vec<ArithmeticFactor>,
    pub entries: Vec<AuditEntry>,
}

/// `(k, x)` special points: three fixed ones and two drawn from `seed`.
pub fn special_points(seed: u64) -> Vec<(u64, ExactRational)> {
    let mut points = vec![(1, ratio(1, 2)), (2, ratio(1, 5)), (3, ratio(-1, 7))];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while points.len() < 5 {
        let k: u64 = rng.gen_range(1..=5);
        let q: i64 = rng.gen_range(2..=24);
        let p: i64 = rng.gen_range(-(q - 1)..=q - 1);
        let candidate = (k, ratio(p, q * k as i64));
        if p != 0 && !points.contains(&candidate) {
            points.push(candidate);
        }
    }
    points
}

fn section(id: IdentityId, terms: u64, reports: &[IdentityReport]) -> IdentitySection {
    let count = |v| reports.iter().filter(|r| r.verdict == v).count();
    let alternative_pass = reports.iter().any(|r| r.alternative.is_some()).then(|| {
        reports
            .iter()
            .filter(|r| r.alternative.as_ref().is_some_and(|a| a.verdict == Verdict::Pass))
            .count()
    });
    IdentitySection {
        identity_id: id,
        statement: id.statement(),
        terms,
        points: reports.len(),
        pass: count(Verdict::Pass),
        fail: count(Verdict::Fail),
        inconclusive: count(Verdict::Inconclusive),
        alternative_pass,
        max_residual: reports.iter().map(|r| r.residual).fold(0.0, f64::max),
        max_tolerance: reports.iter().map(|r| r.tolerance).fold(0.0, f64::max),
    }
}

/// Everything in the report except the timestamp is a function of
/// `(grid, seed)`.
pub fn build_audit(grid: GridSize, seed: u64, timestamp: String) -> Result<AuditReport> {
    let mut sections = Vec::new();
    let mut entries = Vec::new();
    for id in IdentityId::ALL {
        let (points, terms) = default_grid(id, grid);
        let reports = points
            .par_iter()
            .map(|p: &IdentityPoint| verify_identity(id, p, terms))
            .collect::<Result<Vec<_>>>()?;
        sections.push(section(id, terms, &reports));
        entries.extend(reports.into_iter().map(AuditEntry::Identity));
    }

    let mut summary: BTreeMap<Family, SpecialValueTally> = BTreeMap::new();
    let mut additivity = Vec::new();
    let special = special_points(seed);
    for family in [Family::Zeta1, Family::Zeta2] {
        let tally = summary.entry(family).or_default();
        for m in 0..=MAX_SPECIAL_M {
            for (k, x) in &special {
                for parity in Parity::ALL {
                    let r = closed_forms::special_value(family, &SpecialValuePoint::new(m, *k, x.clone(), parity)?)?;
                    tally.points += 1;
                    if r.agrees {
                        tally.agree += 1;
                    } else {
                        tally.disagree += 1;
                    }
                    tally.continuation_pole += usize::from(r.continuation_value.is_pole());
                    tally.printed_pole += usize::from(r.paper_value.is_pole());
                    entries.push(AuditEntry::SpecialValue(r));
                }
                for (track, printed) in [("continuation", false), ("printed", true)] {
                    additivity.push(ParityAdditivity {
                        family,
                        track,
                        m,
                        k: *k,
                        x: RationalJson::from(x),
                        holds: closed_forms::parity_additivity(family, m, *k, x, printed)?,
                    });
                }
            }
        }
    }

    let s3 = ComplexValue::real(3.0)?;
    let zeta3 = 1.202_056_903_159_594_3;
    let mut factors = Vec::new();
    for (which, closed, label) in [
        (ArithmeticWeight::Mobius, 8.0 / (7.0 * zeta3), "2^s / ((2^s - 1) zeta(s))"),
        (ArithmeticWeight::Totient, (1.0 - 0.125) * std::f64::consts::PI.powi(2) / 6.0 / zeta3, "(1 - 2^-s) zeta(s-1) / zeta(s)"),
    ] {
        let (value, truncation) = mu_phi_odd_num(which, s3, 100_000)?;
        factors.push(ArithmeticFactor {
            which,
            s: s3,
            value,
            truncation,
            closed_form: closed,
            closed_form_label: label,
        });
    }

    Ok(AuditReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        timestamp,
        seed,
        grid,
        identity_sections: sections,
        special_value_summary: summary,
        parity_additivity: additivity,
        arithmetic_factors: factors,
        entries,
    })
}

fn write_special_csv(report: &AuditReport, path: &std::path::Path) -> std::result::Result<(), CliError> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["family", "m", "k", "x", "parity", "continuation", "printed", "agrees"])?;
    for e in &report.entries {
        if let AuditEntry::SpecialValue(r) = e {
            w.write_record([
                r.family.as_str().to_string(),
                r.point.m().to_string(),
                r.point.k().to_string(),
                render(r.point.x()),
                r.point.parity().to_string(),
                r.continuation_value.to_string(),
                r.paper_value.to_string(),
                r.agrees.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub(super) fn run(args: &AuditArgs, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    let timestamp = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
    let report = build_audit(args.grid, args.seed, timestamp)?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    fs::write(&args.out, text)?;
    if let Some(path) = &args.csv {
        write_special_csv(&report, path)?;
    }

    writeln!(out, "{:<6} {:>6} {:>5} {:>5} {:>5} {:>5}  {:>10} {:>10}", "id", "points", "pass", "fail", "inc", "alt", "residual", "tolerance")?;
    for s in &report.identity_sections {
        let alt = s.alternative_pass.map_or("-".to_string(), |a| a.to_string());
        writeln!(
            out,
            "{:<6} {:>6} {:>5} {:>5} {:>5} {:>5}  {:>10.3e} {:>10.3e}",
            s.identity_id.as_str(),
            s.points,
            s.pass,
            s.fail,
            s.inconclusive,
            alt,
            s.max_residual,
            s.max_tolerance
        )?;
    }
    for (family, t) in &report.special_value_summary {
        writeln!(
            out,
            "{}: {} points, {} agree, {} disagree, poles {} continuation / {} printed",
            family.as_str(),
            t.points,
            t.agree,
            t.disagree,
            t.continuation_pole,
            t.printed_pole
        )?;
    }
    let broken: Vec<_> = report
        .parity_additivity
        .iter()
        .filter(|p| p.holds == Some(false))
        .map(|p| format!("{} {} m={} k={} x={}/{}", p.family.as_str(), p.track, p.m, p.k, p.x.num, p.x.den))
        .collect();
    writeln!(out, "parity additivity failures: {}", broken.len())?;
    for b in broken {
        writeln!(out, "  {b}")?;
    }
    writeln!(out, "report written to {}", args.out.display())?;
    Ok(0)
}
