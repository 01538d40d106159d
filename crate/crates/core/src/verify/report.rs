use std::collections::BTreeMap;
use std::io::{self, Write};

use serde_json::{json, Map, Value};

use super::{CheckRecord, Totals, VerificationReport};
use crate::identity::{CheckOutcome, SkipReason};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// One JSON object per check, then a totals object. Byte-stable.
    Jsonl,
    /// Human-readable per-identity counts.
    Summary,
}

/// Write `r` in the requested format.
pub fn emit_report(r: &VerificationReport, format: ReportFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        ReportFormat::Jsonl => {
            for rec in &r.records {
                write_record(rec, out)?;
            }
            write_totals(r, out)
        }
        ReportFormat::Summary => write_summary(r, out),
    }
}

/// One jsonl line for a check.
pub fn write_record(rec: &CheckRecord, out: &mut dyn Write) -> io::Result<()> {
    let assignment: Map<String, Value> =
        rec.assignment.iter().map(|(k, v)| ((*k).to_string(), json!(v))).collect();
    let mut obj = Map::new();
    obj.insert("id".into(), json!(rec.id));
    obj.insert("assignment".into(), Value::Object(assignment));
    obj.insert("outcome".into(), json!(rec.outcome.tag()));
    match &rec.outcome {
        CheckOutcome::Holds => {}
        CheckOutcome::Fails { lhs, rhs } => {
            obj.insert("lhs".into(), json!(lhs.to_string()));
            obj.insert("rhs".into(), json!(rhs.to_string()));
        }
        CheckOutcome::Skipped(reason) => {
            obj.insert("reason".into(), json!(reason.as_str()));
        }
    }
    writeln!(out, "{}", Value::Object(obj))
}

fn totals_json(t: &Totals) -> Value {
    json!({ "checks": t.checks(), "holds": t.holds, "fails": t.fails, "skipped": t.skipped })
}

fn reasons_json(m: &BTreeMap<SkipReason, u64>) -> Value {
    Value::Object(m.iter().map(|(r, n)| (r.as_str().to_string(), json!(n))).collect())
}

/// The trailing totals line. Wall time is left out so reruns are
/// byte-identical.
pub fn write_totals(r: &VerificationReport, out: &mut dyn Write) -> io::Result<()> {
    let v = json!({
        "suite": r.suite_id,
        "seed": r.seed,
        "totals": totals_json(&r.totals),
        "skipped_by_reason": reasons_json(&r.skipped_by_reason),
        "passed": r.passed(),
    });
    writeln!(out, "{v}")
}

fn write_summary(r: &VerificationReport, out: &mut dyn Write) -> io::Result<()> {
    let width = r.per_identity.keys().map(String::len).max().unwrap_or(2).max(2);
    writeln!(out, "suite {}", r.suite_id)?;
    if let Some(seed) = r.seed {
        writeln!(out, "seed {seed}")?;
    }
    writeln!(out, "{:<width$}  {:>8}  {:>6}  {:>8}", "id", "holds", "fails", "skipped")?;
    for (id, t) in &r.per_identity {
        writeln!(out, "{id:<width$}  {:>8}  {:>6}  {:>8}", t.holds, t.fails, t.skipped)?;
    }
    for f in &r.failures {
        let assignment: Vec<String> = f.assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let CheckOutcome::Fails { lhs, rhs } = &f.outcome {
            writeln!(out, "FAIL {} {{{}}} lhs={lhs} rhs={rhs}", f.id, assignment.join(", "))?;
        }
    }
    let reasons: Vec<String> = r.skipped_by_reason.iter().map(|(k, n)| format!("{k}: {n}")).collect();
    writeln!(
        out,
        "checks {}, holds {}, fails {}, skipped {}{}",
        r.totals.checks(),
        r.totals.holds,
        r.totals.fails,
        r.totals.skipped,
        if reasons.is_empty() { String::new() } else { format!(" ({})", reasons.join(", ")) },
    )?;
    writeln!(out, "elapsed {:.3}s", r.elapsed.as_secs_f64())?;
    writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })
}
