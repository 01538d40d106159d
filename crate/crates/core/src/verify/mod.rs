//! Batch verification: grid enumeration over the catalog, seeded fuzzing
//! of the general lemmas, and report emission.

mod fuzz;
mod grid;
mod report;

use std::collections::BTreeMap;
use std::time::Duration;

pub use fuzz::{fuzz_general, FuzzConfig, FUZZ_CHECK_IDS};
pub use grid::{default_k_range, default_range, run_grid, GridSpec, IdSelection};
pub use report::{emit_report, write_record, write_totals, ReportFormat};

use crate::identity::{CheckOutcome, SkipReason};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Retain one record per check (needed for jsonl output).
    pub keep_records: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Totals {
    pub holds: u64,
    pub fails: u64,
    pub skipped: u64,
}

impl Totals {
    pub fn checks(&self) -> u64 {
        self.holds + self.fails + self.skipped
    }

    fn add(&mut self, other: &Totals) {
        self.holds += other.holds;
        self.fails += other.fails;
        self.skipped += other.skipped;
    }
}

/// One executed check. Assignment keys are parameter names (and, for fuzz
/// draws, the recurrence and seed values).
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub id: String,
    pub assignment: Vec<(&'static str, i64)>,
    pub outcome: CheckOutcome,
}

impl CheckRecord {
    fn sort_key(&self) -> (&str, Vec<i64>) {
        (&self.id, self.assignment.iter().map(|(_, v)| *v).collect())
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub suite_id: String,
    pub totals: Totals,
    pub per_identity: BTreeMap<String, Totals>,
    /// Failed checks, sorted by (id, assignment).
    pub failures: Vec<CheckRecord>,
    pub skipped_by_reason: BTreeMap<SkipReason, u64>,
    pub seed: Option<u64>,
    pub elapsed: Duration,
    /// Every check, sorted by (id, assignment); empty unless requested.
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub(crate) fn new(suite_id: impl Into<String>) -> Self {
        Self { suite_id: suite_id.into(), ..Self::default() }
    }

    pub fn passed(&self) -> bool {
        self.totals.fails == 0
    }

    pub(crate) fn record(&mut self, rec: CheckRecord, keep: bool) {
        let tally = self.per_identity.entry(rec.id.clone()).or_default();
        match &rec.outcome {
            CheckOutcome::Holds => {
                tally.holds += 1;
                self.totals.holds += 1;
            }
            CheckOutcome::Fails { .. } => {
                tally.fails += 1;
                self.totals.fails += 1;
                self.failures.push(rec.clone());
            }
            CheckOutcome::Skipped(reason) => {
                tally.skipped += 1;
                self.totals.skipped += 1;
                *self.skipped_by_reason.entry(*reason).or_default() += 1;
            }
        }
        if keep {
            self.records.push(rec);
        }
    }

    pub(crate) fn finish(&mut self) {
        self.failures.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        self.records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }

    /// Fold another report's counts and failures into this one. Records are
    /// not merged, so callers can stream them out per part.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.totals.add(&other.totals);
        for (id, t) in other.per_identity {
            self.per_identity.entry(id).or_default().add(&t);
        }
        for (reason, n) in other.skipped_by_reason {
            *self.skipped_by_reason.entry(reason).or_default() += n;
        }
        self.failures.extend(other.failures);
        self.failures.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        self.elapsed += other.elapsed;
    }
}
