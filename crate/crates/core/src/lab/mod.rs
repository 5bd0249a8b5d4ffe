//! Experiment harness: gap profiles, property checks and parameter sweeps
//! that tabulate expected against computed values.

mod checks;
mod gaps;
mod suites;

use std::time::Instant;

use serde::Serialize;

pub use checks::{
    bound_audit, characterization_sweep, check_diameter_collapse, check_gap_lemma_cycle, check_gap_lemma_path,
    check_monotonicity, deletion_experiment, Deletion, DeletionOutcome,
};
pub use gaps::{gap_profile, Gap, GapKind, GapProfile};
pub use suites::{run_all, run_suite, Suite, SweepConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// The check had nothing to assert for this instance.
    Vacuous,
}

impl Status {
    pub fn from_ok(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Vacuous => "vacuous",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub id: String,
    pub k: Option<u32>,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    pub note: String,
    pub elapsed_ms: u64,
}

impl SweepRow {
    pub fn new(id: impl Into<String>, k: Option<u32>, expected: impl ToString, observed: impl ToString, status: Status) -> Self {
        SweepRow {
            id: id.into(),
            k,
            expected: expected.to_string(),
            observed: observed.to_string(),
            status,
            note: String::new(),
            elapsed_ms: 0,
        }
    }

    /// Row whose status is `expected == observed`.
    pub fn compare<T: PartialEq + ToString>(id: impl Into<String>, k: Option<u32>, expected: T, observed: T) -> Self {
        let ok = expected == observed;
        SweepRow::new(id, k, expected, observed, Status::from_ok(ok))
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_elapsed(mut self, since: Instant) -> Self {
        self.elapsed_ms = since.elapsed().as_millis() as u64;
        self
    }

    fn same_outcome(&self, other: &SweepRow) -> bool {
        SweepRow { elapsed_ms: 0, ..self.clone() } == SweepRow { elapsed_ms: 0, ..other.clone() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub vacuous: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub rows: Vec<SweepRow>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    k: Option<u32>,
    expected: &'a str,
    observed: &'a str,
    status: &'a str,
    note: &'a str,
}

impl SweepReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SweepReport { suite: suite.into(), rows: Vec::new() }
    }

    pub fn with_rows(suite: impl Into<String>, rows: Vec<SweepRow>) -> Self {
        let mut r = SweepReport { suite: suite.into(), rows };
        r.sort();
        r
    }

    pub fn push(&mut self, row: SweepRow) {
        self.rows.push(row);
    }

    pub fn append(&mut self, other: SweepReport) {
        self.rows.extend(other.rows);
        self.sort();
    }

    /// Stable sort by id, so rows sharing an id keep their insertion order.
    pub fn sort(&mut self) {
        self.rows.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary { total: self.rows.len(), ..Summary::default() };
        for r in &self.rows {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
                Status::Vacuous => s.vacuous += 1,
            }
        }
        s
    }

    /// True when no row failed.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    /// Rows and statuses agree, ignoring timing.
    pub fn same_outcome(&self, other: &SweepReport) -> bool {
        self.suite == other.suite
            && self.rows.len() == other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a.same_outcome(b))
    }

    /// One CSV line per row. Timing is left out so reruns give identical
    /// output.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(CsvRow {
                id: &r.id,
                k: r.k,
                expected: &r.expected,
                observed: &r.observed,
                status: r.status.as_str(),
                note: &r.note,
            })
            .expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn summary_json(&self) -> String {
        serde_json::json!({
            "suite": self.suite,
            "summary": self.summary(),
            "passed": self.passed(),
        })
        .to_string()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let k = r.k.map(|k| format!(" k={k}")).unwrap_or_default();
            out.push_str(&format!(
                "{:<7} {}{k}: expected {} observed {}",
                r.status.as_str(),
                r.id,
                r.expected,
                r.observed
            ));
            if !r.note.is_empty() {
                out.push_str(&format!(" ({})", r.note));
            }
            out.push('\n');
        }
        let s = self.summary();
        out.push_str(&format!(
            "{}: {} rows, {} pass, {} fail, {} skipped, {} vacuous\n",
            self.suite, s.total, s.pass, s.fail, s.skipped, s.vacuous
        ));
        out
    }
}
