use std::fmt::{self, Write as _};

use serde::Serialize;

use super::CheckId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented boundary disagreement between a stated result and the
    /// computed value. Does not fail the suite.
    Discrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Discrepancy => "discrepancy",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: CheckId,
    /// Graph id, or `(n,k)` / `n=..` for closed-form checks.
    pub subject: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub tolerance: f64,
    /// Always set on failures: the graph6 string plus the offending pair or
    /// eigenvalue.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

impl Counts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Discrepancy => self.discrepancy += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.discrepancy
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub check: CheckId,
    #[serde(flatten)]
    pub counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub graphs: usize,
    pub summary: Counts,
    pub checks: Vec<CheckSummary>,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub(crate) fn new(corpus: String, graphs: usize, order: &[CheckId], records: Vec<CheckRecord>) -> Self {
        let mut summary = Counts::default();
        let mut checks: Vec<CheckSummary> = order
            .iter()
            .map(|&check| CheckSummary { check, counts: Counts::default() })
            .collect();
        for r in &records {
            summary.add(r.status);
            if let Some(c) = checks.iter_mut().find(|c| c.check == r.check) {
                c.counts.add(r.status);
            }
        }
        VerificationReport { corpus, graphs, summary, checks, records }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    /// 0 when no record failed; discrepancies are allowed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failures())
    }

    pub fn records_for(&self, check: CheckId) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(move |r| r.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-check summary followed by a table of records. Passing records are
    /// listed only with `all_records`.
    pub fn to_text(&self, all_records: bool) -> String {
        let mut out = String::new();
        writeln!(out, "corpus: {} ({} graphs)", self.corpus, self.graphs).unwrap();
        writeln!(out, "{:<8} {:>8} {:>8} {:>12}", "check", "pass", "fail", "discrepancy").unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "{:<8} {:>8} {:>8} {:>12}",
                c.check.to_string(),
                c.counts.pass,
                c.counts.fail,
                c.counts.discrepancy
            )
            .unwrap();
        }
        writeln!(
            out,
            "{:<8} {:>8} {:>8} {:>12}",
            "total", self.summary.pass, self.summary.fail, self.summary.discrepancy
        )
        .unwrap();

        let shown: Vec<&CheckRecord> = self
            .records
            .iter()
            .filter(|r| all_records || r.status != Status::Pass)
            .collect();
        if shown.is_empty() {
            return out;
        }
        let rows: Vec<[String; 6]> = shown
            .iter()
            .map(|r| {
                [
                    r.check.to_string(),
                    r.subject.clone(),
                    r.status.to_string(),
                    r.expected.clone(),
                    r.computed.clone(),
                    r.witness.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let header = ["check", "subject", "status", "expected", "computed", "witness"];
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        out.push('\n');
        let mut line = |cells: &[&str]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
        };
        line(&header);
        for row in &rows {
            line(&row.each_ref().map(String::as_str));
        }
        out
    }
}
