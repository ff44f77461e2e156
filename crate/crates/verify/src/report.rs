//! Suite outcomes with witnesses for every failed check.

use std::fmt::Write as _;

/// One checked statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// For failures, the concrete vertices and values that break the check.
    pub witness: Option<String>,
}

/// The outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
    /// Context that is not itself a check, such as skipped rows.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>) -> Self {
        SuiteReport { name: name.into(), checks: Vec::new(), notes: Vec::new() }
    }

    /// Records a check; `witness` is only evaluated when it failed.
    pub fn check(&mut self, label: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) {
        let witness = if passed { None } else { Some(witness()) };
        self.checks.push(Check { label: label.into(), passed, witness });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Appends the checks and notes of `other`, prefixing labels.
    pub fn absorb(&mut self, prefix: &str, other: SuiteReport) {
        for mut c in other.checks {
            c.label = format!("{prefix}{}", c.label);
            self.checks.push(c);
        }
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}{n}")));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `(passed, failed)` counts.
    pub fn totals(&self) -> (usize, usize) {
        let failed = self.failures().count();
        (self.checks.len() - failed, failed)
    }

    /// `<name>: PASS (n checks)` or `<name>: FAIL (k of n checks; first: …)`.
    pub fn summary_line(&self) -> String {
        let (ok, bad) = self.totals();
        match self.failures().next() {
            None => format!("{}: PASS ({ok} checks)", self.name),
            Some(first) => format!(
                "{}: FAIL ({bad} of {} checks; first: {}: {})",
                self.name,
                ok + bad,
                first.label,
                first.witness.as_deref().unwrap_or("")
            ),
        }
    }

    /// One line per check followed by notes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.name);
        for c in &self.checks {
            match &c.witness {
                None => {
                    let _ = writeln!(out, "  ok   {}", c.label);
                }
                Some(w) => {
                    let _ = writeln!(out, "  FAIL {}: {w}", c.label);
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note {n}");
        }
        let _ = writeln!(out, "  {}", self.summary_line());
        out
    }
}

/// Machine-readable summary: one `suite <name> <passed> <failed> <first>`
/// line per report, tab separated.
pub fn write_summary(reports: &[SuiteReport]) -> String {
    let mut out = String::from("suite\tpassed\tfailed\tfirst_witness\n");
    for r in reports {
        let (ok, bad) = r.totals();
        let first = r
            .failures()
            .next()
            .map(|c| format!("{}: {}", c.label, c.witness.as_deref().unwrap_or("")))
            .unwrap_or_default();
        let _ = writeln!(out, "{}\t{ok}\t{bad}\t{first}", r.name);
    }
    out
}
