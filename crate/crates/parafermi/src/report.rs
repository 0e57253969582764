//! Verification reports. Failure is an outcome, not an error: every check
//! lands in the report with a pass flag and enough coordinates to diagnose.

use std::fmt;

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: Vec::new() }
    }

    pub fn check(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), pass, detail: detail.into() });
    }

    pub fn pass(&mut self, label: impl Into<String>) {
        self.check(label, true, "");
    }

    /// Records an entrywise matrix comparison, listing the first ten
    /// violating coordinates and truncating after that.
    pub fn check_positions(
        &mut self,
        label: impl Into<String>,
        diffs: (Vec<(usize, usize)>, usize),
    ) {
        let (shown, total) = diffs;
        if total == 0 {
            self.pass(label);
        } else {
            let mut detail = format!(
                "{total} violating entries, first {}: {:?}",
                shown.len(),
                shown
            );
            if total > shown.len() {
                detail.push_str(" (truncated)");
            }
            self.check(label, false, detail);
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.name,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for c in &self.checks {
            if c.detail.is_empty() {
                writeln!(f, "  [{}] {}", if c.pass { "ok" } else { "FAIL" }, c.label)?;
            } else {
                writeln!(
                    f,
                    "  [{}] {}: {}",
                    if c.pass { "ok" } else { "FAIL" },
                    c.label,
                    c.detail
                )?;
            }
        }
        Ok(())
    }
}
