//! Check reports shared by the verification suites and the command line.

use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    /// Always `expected == actual`.
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub suite: String,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub metadata: Metadata,
}

impl Report {
    pub fn new(suite: &str, seed: u64) -> Report {
        Report {
            checks: Vec::new(),
            summary: Summary::default(),
            metadata: Metadata {
                version: env!("CARGO_PKG_VERSION").to_owned(),
                suite: suite.to_owned(),
                seed,
            },
        }
    }

    /// Record a comparison; the check passes when both sides render equally.
    pub fn check(
        &mut self,
        id: &str,
        description: &str,
        expected: impl Display,
        actual: impl Display,
    ) -> bool {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.checks.push(Check {
            id: id.to_owned(),
            description: description.to_owned(),
            expected,
            actual,
            pass,
        });
        self.summary.total += 1;
        if pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        pass
    }

    /// Like [`Report::check`], but a computation error becomes a failing
    /// check whose actual value is the error message.
    pub fn check_with<T: Display>(
        &mut self,
        id: &str,
        description: &str,
        expected: impl Display,
        actual: impl FnOnce() -> crate::Result<T>,
    ) -> bool {
        match actual() {
            Ok(v) => self.check(id, description, expected, v),
            Err(e) => self.check(id, description, expected, format!("error: {e}")),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            self.summary.total += 1;
            if c.pass {
                self.summary.passed += 1;
            } else {
                self.summary.failed += 1;
            }
            self.checks.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            writeln!(f, "[{mark}] {:<34} {}", c.id, c.description)?;
            if !c.pass {
                writeln!(f, "       expected: {}", c.expected)?;
                writeln!(f, "       actual:   {}", c.actual)?;
            }
        }
        write!(
            f,
            "{} checks, {} passed, {} failed (suite {}, seed {})",
            self.summary.total,
            self.summary.passed,
            self.summary.failed,
            self.metadata.suite,
            self.metadata.seed
        )
    }
}
