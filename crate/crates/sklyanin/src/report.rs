//! Report plumbing shared by all audit suites.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Audit {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Audit {
    pub fn new(name: impl Into<String>) -> Self {
        Audit {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: String::new(),
        });
    }

    pub fn check_detail(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn merge(&mut self, other: Audit) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{}/{}", other.name, c.name),
                ..c
            });
        }
    }
}
