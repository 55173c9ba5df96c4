//! Structured verification reports.

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "report_v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub relation: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Value>,
}

impl Check {
    pub fn new(id: impl Into<String>, relation: impl Into<String>, cartan_type: impl Into<String>, rank: usize) -> Self {
        Self {
            id: id.into(),
            relation: relation.into(),
            cartan_type: cartan_type.into(),
            rank,
            status: Status::Pass,
            counterexample: None,
            table: None,
        }
    }

    /// Mark as failed unless `cex` is None.
    pub fn with_result(mut self, cex: Option<Value>) -> Self {
        if let Some(c) = cex {
            self.status = Status::Fail;
            self.counterexample = Some(c);
        }
        self
    }

    pub fn with_table(mut self, table: Value) -> Self {
        self.table = Some(table);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn to_json(&self) -> Value {
        let mut checks = self.checks.clone();
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.passed()).count();
        json!({
            "schema": SCHEMA,
            "passed": passed,
            "failed": checks.len() - passed,
            "checks": checks,
        })
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut checks: Vec<&Check> = self.checks.iter().collect();
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut out = String::new();
        for c in checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {} ({})\n", c.id, c.relation));
            if let Some(cex) = &c.counterexample {
                out.push_str(&format!("     counterexample: {cex}\n"));
            }
        }
        out
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        Self { checks: iter.into_iter().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_json() {
        let mut r = Report::new();
        r.push(Check::new("b", "x", "A1", 1));
        r.push(Check::new("a", "y", "A1", 1).with_result(Some(json!({"at": [1]}))));
        let v = r.to_json();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["checks"][0]["id"], "a");
        assert_eq!(v["checks"][0]["status"], "fail");
        assert_eq!(v["failed"], 1);
        assert!(!r.all_passed());
    }
}
