//! Uniform pass/fail reports shared by every certificate and the CLI.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
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
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    pub counters: BTreeMap<String, i64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), checks: Vec::new(), counters: BTreeMap::new() }
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, details: impl Into<String>) -> bool {
        self.checks.push(Check {
            label: label.into(),
            status: Status::from_bool(ok),
            details: details.into(),
        });
        ok
    }

    pub fn skip(&mut self, label: impl Into<String>, details: impl Into<String>) {
        self.checks.push(Check { label: label.into(), status: Status::Skip, details: details.into() });
    }

    pub fn counter(&mut self, name: impl Into<String>, value: i64) {
        self.counters.insert(name.into(), value);
    }

    pub fn get_counter(&self, name: &str) -> Option<i64> {
        self.counters.get(name).copied()
    }

    pub fn find(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    /// Appends the checks of `other` with labels prefixed by `prefix`.
    /// Counters are summed.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.label = format!("{prefix}.{}", c.label);
            }
            self.checks.push(c);
        }
        for (k, v) in other.counters {
            let key = if prefix.is_empty() { k } else { format!("{prefix}.{k}") };
            *self.counters.entry(key).or_insert(0) += v;
        }
    }

    /// Fails iff some check fails.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, if self.passed() { "PASS" } else { "FAIL" });
        for c in &self.checks {
            let _ = write!(out, "  [{}] {}", c.status.as_str(), c.label);
            if !c.details.is_empty() {
                let _ = write!(out, ": {}", c.details);
            }
            out.push('\n');
        }
        for (k, v) in &self.counters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        out
    }

    /// One JSON record per check, then a summary record.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("serializable"));
            out.push('\n');
        }
        let summary = serde_json::json!({
            "command": self.command,
            "status": if self.passed() { "pass" } else { "fail" },
            "counters": self.counters,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_follows_failures() {
        let mut r = Report::new("t");
        r.check("a", true, "");
        r.skip("b", "not applicable");
        assert!(r.passed());
        r.check("c", false, "boom");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_lines_are_deterministic() {
        let mut r = Report::new("t");
        r.check("x", true, "d");
        r.counter("words", 3);
        assert_eq!(r.to_json_lines(), r.clone().to_json_lines());
        assert!(r.to_json_lines().starts_with(r#"{"label":"x","status":"pass","details":"d"}"#));
    }

    #[test]
    fn absorb_prefixes() {
        let mut a = Report::new("a");
        let mut b = Report::new("b");
        b.check("k", true, "");
        b.counter("n", 2);
        a.absorb("sub", b);
        assert_eq!(a.checks[0].label, "sub.k");
        assert_eq!(a.get_counter("sub.n"), Some(2));
    }
}
