//! Pass/fail reports shared by the suites and the command line.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub paper_anchor: String,
}

impl Entry {
    /// Pass iff `expected == actual` as strings.
    pub fn compare(name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display, anchor: &str) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Entry { name: name.into(), status, expected, actual, paper_anchor: anchor.to_string() }
    }

    pub fn failed(name: impl Into<String>, expected: impl fmt::Display, error: impl fmt::Display, anchor: &str) -> Self {
        Entry {
            name: name.into(),
            status: Status::Fail,
            expected: expected.to_string(),
            actual: format!("error: {error}"),
            paper_anchor: anchor.to_string(),
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl fmt::Display, anchor: &str) -> Self {
        Entry {
            name: name.into(),
            status: Status::Skip,
            expected: String::new(),
            actual: reason.to_string(),
            paper_anchor: anchor.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl Report {
    /// Sorts entries by name and counts them.
    pub fn new(suite: impl Into<String>, mut entries: Vec<Entry>) -> Self {
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary::default();
        for e in &entries {
            match e.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report { suite: suite.into(), entries, summary }
    }

    pub fn merge(suite: impl Into<String>, parts: Vec<Report>) -> Self {
        Report::new(suite, parts.into_iter().flat_map(|r| r.entries).collect())
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{} {}: expected {}, got {}", e.status, e.name, e.expected, e.actual)?;
            if !e.paper_anchor.is_empty() {
                write!(f, "  [{}]", e.paper_anchor)?;
            }
            writeln!(f)?;
        }
        write!(f, "{}: {} pass, {} fail, {} skip", self.suite, self.summary.pass, self.summary.fail, self.summary.skip)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_sorted_and_counted() {
        let r = Report::new(
            "x",
            vec![Entry::compare("b", 1, 2, ""), Entry::compare("a", 1, 1, ""), Entry::skipped("c", "n/a", "")],
        );
        assert_eq!(r.entries.iter().map(|e| e.name.as_str()).collect::<Vec<_>>(), ["a", "b", "c"]);
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skip: 1 });
        assert!(!r.all_passed());
    }

    #[test]
    fn json_field_names() {
        let r = Report::new("s", vec![Entry::compare("a", "true", "true", "q")]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["entries"][0]["status"], "pass");
        assert_eq!(v["entries"][0]["paper_anchor"], "q");
        assert_eq!(v["summary"]["pass"], 1);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
