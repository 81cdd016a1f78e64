//! Pass/fail reports shared by every verification routine.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Check {
    pub fn pass(label: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass: true,
            witness: None,
            detail: None,
            elapsed_ms: None,
        }
    }

    pub fn fail(label: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass: false,
            witness: Some(witness.into()),
            detail: None,
            elapsed_ms: None,
        }
    }

    /// Passes when `witness` is `None`.
    pub fn from_witness(label: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Check::pass(label),
            Some(w) => Check::fail(label, w),
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn timed(mut self, ms: f64) -> Self {
        self.elapsed_ms = Some(ms);
        self
    }
}

#[derive(Debug, Clone, Default, Serialize, PartialEq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn get(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    /// Appends another report's checks with labels prefixed by `prefix/`,
    /// and its notes prefixed by `prefix: `.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.label = format!("{prefix}/{}", c.label);
            self.checks.push(c);
        }
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{}\n", self.title);
        for c in &self.checks {
            s.push_str(&format!("  [{}] {}", if c.pass { "pass" } else { "FAIL" }, c.label));
            if let Some(w) = &c.witness {
                s.push_str(&format!("  ({w})"));
            }
            s.push('\n');
        }
        for n in &self.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        s
    }
}
