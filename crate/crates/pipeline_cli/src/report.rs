use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Computed value differs from a known misprint; both values are carried.
    DiscrepancyDocumented,
    /// No expectation attached.
    Unchecked,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::DiscrepancyDocumented => "discrepancy-documented",
            Verdict::Unchecked => "unchecked",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Step {
    pub name: String,
    pub inputs: BTreeMap<String, String>,
    pub computed: String,
    pub expected: Option<String>,
    pub verdict: Verdict,
}

impl Step {
    pub fn new(name: impl Into<String>) -> StepBuilder {
        StepBuilder { name: name.into(), inputs: BTreeMap::new() }
    }
}

pub struct StepBuilder {
    name: String,
    inputs: BTreeMap<String, String>,
}

impl StepBuilder {
    pub fn input(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    /// Pass iff the rendered values agree.
    pub fn expect(self, computed: impl fmt::Display, expected: impl fmt::Display) -> Step {
        let (c, e) = (computed.to_string(), expected.to_string());
        let verdict = if c == e { Verdict::Pass } else { Verdict::Fail };
        self.finish(c, Some(e), verdict)
    }

    pub fn check(self, computed: impl fmt::Display, expected: impl fmt::Display, ok: bool) -> Step {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self.finish(computed.to_string(), Some(expected.to_string()), verdict)
    }

    pub fn unchecked(self, computed: impl fmt::Display) -> Step {
        self.finish(computed.to_string(), None, Verdict::Unchecked)
    }

    pub fn documented(self, computed: impl fmt::Display, expected: impl fmt::Display) -> Step {
        self.finish(computed.to_string(), Some(expected.to_string()), Verdict::DiscrepancyDocumented)
    }

    pub fn error(self, err: impl fmt::Display) -> Step {
        self.finish(format!("error: {err}"), None, Verdict::Fail)
    }

    fn finish(self, computed: String, expected: Option<String>, verdict: Verdict) -> Step {
        Step { name: self.name, inputs: self.inputs, computed, expected, verdict }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub verdict: Verdict,
    pub steps: Vec<Step>,
    pub assumptions: Vec<String>,
    pub conventions: Vec<String>,
    /// Set when a step errored and later steps were skipped.
    pub aborted: bool,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            verdict: Verdict::Pass,
            steps: Vec::new(),
            assumptions: Vec::new(),
            conventions: Vec::new(),
            aborted: false,
        }
    }

    pub fn push(&mut self, s: Step) {
        if s.verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
        }
        self.steps.push(s);
    }

    /// Records an error step and marks the report as aborted.
    pub fn abort(&mut self, s: Step) {
        self.push(s);
        self.verdict = Verdict::Fail;
        self.aborted = true;
    }

    pub fn merge(&mut self, other: Report) {
        for mut s in other.steps {
            s.name = format!("{}: {}", other.title, s.name);
            self.push(s);
        }
        for a in other.assumptions {
            if !self.assumptions.contains(&a) {
                self.assumptions.push(a);
            }
        }
        for c in other.conventions {
            if !self.conventions.contains(&c) {
                self.conventions.push(c);
            }
        }
        self.aborted |= other.aborted;
        if other.verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn step(&self, name: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} [{}]", self.title, self.verdict)?;
        let width = self.steps.iter().map(|s| s.name.chars().count()).max().unwrap_or(0);
        for s in &self.steps {
            let pad = width - s.name.chars().count();
            write!(f, "  {:<22} {}{} computed={}", s.verdict.to_string(), s.name, " ".repeat(pad), s.computed)?;
            if let Some(e) = &s.expected {
                write!(f, " expected={e}")?;
            }
            if !s.inputs.is_empty() {
                let ins: Vec<String> = s.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(f, " [{}]", ins.join(", "))?;
            }
            writeln!(f)?;
        }
        if self.aborted {
            writeln!(f, "  aborted after the first error")?;
        }
        for a in &self.assumptions {
            writeln!(f, "  assumption: {a}")?;
        }
        for c in &self.conventions {
            writeln!(f, "  convention: {c}")?;
        }
        Ok(())
    }
}
