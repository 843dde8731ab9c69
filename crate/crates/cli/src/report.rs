//! Versioned JSON reports and their text rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use pgroup_verify::{Check, Checklist, Status, VerifyError};

pub const SCHEMA: &str = "pgroup-report/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub checklist: Checklist,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub input: Option<String>,
    pub ok: bool,
    pub sections: Vec<Section>,
    /// Command-specific results.
    pub data: Value,
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str, input: Option<&str>) -> Self {
        Report {
            schema: SCHEMA.into(),
            command: command.into(),
            input: input.map(str::to_string),
            ok: true,
            sections: Vec::new(),
            data: Value::Null,
            error: None,
        }
    }

    pub fn push(&mut self, title: impl Into<String>, checklist: Checklist) {
        self.ok &= checklist.passed();
        self.sections.push(Section {
            title: title.into(),
            checklist,
        });
    }

    /// Records the outcome of a hypothesis-gated operation. A refusal on
    /// the grounds of `p = 2` or failing hypotheses is reported as not
    /// applicable; any other error is a failure.
    pub fn push_result(&mut self, title: &str, result: Result<Checklist, VerifyError>) {
        match result {
            Ok(list) => self.push(title, list),
            Err(e) => {
                let status = match e {
                    VerifyError::PrimeTwo | VerifyError::Hypothesis(_) => Status::NotApplicable,
                    _ => Status::Fail,
                };
                let mut list = Checklist::new();
                list.push(Check::new(
                    "refused",
                    status,
                    serde_json::json!({ "reason": e.to_string() }),
                ));
                self.push(title, list);
            }
        }
    }

    pub fn fail(&mut self, message: impl Into<String>) {
        self.ok = false;
        self.error = Some(message.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.ok { "PASS" } else { "FAIL" };
        match &self.input {
            Some(input) => writeln!(out, "{} {}: {verdict}", self.command, input).unwrap(),
            None => writeln!(out, "{}: {verdict}", self.command).unwrap(),
        }
        if let Some(e) = &self.error {
            writeln!(out, "error: {e}").unwrap();
        }
        if !self.data.is_null() {
            for line in render_data(&self.data) {
                writeln!(out, "  {line}").unwrap();
            }
        }
        for s in &self.sections {
            writeln!(out, "[{}]", s.title).unwrap();
            for c in &s.checklist.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::NotApplicable => "n/a",
                    Status::Skipped => "skip",
                };
                writeln!(out, "  {status:<5} {}  {}", c.name, c.witness).unwrap();
            }
        }
        out
    }
}

fn render_data(data: &Value) -> Vec<String> {
    match data {
        Value::Object(map) => map
            .iter()
            .flat_map(|(k, v)| match v {
                Value::Array(items) if items.iter().all(Value::is_string) => std::iter::once(format!("{k}:"))
                    .chain(items.iter().map(|s| format!("  {}", s.as_str().unwrap())))
                    .collect::<Vec<_>>(),
                _ => vec![format!("{k}: {v}")],
            })
            .collect(),
        other => vec![other.to_string()],
    }
}
