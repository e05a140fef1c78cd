use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Failed = 1,
    Usage = 2,
    Inconclusive = 3,
}

/// One command's result. Fields keep insertion order for text output; the
/// machine-readable form sorts keys.
pub struct Report {
    pub command: &'static str,
    pub verdict: String,
    pub exit: Exit,
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &'static str, verdict: impl Into<String>, exit: Exit) -> Report {
        Report {
            command,
            verdict: verdict.into(),
            exit,
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Report {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn to_json(&self) -> String {
        let mut details = Map::new();
        for (k, v) in &self.fields {
            details.insert(k.clone(), v.clone());
        }
        let mut top = Map::new();
        top.insert("command".into(), self.command.into());
        top.insert("verdict".into(), self.verdict.clone().into());
        top.insert("exit_code".into(), (self.exit as i32).into());
        top.insert("details".into(), Value::Object(details));
        serde_json::to_string_pretty(&Value::Object(top)).expect("json value")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.verdict);
        for (k, v) in &self.fields {
            match v {
                Value::Array(items) => {
                    let _ = writeln!(out, "{k}:");
                    for item in items {
                        let _ = writeln!(out, "  {}", plain(item));
                    }
                }
                other => {
                    let _ = writeln!(out, "{k}: {}", plain(other));
                }
            }
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", plain(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
