//! One report per command (or per verify check). Human text and JSON
//! records are both rendered from the same `Report`.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Value,
    pub witnesses: Vec<String>,
    pub timing_ms: f64,
    /// Human-readable lines; not part of the record.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            verdict: Value::Null,
            witnesses: Vec::new(),
            timing_ms: 0.0,
            text: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.timing_ms = elapsed.as_secs_f64() * 1e3;
        self
    }

    /// Sets a boolean predicate verdict and its headline `name: value
    /// (detail)`. The headline is derived from the stored verdict so the two
    /// renderings cannot drift.
    pub fn predicate(mut self, name: &str, value: bool, detail: Option<String>, extra: Value) -> Self {
        let mut verdict = serde_json::Map::new();
        verdict.insert("predicate".into(), name.into());
        verdict.insert("value".into(), value.into());
        if let Value::Object(map) = extra {
            verdict.extend(map);
        }
        self.verdict = Value::Object(verdict);
        let head = match detail {
            Some(d) => format!("{name}: {value} ({d})"),
            None => format!("{name}: {value}"),
        };
        self.text.insert(0, head);
        self
    }

    pub fn witness(mut self, w: String) -> Self {
        self.text.push(format!("witness: {w}"));
        self.witnesses.push(w);
        self
    }

    pub fn line(mut self, line: impl Into<String>) -> Self {
        self.text.push(line.into());
        self
    }

    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = self.text.join("\n");
        out.push('\n');
        out
    }
}
