//! Structured command reports with exact-string payloads.
//!
//! Every numeric field is an exact rational or cyclotomic string; floats
//! appear only in the opt-in `approx` block. JSON objects are backed by
//! `serde_json::Map` (a BTreeMap here), so keys always serialize sorted.

use serde::Serialize;
use serde_json::{json, Map, Value};

use orbihrr::Cyclotomic;

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
            pass: true,
            elapsed_ms: 0,
            approx: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, name: &str, expected: impl ToString, computed: impl ToString) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let pass = expected == computed;
        self.pass &= pass;
        self.checks.push(Check {
            name: name.to_string(),
            expected,
            computed,
            pass,
        });
    }

    pub fn check_bool(&mut self, name: &str, pass: bool, computed: impl ToString) {
        self.pass &= pass;
        self.checks.push(Check {
            name: name.to_string(),
            expected: "pass".into(),
            computed: computed.to_string(),
            pass,
        });
    }

    /// Fills the `approx` block with float renderings of every result
    /// string that parses as a cyclotomic.
    pub fn fill_approx(&mut self) {
        self.approx = approximate(&Value::Object(self.results.clone()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable"),
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["section", "key", "value"]).unwrap();
        w.write_record(["meta", "command", &self.command]).unwrap();
        for (k, v) in &self.inputs {
            w.write_record(["input", k, &value_to_plain(v)]).unwrap();
        }
        let mut rows = Vec::new();
        flatten("", &Value::Object(self.results.clone()), &mut rows);
        for (path, value) in rows {
            w.write_record(["result", &path, &value]).unwrap();
        }
        for c in &self.checks {
            w.write_record(["check", &c.name, &format!(
                "expected={} computed={} pass={}",
                c.expected, c.computed, c.pass
            )])
            .unwrap();
        }
        if let Some(approx) = &self.approx {
            let mut rows = Vec::new();
            flatten("", approx, &mut rows);
            for (path, value) in rows {
                w.write_record(["approx", &path, &value]).unwrap();
            }
        }
        w.write_record(["meta", "pass", &self.pass.to_string()]).unwrap();
        w.write_record(["meta", "elapsed_ms", &self.elapsed_ms.to_string()])
            .unwrap();
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.inputs {
            out.push_str(&format!("input {}: {}\n", k, value_to_plain(v)));
        }
        let mut rows = Vec::new();
        flatten("", &Value::Object(self.results.clone()), &mut rows);
        for (path, value) in rows {
            out.push_str(&format!("{path} = {value}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!(
                "check {}: expected {}, computed {} -> {}\n",
                c.name,
                c.expected,
                c.computed,
                if c.pass { "ok" } else { "MISMATCH" }
            ));
        }
        if let Some(approx) = &self.approx {
            let mut rows = Vec::new();
            flatten("", approx, &mut rows);
            for (path, value) in rows {
                out.push_str(&format!("approx {path} = {value}\n"));
            }
        }
        out.push_str(&format!(
            "pass: {} ({} ms)\n",
            self.pass, self.elapsed_ms
        ));
        out
    }
}

#[derive(Copy, Clone, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn value_to_plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&path, inner, out);
            }
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), inner, out);
            }
        }
        other => out.push((prefix.to_string(), value_to_plain(other))),
    }
}

/// Mirrors a results tree, replacing cyclotomic strings by complex float
/// renderings; non-cyclotomic leaves are dropped.
fn approximate(v: &Value) -> Option<Value> {
    match v {
        Value::Object(map) => {
            let mut out = Map::new();
            for (k, inner) in map {
                if let Some(a) = approximate(inner) {
                    out.insert(k.clone(), a);
                }
            }
            (!out.is_empty()).then_some(Value::Object(out))
        }
        Value::Array(items) => {
            let approxed: Vec<Value> = items.iter().filter_map(approximate).collect();
            (approxed.len() == items.len()).then_some(Value::Array(approxed))
        }
        Value::String(s) => s.parse::<Cyclotomic>().ok().map(|c| {
            let (re, im) = c.approx();
            json!(format!("{re:.6}{im:+.6}i"))
        }),
        _ => None,
    }
}
