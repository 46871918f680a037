use std::io::Write;

use serde_json::{json, Map, Value};

use grothlab::suite::Check;

use crate::args::Format;

pub const SCHEMA: &str = "grothlab/1";

/// What a subcommand produces: a JSON body, its text rendering and an
/// overall verdict.
pub struct Report {
    pub ok: bool,
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn new(command: &str, ok: bool, body: Value, text: String) -> Report {
        let mut obj = Map::new();
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("command".into(), json!(command));
        obj.insert("pass".into(), json!(ok));
        if let Value::Object(fields) = body {
            obj.extend(fields);
        }
        Report { ok, json: Value::Object(obj), text }
    }

    /// A report made of independent checks.
    pub fn from_checks(command: &str, checks: &[Check], extra: Value) -> Report {
        let ok = !checks.is_empty() && checks.iter().all(|c| c.holds);
        let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
        let failed = checks.iter().filter(|c| !c.holds).count();
        text.push_str(&format!("{} passed, {failed} failed", checks.len() - failed));
        let mut body = json!({"checks": checks.iter().map(Check::to_json).collect::<Vec<_>>()});
        if let (Value::Object(b), Value::Object(e)) = (&mut body, extra) {
            b.extend(e);
        }
        Report::new(command, ok, body, text)
    }

    /// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
    pub fn print(&self, format: Format) {
        let out = match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize"),
        };
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }
}
