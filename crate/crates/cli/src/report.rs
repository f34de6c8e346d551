//! Report rendering. Every report carries the schema version, library
//! version, composition convention, command, group label and `m`.

use ncm_core::groups::COMPOSITION_CONVENTION;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{Map, Value};

use crate::LIBRARY_VERSION;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Integers that fit in `i64` become JSON numbers; larger ones are strings.
pub fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn uint(x: &BigUint) -> Value {
    int(&BigInt::from(x.clone()))
}

pub fn rational(x: &BigRational) -> Value {
    if x.is_integer() {
        int(&x.to_integer())
    } else {
        Value::from(x.to_string())
    }
}

pub fn composition(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub group: Option<String>,
    pub m: Option<usize>,
    pub body: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Whether every check the command made passed.
    pub ok: bool,
}

impl Report {
    pub fn new(command: &'static str, group: Option<String>, m: Option<usize>) -> Self {
        Report {
            command,
            group,
            m,
            body: Map::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            ok: true,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.body.insert(key.to_string(), value.into());
    }

    pub fn table(&mut self, columns: &[&'static str]) {
        self.columns = columns.to_vec();
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    fn header(&self) -> Vec<(&'static str, Value)> {
        vec![
            ("schema_version", Value::from(SCHEMA_VERSION)),
            ("library_version", Value::from(LIBRARY_VERSION)),
            ("convention", Value::from(COMPOSITION_CONVENTION)),
            ("command", Value::from(self.command)),
            ("group", self.group.clone().map_or(Value::Null, Value::from)),
            ("m", self.m.map_or(Value::Null, Value::from)),
        ]
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_json(&self) -> String {
        let mut out = Map::new();
        for (k, v) in self.header() {
            out.insert(k.to_string(), v);
        }
        for (k, v) in &self.body {
            out.insert(k.clone(), v.clone());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("report serializes");
        s.push('\n');
        s
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.header() {
            out.push_str(&format!("# {k}: {}\n", plain(&v)));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.header().into_iter().chain(self.body.iter().map(|(k, v)| (k.as_str(), v.clone()))) {
            out.push_str(&format!("{k}: {}\n", plain(&v)));
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}
