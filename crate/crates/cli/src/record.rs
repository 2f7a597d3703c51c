use std::time::Instant;

use num_complex::Complex64;
use serde_json::{Map, Value};
use zetaforge::specialfn::Flags;

pub const SCHEMA_VERSION: &str = "1";

/// One self-describing result of a command invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
    pub flags: Vec<String>,
    pub elapsed_ms: u64,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs: Vec::new(),
            results: Vec::new(),
            flags: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn result(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.results.push((key.to_string(), value.to_string()));
        self
    }

    pub fn real(&mut self, key: &str, x: f64) -> &mut Self {
        self.result(key, format_number(x))
    }

    /// Adds `<key>_re` and `<key>_im`.
    pub fn complex(&mut self, key: &str, z: Complex64) -> &mut Self {
        self.real(&format!("{key}_re"), z.re);
        self.real(&format!("{key}_im"), z.im)
    }

    pub fn add_flags(&mut self, flags: Flags) -> &mut Self {
        for f in flags.iter() {
            let name = f.name().to_string();
            if !self.flags.contains(&name) {
                self.flags.push(name);
            }
        }
        self
    }

    pub fn finish(&mut self, start: Instant) -> &mut Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.results.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn to_json(&self) -> Value {
        let pairs = |items: &[(String, String)]| {
            items.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>()
        };
        let mut obj = Map::new();
        obj.insert("schema_version".into(), Value::String(self.schema_version.clone()));
        obj.insert("command".into(), Value::String(self.command.clone()));
        obj.insert("inputs".into(), Value::Object(pairs(&self.inputs)));
        obj.insert("results".into(), Value::Object(pairs(&self.results)));
        obj.insert("flags".into(), Value::Array(self.flags.iter().cloned().map(Value::String).collect()));
        obj.insert("elapsed_ms".into(), Value::from(self.elapsed_ms));
        Value::Object(obj)
    }

    pub fn to_json_line(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let pairs = |v: &Value| -> Option<Vec<(String, String)>> {
            v.as_object()?
                .iter()
                .map(|(k, v)| Some((k.clone(), v.as_str()?.to_string())))
                .collect()
        };
        Some(OutputRecord {
            schema_version: v.get("schema_version")?.as_str()?.to_string(),
            command: v.get("command")?.as_str()?.to_string(),
            inputs: pairs(v.get("inputs")?)?,
            results: pairs(v.get("results")?)?,
            flags: v
                .get("flags")?
                .as_array()?
                .iter()
                .map(|f| f.as_str().map(str::to_string))
                .collect::<Option<_>>()?,
            elapsed_ms: v.get("elapsed_ms")?.as_u64()?,
        })
    }

    /// Two-row CSV: result keys, then values.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let keys: Vec<&str> = self.results.iter().map(|(k, _)| k.as_str()).collect();
        let values: Vec<&str> = self.results.iter().map(|(_, v)| v.as_str()).collect();
        w.write_record(&keys).expect("in-memory write");
        w.write_record(&values).expect("in-memory write");
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// Decimal rendering with 17 significant digits; scientific notation
/// outside [1e-4, 1e15).
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..15).contains(&mag) {
        return format!("{x:.16e}");
    }
    let decimals = (16 - mag).max(1) as usize;
    format!("{x:.decimals$}")
}
