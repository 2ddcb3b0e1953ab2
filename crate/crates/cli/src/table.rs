//! Result tables and their CSV/JSON renderings.

use crate::config::RunConfig;
use serde_json::{json, Map, Value as Json};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Value {
    /// Scientific notation with 12 significant digits.
    pub fn render(&self) -> String {
        match self {
            Value::Float(x) => format!("{x:.11e}"),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Float(x) if x.is_finite() => json!(x),
            Value::Float(_) => Json::Null,
            Value::Int(i) => json!(i),
            Value::Bool(b) => json!(b),
            Value::Text(s) => json!(s),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Float(x) => Some(*x),
            Value::Int(i) => Some(*i as f64),
            _ => None,
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Float(x)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Text(x.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub config: RunConfig,
    pub tolerances: Vec<(String, f64)>,
    pub summary: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl ResultTable {
    pub fn new(config: RunConfig, columns: &[&str]) -> Self {
        Self {
            config,
            tolerances: Vec::new(),
            summary: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the columns");
        self.rows.push(row);
    }

    pub fn tolerance(&mut self, name: &str, value: f64) {
        self.tolerances.push((name.to_string(), value));
    }

    pub fn note(&mut self, name: &str, value: impl Into<Value>) {
        self.summary.push((name.to_string(), value.into()));
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Value>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r[k]).collect())
    }

    pub fn summary_value(&self, name: &str) -> Option<&Value> {
        self.summary.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# qzeno {} {}\n", env!("CARGO_PKG_VERSION"), self.config.command);
        out.push_str(&format!("#@ command={}\n", self.config.command));
        for (k, v) in self.config.entries() {
            out.push_str(&format!("#@ {k}={v}\n"));
        }
        for (k, v) in &self.tolerances {
            out.push_str(&format!("# tolerance {k}={}\n", Value::Float(*v).render()));
        }
        for (k, v) in &self.summary {
            out.push_str(&format!("# summary {k}={}\n", v.render()));
        }
        out.push_str("#@end\n");
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(Value::render).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let config: Map<String, Json> = self.config.entries().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let tolerances: Map<String, Json> = self.tolerances.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let summary: Map<String, Json> = self.summary.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        let rows: Vec<Json> = self.rows.iter().map(|r| Json::Array(r.iter().map(Value::to_json).collect())).collect();
        let doc = json!({
            "metadata": {
                "command": self.config.command,
                "version": env!("CARGO_PKG_VERSION"),
                "config": config,
                "tolerances": tolerances,
                "summary": summary,
            },
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }
}
