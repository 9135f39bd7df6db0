//! Deterministic table and report emission.
//!
//! Numbers are printed in Rust's shortest round-trip decimal form (17
//! significant digits at most), so identical configurations produce
//! byte-identical files on every platform.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Shortest round-trip decimal of an `f64` (scientific notation where it
/// is shorter, 17 significant digits at most).
pub fn fmt_f64(v: f64) -> String {
    let mut buffer = ryu::Buffer::new();
    buffer.format(v).to_string()
}

/// A simple rectangular table with a header row.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.header.join(","));
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.join(","));
        }
        out
    }

    /// Rows as an array of objects keyed by the header names.
    pub fn to_json_rows(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (key, value) in self.header.iter().zip(row) {
                        // numeric cells stay numeric in JSON
                        let parsed = if let Ok(int) = value.parse::<i64>() {
                            Some(serde_json::Value::Number(int.into()))
                        } else {
                            value
                                .parse::<f64>()
                                .ok()
                                .and_then(serde_json::Number::from_f64)
                                .map(serde_json::Value::Number)
                        };
                        obj.insert(
                            (*key).to_string(),
                            parsed.unwrap_or_else(|| serde_json::Value::String(value.clone())),
                        );
                    }
                    serde_json::Value::Object(obj)
                })
                .collect(),
        )
    }
}

pub fn json_number(v: f64) -> serde_json::Value {
    serde_json::Number::from_f64(v)
        .map(serde_json::Value::Number)
        .unwrap_or_else(|| serde_json::Value::String(fmt_f64(v)))
}
