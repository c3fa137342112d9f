//! Self-describing CSV and JSON tables.
//!
//! CSV layout: `#`-prefixed provenance lines, one header row, data rows.
//! Floats are written with 17 significant digits; line endings are `\n`.

use std::io::Write;
use std::path::Path;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// Seventeen significant digits, scientific notation.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_f64(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(v) => Some(*v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Table {
    /// Provenance as ordered `(key, value)` pairs.
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self { meta: Vec::new(), columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn meta(mut self, key: &str, value: impl Into<String>) -> Self {
        self.meta.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn push_nums(&mut self, row: &[f64]) {
        self.push(row.iter().map(|v| Cell::Num(*v)).collect());
    }

    /// Insert a column computed from each existing row.
    pub fn insert_column(&mut self, at: usize, name: &str, f: impl Fn(&[Cell]) -> Cell) {
        self.columns.insert(at, name.to_string());
        for row in &mut self.rows {
            let v = f(row);
            row.insert(at, v);
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.meta {
            s.push_str(&format!("# {k}: {v}\n"));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let body = w
            .write_record(&self.columns)
            .and_then(|_| self.rows.iter().try_for_each(|row| w.write_record(row.iter().map(Cell::csv))))
            .and_then(|_| w.into_inner().map_err(|e| e.into_error().into()));
        s.push_str(std::str::from_utf8(&body.expect("writing to memory")).expect("UTF-8 cells"));
        s
    }

    pub fn to_json(&self) -> Result<String> {
        let meta: serde_json::Map<String, serde_json::Value> =
            self.meta.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect();
        let doc = serde_json::json!({
            "meta": meta,
            "columns": self.columns,
            "rows": self.rows,
        });
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        Ok(s)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => Ok(self.to_csv()),
            Format::Json => self.to_json(),
        }
    }

    /// Write to `path`, or to stdout when `path` is `None`.
    pub fn write(&self, format: Format, path: Option<&Path>) -> Result<()> {
        let text = self.render(format)?;
        match path {
            Some(p) => std::fs::write(p, text).map_err(|source| Error::Io { path: p.to_path_buf(), source }),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|source| Error::Io { path: "<stdout>".into(), source }),
        }
    }
}

/// Parse the numeric body of a CSV produced by [`Table::to_csv`].
pub fn read_csv_numbers(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let columns = r.headers()?.iter().map(String::from).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let row = rec?
            .iter()
            .map(|c| c.parse::<f64>().map_err(|e| Error::InvalidConfig(format!("bad number {c:?}: {e}"))))
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    Ok((columns, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout_and_round_trip() {
        let mut t = Table::new(["x", "psi"]).meta("command", "figure --id 1");
        t.push_nums(&[2.0 / std::f64::consts::PI, 0.1]);
        t.push_nums(&[0.0, -1.5e-300]);
        let csv = t.to_csv();
        assert!(csv.starts_with("# command: figure --id 1\nx,psi\n"));
        assert!(csv.contains("6.3661977236758138e-1"));
        let (cols, rows) = read_csv_numbers(&csv).unwrap();
        assert_eq!(cols, ["x", "psi"]);
        assert_eq!(rows[0][0], 2.0 / std::f64::consts::PI);
        assert_eq!(rows[1][1], -1.5e-300);
    }

    #[test]
    fn json_has_columns_and_rows() {
        let mut t = Table::new(["check", "passed"]);
        t.push(vec!["a".into(), true.into()]);
        let v: serde_json::Value = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(v["rows"][0][1], serde_json::Value::Bool(true));
        assert_eq!(v["columns"][0], "check");
    }
}
