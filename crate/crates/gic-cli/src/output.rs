//! Report rows and the CSV/JSON emitters.
//!
//! CSV formats reals with six decimals; JSON keeps full precision and
//! preserves key order.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Real(f64),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Real(x) => format!("{x:.6}"),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Text(s) => serde_json::Value::String(s.clone()),
            Cell::Real(x) => serde_json::json!(x),
            Cell::Bool(b) => serde_json::json!(b),
        }
    }
}

/// An ordered key -> value record; keys must be unique within a row and
/// consistent across the rows of one report.
#[derive(Debug, Clone, Default)]
pub struct ReportRow {
    cells: Vec<(String, Cell)>,
}

impl ReportRow {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(mut self, key: &str, cell: Cell) -> Self {
        debug_assert!(
            self.cells.iter().all(|(k, _)| k != key),
            "duplicate report key {key}"
        );
        self.cells.push((key.to_string(), cell));
        self
    }

    pub fn text(self, key: &str, value: impl Into<String>) -> Self {
        self.push(key, Cell::Text(value.into()))
    }

    pub fn real(self, key: &str, value: f64) -> Self {
        self.push(key, Cell::Real(value))
    }

    pub fn flag(self, key: &str, value: bool) -> Self {
        self.push(key, Cell::Bool(value))
    }

    pub fn opt_text(self, key: &str, value: Option<&str>) -> Self {
        self.text(key, value.unwrap_or(""))
    }
}

fn write_csv(rows: &[ReportRow], w: &mut dyn Write) -> io::Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    if let Some(first) = rows.first() {
        csv.write_record(first.cells.iter().map(|(k, _)| k.as_str()))?;
        for row in rows {
            csv.write_record(row.cells.iter().map(|(_, c)| c.csv()))?;
        }
    }
    csv.flush()
}

fn write_json(rows: &[ReportRow], w: &mut dyn Write) -> io::Result<()> {
    let array: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            serde_json::Value::Object(
                row.cells
                    .iter()
                    .map(|(k, c)| (k.clone(), c.json()))
                    .collect(),
            )
        })
        .collect();
    serde_json::to_writer_pretty(&mut *w, &array)?;
    writeln!(w)
}

/// Writes the rows to `out` (or stdout) in the requested format.
pub fn write_rows(rows: &[ReportRow], format: Format, out: Option<&Path>) -> io::Result<()> {
    let emit = |w: &mut dyn Write| match format {
        Format::Csv => write_csv(rows, w),
        Format::Json => write_json(rows, w),
    };
    match out {
        Some(path) => {
            let mut file = File::create(path)?;
            emit(&mut file)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            emit(&mut lock)
        }
    }
}
