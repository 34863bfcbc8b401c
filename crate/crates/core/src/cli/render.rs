use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graded::GradedDims;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Pretty => "txt",
        }
    }
}

/// A command result in every supported format. `csv` is `None` when the command has
/// no tabular form.
pub struct Rendered {
    pub name: &'static str,
    pub json: Value,
    pub csv: Option<String>,
    pub pretty: String,
    /// `0` on success, `2` when a verification inside the command failed.
    pub code: i32,
    pub warnings: Vec<String>,
}

impl Rendered {
    pub fn new(name: &'static str, body: &impl Serialize, pretty: String) -> Result<Self> {
        let json = serde_json::to_value(body).map_err(|e| Error::Internal(e.to_string()))?;
        Ok(Rendered { name, json, csv: None, pretty, code: 0, warnings: Vec::new() })
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn failing_unless(mut self, ok: bool) -> Self {
        if !ok {
            self.code = 2;
        }
        self
    }

    pub fn format(&self, f: Format) -> Result<String> {
        match f {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| Error::Internal(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| Error::InvalidInput(format!("{} has no csv output", self.name))),
            Format::Pretty => Ok(self.pretty.clone()),
        }
    }
}

pub fn csv_table<R: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: R) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// Rows `(key, degree, dim)` for a keyed family of graded dimensions.
pub fn graded_rows<'a>(items: impl IntoIterator<Item = (String, &'a GradedDims)>) -> Vec<Vec<String>> {
    items
        .into_iter()
        .flat_map(|(k, g)| g.iter().map(move |(d, m)| vec![k.clone(), d.to_string(), m.to_string()]))
        .collect()
}

/// `{}` prints as `∅` so empty subsets stay visible.
pub fn set_label(s: &str) -> String {
    if s.is_empty() {
        "∅".to_string()
    } else {
        format!("{{{s}}}")
    }
}
