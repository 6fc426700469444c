//! Rendering of command results as JSON, CSV or an aligned table.

use serde_json::Value;

use crate::Format;

pub enum Output {
    /// One value; the table form is the bare value.
    Scalar { key: &'static str, value: String, json: Value },
    Table { header: Vec<&'static str>, rows: Vec<Vec<String>>, json: Value },
    /// Printed as is in every format.
    Raw(String),
}

impl Output {
    pub fn scalar(key: &'static str, value: String, json: Value) -> Output {
        Output::Scalar { key, value, json }
    }

    pub fn table(header: &[&'static str], rows: Vec<Vec<String>>, json: Value) -> Output {
        Output::Table { header: header.to_vec(), rows, json }
    }

    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Output::Raw(text), _) => text.clone(),
            (Output::Scalar { json, .. } | Output::Table { json, .. }, Format::Json) => {
                format!("{}\n", serde_json::to_string_pretty(json).expect("plain data"))
            }
            (Output::Scalar { value, .. }, Format::Table) => format!("{value}\n"),
            (Output::Scalar { key, value, .. }, Format::Csv) => csv_text(&[key], &[vec![value.clone()]]),
            (Output::Table { header, rows, .. }, Format::Csv) => csv_text(header, rows),
            (Output::Table { header, rows, .. }, Format::Table) => aligned(header, rows),
        }
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8 fields")
}

fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

/// Facet lists in a compact bracketed form, e.g. `[[1,2],[2,3]]`.
pub fn facets_text(facets: &[Vec<usize>]) -> String {
    serde_json::to_string(facets).expect("plain data")
}
