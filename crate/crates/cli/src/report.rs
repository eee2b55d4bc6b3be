use std::fmt::Write as _;
use std::fs;

use crate::CliError;

/// Result of one job: a fixed header, ordered rows of exact strings and
/// free-form summary lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub kind: &'static str,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub summary: Vec<String>,
    /// False when a property check inside the job failed.
    pub passed: bool,
}

pub const TRACE_HEADER: [&str; 6] = ["mu", "dim_V", "formal_degree", "tau_G", "factor", "regular"];
pub const GENUS_HEADER: [&str; 4] = ["genus", "dims", "twists", "value"];
pub const SWEEP_HEADER: [&str; 3] = ["n", "k", "value"];
pub const VERIFY_HEADER: [&str; 6] = [
    "pair",
    "noncompact_simple",
    "weights_checked",
    "factorization",
    "singular_vanishing",
    "scale_invariance",
];

impl Report {
    pub fn new(kind: &'static str, header: &[&'static str]) -> Self {
        Self {
            kind,
            header: header.to_vec(),
            rows: Vec::new(),
            summary: Vec::new(),
            passed: true,
        }
    }

    /// Column-aligned text table followed by the summary lines.
    pub fn render_table(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &mut dyn Iterator<Item = &str>| {
            let mut parts = Vec::new();
            for (cell, w) in cells.zip(&widths) {
                parts.push(format!("{cell:<w$}"));
            }
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&mut out, &mut self.header.iter().copied());
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        let _ = writeln!(out, "{}", rule.join("  "));
        for row in &self.rows {
            line(&mut out, &mut row.iter().map(String::as_str));
        }
        for s in &self.summary {
            let _ = writeln!(out, "{s}");
        }
        out
    }
}

/// CSV text for `report`: header row, then one record per row, LF endings.
pub fn render_csv(report: &Report) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&report.header).expect("in-memory write");
    for row in &report.rows {
        w.write_record(row).expect("in-memory write");
    }
    let bytes = w.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("cells are UTF-8")
}

pub fn emit_csv(report: &Report, path: &str) -> Result<(), CliError> {
    fs::write(path, render_csv(report)).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}
