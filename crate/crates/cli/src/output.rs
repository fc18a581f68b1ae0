use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    /// One JSON object per line.
    Json,
}

/// Buffered stdout that knows the selected format.
pub struct Sink {
    pub format: Format,
    out: io::BufWriter<io::Stdout>,
}

impl Sink {
    pub fn new(format: Format) -> Self {
        Sink {
            format,
            out: io::BufWriter::new(io::stdout()),
        }
    }

    pub fn is(&self, format: Format) -> bool {
        self.format == format
    }

    pub fn line(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.out, "{text}")
    }

    pub fn row<S: AsRef<str>>(&mut self, fields: &[S]) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(fields.iter().map(|f| f.as_ref()))
            .map_err(io::Error::other)?;
        let bytes = w
            .into_inner()
            .map_err(|e| io::Error::other(e.to_string()))?;
        self.out.write_all(&bytes)
    }

    /// Objects are rendered with sorted keys, so re-parsing and re-rendering a
    /// line reproduces it byte for byte.
    pub fn record(&mut self, value: Value) -> io::Result<()> {
        writeln!(self.out, "{value}")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

/// Lays out rows of cells in right-aligned columns separated by two spaces.
pub fn align(rows: &[Vec<String>]) -> Vec<String> {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect()
}
