//! Rectangular text tables rendered as TSV or Markdown.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("row {row} has {found} cells, header has {expected}")]
pub struct RaggedRow {
    pub row: usize,
    pub found: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputTable {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl OutputTable {
    pub fn new<H: Into<String>>(
        headers: impl IntoIterator<Item = H>,
        rows: Vec<Vec<String>>,
    ) -> Result<Self, RaggedRow> {
        let headers: Vec<String> = headers.into_iter().map(Into::into).collect();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != headers.len() {
                return Err(RaggedRow {
                    row: i,
                    found: r.len(),
                    expected: headers.len(),
                });
            }
        }
        Ok(OutputTable { headers, rows })
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    /// Tab-separated, one line per row, each line LF-terminated.
    pub fn to_tsv(&self) -> String {
        std::iter::once(&self.headers)
            .chain(&self.rows)
            .map(|r| r.join("\t") + "\n")
            .collect()
    }

    pub fn to_markdown(&self) -> String {
        let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
        let mut out = line(&self.headers);
        out.push('|');
        for _ in &self.headers {
            out.push_str("---|");
        }
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.to_tsv(),
            Format::Markdown => self.to_markdown(),
        }
    }
}

impl fmt::Display for OutputTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tsv())
    }
}
