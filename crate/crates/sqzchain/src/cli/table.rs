//! Deterministic CSV rendering.
//!
//! Header row, comma separator, LF line endings, no trailing separator.
//! Numbers are rendered with 9 significant digits: positional notation
//! while the decimal exponent is within [-3, 8], scientific (`d.dddddddde±x`)
//! outside. The rule is fixed so identical tables produce byte-identical
//! documents everywhere.

use crate::error::{Error, Result};

/// One table cell: a number or a bare token (e.g. `true`).
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Number(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

/// A rectangular table with optional leading `#` comment lines.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    comments: Vec<String>,
    headers: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Self {
            comments: Vec::new(),
            headers: headers.iter().map(|h| (*h).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    /// Add a `# ...` line emitted before the header.
    pub fn comment(&mut self, text: &str) {
        self.comments.push(text.to_owned());
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }
}

/// Render a table to CSV text. Fails on ragged rows or non-finite numbers.
pub fn write_csv(table: &Table) -> Result<String> {
    let mut out = String::new();
    for comment in &table.comments {
        out.push_str("# ");
        out.push_str(comment);
        out.push('\n');
    }
    out.push_str(&table.headers.join(","));
    out.push('\n');
    for (i, row) in table.rows.iter().enumerate() {
        if row.len() != table.headers.len() {
            return Err(Error::Internal(format!(
                "ragged table: row {} has {} cells, header has {}",
                i,
                row.len(),
                table.headers.len()
            )));
        }
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            match cell {
                Cell::Number(v) => {
                    if !v.is_finite() {
                        return Err(Error::Internal(format!(
                            "non-finite number {v} in row {i}"
                        )));
                    }
                    out.push_str(&format_significant(*v));
                }
                Cell::Text(t) => {
                    if t.contains(',') || t.contains('\n') || t.contains('"') {
                        return Err(Error::Internal(format!(
                            "text cell `{t}` needs quoting, which this writer does not emit"
                        )));
                    }
                    out.push_str(t);
                }
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// 9-significant-digit rendering (see module docs).
pub fn format_significant(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let sci = format!("{:.8e}", v);
    let exp: i32 = sci[sci.find('e').expect("always present") + 1..]
        .parse()
        .expect("exponent is an integer");
    if (-3..=8).contains(&exp) {
        format!("{:.*}", (8 - exp).max(0) as usize, v)
    } else {
        sci
    }
}
