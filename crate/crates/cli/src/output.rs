use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

/// Bumped whenever the JSON layout changes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Result of one command. Every number is an exact `p/q` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub format_version: u32,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub checks: usize,
    pub failures: usize,
}

impl OutputRecord {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        OutputRecord {
            format_version: FORMAT_VERSION,
            command: command.to_string(),
            parameters: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
            checks: 0,
            failures: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    /// Counts one check and records whether it passed.
    pub fn check(&mut self, passed: bool) {
        self.checks += 1;
        if !passed {
            self.failures += 1;
        }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
            Format::Table => self.write_table(out),
        }
    }

    fn write_table(&self, out: &mut impl Write) -> io::Result<()> {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|c| abbreviate(c)).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &cells {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |out: &mut dyn Write, r: &[String]| -> io::Result<()> {
            let parts: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", parts.join("  ").trim_end())
        };
        line(out, &self.columns)?;
        for r in &cells {
            line(out, r)?;
        }
        for n in &self.notes {
            writeln!(out, "note: {n}")?;
        }
        if self.checks > 0 {
            writeln!(out, "{} checks, {} failed", self.checks, self.failures)?;
        }
        Ok(())
    }
}

/// Long exact rationals are shown as a decimal approximation in tables.
fn abbreviate(cell: &str) -> String {
    const MAX: usize = 40;
    if cell.len() <= MAX {
        return cell.to_string();
    }
    match beta_moments::exact::parse_rational(cell) {
        Ok(x) => {
            use num_traits::ToPrimitive;
            match x.to_f64() {
                Some(f) if f.is_finite() => format!("≈{f:.15e}"),
                _ => format!("{}…", &cell[..MAX]),
            }
        }
        Err(_) => cell.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abbreviation() {
        assert_eq!(abbreviate("3/4"), "3/4");
        let long = format!("1/{}", "3".repeat(50));
        assert!(abbreviate(&long).starts_with("≈3.0"));
        let text = "x".repeat(60);
        assert_eq!(abbreviate(&text), text);
    }

    #[test]
    fn table_layout() {
        let mut r = OutputRecord::new("t", &["n", "value"]);
        r.row(vec!["0".into(), "1".into()]);
        r.row(vec!["10".into(), "-3/2".into()]);
        r.check(true);
        let mut buf = Vec::new();
        r.write(Format::Table, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "n   value\n0   1\n10  -3/2\n1 checks, 0 failed\n");
    }
}
