//! Output rendering: aligned text tables, CSV with the fixed sweep schema,
//! and hand-built JSON (all values deterministic byte-for-byte).

use std::fmt::Write as _;
use std::path::PathBuf;

use glqchar::arith::prime_power;
use glqchar::chardeg::degree_of_profile;
use glqchar::glq::{enumerate_profiles, profile_multiplicity};
use glqchar::statistics::ProportionReport;

use crate::CliError;

/// Decimal places rendered in sweep output; the exact fraction columns are
/// the contract, the decimal is advisory.
const DECIMAL_PLACES: u32 = 6;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Table,
    Csv,
    Json,
}

impl TableFormat {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text {
            "table" => Ok(TableFormat::Table),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(CliError::usage(format!(
                "unknown format '{other}' (expected table, csv, or json)"
            ))),
        }
    }
}

/// Where rendered text goes; writing failures are I/O errors (exit 3).
pub struct OutputTarget {
    path: Option<PathBuf>,
}

impl OutputTarget {
    pub fn new(path: Option<PathBuf>) -> Self {
        OutputTarget { path }
    }

    pub fn write(&self, content: &str) -> Result<(), CliError> {
        match &self.path {
            Some(path) => std::fs::write(path, content)
                .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}

/// One row per degree profile of GL(n, q).
pub fn render_degrees(
    n: u32,
    q: u64,
    factored: bool,
    format: TableFormat,
) -> Result<String, CliError> {
    if prime_power(q).is_none() {
        return Err(CliError::usage(format!(
            "q = {q} is not a prime power >= 2"
        )));
    }

    let mut rows: Vec<Vec<String>> = Vec::new();
    for profile in enumerate_profiles(n, q) {
        let multiplicity =
            profile_multiplicity(&profile, q).map_err(|e| CliError::usage(e.to_string()))?;
        let f = degree_of_profile(&profile, q).map_err(|e| CliError::usage(e.to_string()))?;
        let mut row = vec![profile.to_string(), multiplicity.to_string()];
        if factored {
            row.push(f.index_factor.to_string());
            row.push(f.unipotent_factor.to_string());
        }
        row.push(f.degree.to_string());
        rows.push(row);
    }

    let mut header = vec!["profile", "multiplicity"];
    if factored {
        header.push("index_factor");
        header.push("unipotent_factor");
    }
    header.push("degree");

    Ok(match format {
        TableFormat::Table => render_text_table(&header, &rows),
        TableFormat::Csv => render_csv(&header, &rows),
        TableFormat::Json => render_json(&header, &rows),
    })
}

/// Sweep rows in the fixed schema `kind,n,q,d,n0,numerator,denominator,decimal`.
pub fn render_sweep(reports: &[ProportionReport], format: TableFormat) -> String {
    let header = [
        "kind",
        "n",
        "q",
        "d",
        "n0",
        "numerator",
        "denominator",
        "decimal",
    ];
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.kind.to_string(),
                r.n.to_string(),
                r.q.to_string(),
                r.d.to_string(),
                r.n0.to_string(),
                r.numerator.to_string(),
                r.denominator.to_string(),
                r.decimal_string(DECIMAL_PLACES),
            ]
        })
        .collect();
    match format {
        TableFormat::Csv => render_csv(&header, &rows),
        TableFormat::Json => render_json(&header, &rows),
        TableFormat::Table => render_text_table(&header, &rows),
    }
}

fn render_text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{cell:<w$}", w = w);
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    emit(&mut out, &header_cells);
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_escape(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Quotes a field when it contains a separator; none of our fields contain
/// quotes themselves.
fn csv_escape(cell: &str) -> String {
    if cell.contains(',') || cell.contains(';') {
        format!("\"{cell}\"")
    } else {
        cell.to_string()
    }
}

/// Minimal JSON array of objects. Numeric-looking columns stay unquoted only
/// for the small grid coordinates; arbitrary-precision values are strings.
fn render_json(header: &[&str], rows: &[Vec<String>]) -> String {
    let bare = |name: &str| matches!(name, "n" | "q" | "d" | "n0");
    let mut out = String::from("[\n");
    for (i, row) in rows.iter().enumerate() {
        out.push_str("  {");
        for (j, (name, cell)) in header.iter().zip(row).enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            if bare(name) {
                let _ = write!(out, "\"{name}\": {cell}");
            } else {
                let _ = write!(out, "\"{name}\": \"{cell}\"");
            }
        }
        out.push('}');
        if i + 1 < rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_table_for_gl2_f2() {
        let text = render_degrees(2, 2, false, TableFormat::Table).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4); // header + 3 profiles
        assert!(lines[0].starts_with("profile"));
        assert!(text.contains("1:[1,1]"));
    }

    #[test]
    fn degrees_rejects_non_prime_power() {
        assert!(render_degrees(2, 6, false, TableFormat::Table).is_err());
    }

    #[test]
    fn csv_quotes_fields_with_separators() {
        assert_eq!(csv_escape("1:[1,1]"), "\"1:[1,1]\"");
        assert_eq!(csv_escape("42"), "42");
    }

    #[test]
    fn json_render_is_wellformed_enough() {
        let text = render_degrees(1, 2, true, TableFormat::Json).unwrap();
        assert!(text.starts_with("[\n"));
        assert!(text.trim_end().ends_with(']'));
        assert!(text.contains("\"index_factor\": \"1\""));
    }
}
