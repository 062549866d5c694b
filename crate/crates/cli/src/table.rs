//! Rendering the catalog check in the three output formats.

use std::fmt::Write as _;

use liecoh_core::catalog::{RowOutcome, RowReport, TableReport};
use serde_json::{json, Value};

pub const SKIPPED: &str = "skipped(external)";

fn status(row: &RowReport) -> String {
    match &row.outcome {
        RowOutcome::Skipped => SKIPPED.into(),
        RowOutcome::Error(e) => format!("error: {e}"),
        RowOutcome::Computed { .. } if row.passed() => "match".into(),
        RowOutcome::Computed { .. } => "mismatch".into(),
    }
}

fn computed(row: &RowReport) -> Option<[usize; 3]> {
    match row.outcome {
        RowOutcome::Computed { h0, h1, h2, .. } => Some([h0, h1, h2]),
        _ => None,
    }
}

pub fn json_rows(report: &TableReport) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let e = row.entry;
            let h = computed(row).map_or(Value::Null, |[a, b, c]| json!({ "h0": a, "h1": b, "h2": c }));
            json!({
                "algebra": e.name,
                "dim": e.dim,
                "label": e.label,
                "key": e.key(),
                "expected": { "h0": e.expected.h0, "h1": e.expected.h1, "h2": e.expected.h2 },
                "computed": h,
                "status": status(row),
            })
        })
        .collect();
    json!({
        "rows": rows,
        "matched": report.passed_count(),
        "skipped": report.rows.iter().filter(|r| r.skipped()).count(),
        "total": report.rows.len(),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv(report: &TableReport) -> String {
    let mut out = String::from("algebra,dim,label,h0,h1,h2,expected_h0,expected_h1,expected_h2,status\n");
    for row in &report.rows {
        let e = row.entry;
        let h = match computed(row) {
            Some([a, b, c]) => format!("{a},{b},{c}"),
            None => ",,".into(),
        };
        let x = e.expected;
        let _ = writeln!(
            out,
            "{},{},{},{h},{},{},{},{}",
            csv_field(e.name),
            e.dim,
            csv_field(e.label),
            x.h0,
            x.h1,
            x.h2,
            csv_field(&status(row))
        );
    }
    out
}

/// A `tabular` with the columns algebra, dim, label, H^0, H^1, H^2 holding
/// computed values; rows whose values differ from the expected ones carry the
/// expected triple in a trailing comment.
pub fn latex(report: &TableReport) -> String {
    let mut out = String::from("\\begin{tabular}{c|ccccc}\n");
    out.push_str("$\\mathfrak{g}$ & $\\dim \\mathfrak{g}$ & label & $\\dim H^0(\\mathfrak{g},\\mathfrak{g})$ & $\\dim H^1(\\mathfrak{g},\\mathfrak{g})$ & $\\dim H^2(\\mathfrak{g},\\mathfrak{g})$ \\\\\n\\hline\n");
    for row in &report.rows {
        let e = row.entry;
        let _ = write!(out, "${}$ & ${}$ & ${}$ & ", e.latex_name, e.dim, e.latex_label);
        match computed(row) {
            Some([a, b, c]) => {
                let _ = write!(out, "${a}$ & ${b}$ & ${c}$ \\\\");
                if !row.passed() {
                    let x = e.expected;
                    let _ = write!(out, " % expected ({}, {}, {})", x.h0, x.h1, x.h2);
                }
            }
            None => {
                let _ = write!(out, "\\multicolumn{{3}}{{c}}{{\\texttt{{{}}}}} \\\\", status(row));
                let x = e.expected;
                let _ = write!(out, " % expected ({}, {}, {})", x.h0, x.h1, x.h2);
            }
        }
        out.push('\n');
    }
    out.push_str("\\end{tabular}\n");
    out
}
