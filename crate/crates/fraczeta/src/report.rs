//! Machine-readable reports: JSON lines or CSV, one record per line,
//! numbers serialized with 17 significant decimal digits so every f64
//! round-trips exactly. Output is byte-deterministic for identical inputs.

use std::io::{self, Write};

use crate::verify::{ScanOutcome, VerificationRecord};
use crate::zeta::ZeroRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    JsonLines,
    Csv,
}

/// 17 significant digits; `5.5` prints as `5.5000000000000000e0`, which is
/// both a valid JSON number and an exact f64 round-trip.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub const VERIFY_FIELDS: [&str; 10] = [
    "sigma",
    "t",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "residual",
    "predicted",
    "budget",
    "passed",
];

pub fn write_verify_report<W: Write + ?Sized>(
    out: &mut W,
    records: &[VerificationRecord],
    format: ReportFormat,
) -> io::Result<()> {
    if format == ReportFormat::Csv {
        writeln!(out, "{}", VERIFY_FIELDS.join(","))?;
    }
    for r in records {
        let values = [
            num(r.rho.re),
            num(r.rho.im),
            num(r.lhs.re),
            num(r.lhs.im),
            num(r.rhs.re),
            num(r.rhs.im),
            num(r.residual),
            num(r.predicted_residual),
            num(r.error_budget),
            r.passed.to_string(),
        ];
        write_row(out, format, &VERIFY_FIELDS, &values)?;
    }
    Ok(())
}

pub const SCAN_FIELDS: [&str; 7] = [
    "sigma",
    "t",
    "measured_re",
    "measured_im",
    "predicted_re",
    "predicted_im",
    "error",
];

pub fn write_scan_report<W: Write + ?Sized>(
    out: &mut W,
    rows: &[ScanOutcome],
    format: ReportFormat,
) -> io::Result<()> {
    if format == ReportFormat::Csv {
        writeln!(out, "{}", SCAN_FIELDS.join(","))?;
    }
    for row in rows {
        let values = match row {
            ScanOutcome::Row(r) => [
                num(r.s.re),
                num(r.s.im),
                num(r.measured.re),
                num(r.measured.im),
                num(r.predicted.re),
                num(r.predicted.im),
                match format {
                    ReportFormat::JsonLines => "null".to_string(),
                    ReportFormat::Csv => String::new(),
                },
            ],
            ScanOutcome::Failed { s, message } => [
                num(s.re),
                num(s.im),
                null_num(format),
                null_num(format),
                null_num(format),
                null_num(format),
                match format {
                    ReportFormat::JsonLines => json_string(message),
                    ReportFormat::Csv => csv_escape(message),
                },
            ],
        };
        write_row(out, format, &SCAN_FIELDS, &values)?;
    }
    Ok(())
}

pub const ZEROS_FIELDS: [&str; 4] = ["ordinate", "bracket_lo", "bracket_hi", "eta_residual"];

pub fn write_zeros_report<W: Write + ?Sized>(
    out: &mut W,
    zeros: &[ZeroRecord],
    format: ReportFormat,
) -> io::Result<()> {
    if format == ReportFormat::Csv {
        writeln!(out, "{}", ZEROS_FIELDS.join(","))?;
    }
    for z in zeros {
        let values = [
            num(z.ordinate),
            num(z.bracket_lo),
            num(z.bracket_hi),
            num(z.eta_residual),
        ];
        write_row(out, format, &ZEROS_FIELDS, &values)?;
    }
    Ok(())
}

fn null_num(format: ReportFormat) -> String {
    match format {
        ReportFormat::JsonLines => "null".to_string(),
        ReportFormat::Csv => String::new(),
    }
}

fn json_string(s: &str) -> String {
    let mut escaped = String::with_capacity(s.len() + 2);
    escaped.push('"');
    for ch in s.chars() {
        match ch {
            '"' => escaped.push_str("\\\""),
            '\\' => escaped.push_str("\\\\"),
            '\n' => escaped.push_str("\\n"),
            '\r' => escaped.push_str("\\r"),
            '\t' => escaped.push_str("\\t"),
            c if (c as u32) < 0x20 => escaped.push_str(&format!("\\u{:04x}", c as u32)),
            c => escaped.push(c),
        }
    }
    escaped.push('"');
    escaped
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One record: a JSON object or a CSV row. Values arrive preserialized
/// (numbers, booleans, JSON strings/nulls) and are emitted verbatim.
fn write_row<W: Write + ?Sized>(
    out: &mut W,
    format: ReportFormat,
    fields: &[&str],
    values: &[String],
) -> io::Result<()> {
    match format {
        ReportFormat::JsonLines => {
            let mut line = String::from("{");
            for (i, (k, v)) in fields.iter().zip(values).enumerate() {
                if i > 0 {
                    line.push(',');
                }
                line.push('"');
                line.push_str(k);
                line.push_str("\":");
                line.push_str(v);
            }
            line.push('}');
            writeln!(out, "{line}")
        }
        ReportFormat::Csv => writeln!(out, "{}", values.join(",")),
    }
}
