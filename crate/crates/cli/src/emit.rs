//! Plot-ready output: CSV with a fixed column set or the same records as a
//! JSON array. All floats render with nine significant digits in lowercase
//! scientific notation so reruns are byte-identical.

use crate::sweep::Row;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("nothing to emit: result table is empty")]
    Empty,
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub const CSV_HEADER: &str =
    "scheme,user,metric,method,snr_db,sweep_var,value,ci_lo,ci_hi,trials,seed,error";

/// Render and write the table; `None` writes to stdout. No file is created
/// for an empty table.
pub fn emit(rows: &[Row], format: Format, out: Option<&Path>) -> Result<(), EmitError> {
    if rows.is_empty() {
        return Err(EmitError::Empty);
    }
    let text = match format {
        Format::Csv => render_csv(rows),
        Format::Json => render_json(rows),
    };
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| EmitError::Io {
                path: "<stdout>".into(),
                source,
            })
        }
        Some(path) => std::fs::write(path, text).map_err(|source| EmitError::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

/// Nine significant digits, lowercase scientific.
pub fn sig9(x: f64) -> String {
    format!("{x:.8e}")
}

fn opt_sig9(x: Option<f64>) -> String {
    x.map(sig9).unwrap_or_default()
}

fn opt_u64(x: Option<u64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_csv(rows: &[Row]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.scheme);
        out.push(',');
        out.push_str(&r.user);
        out.push(',');
        out.push_str(&r.metric);
        out.push(',');
        out.push_str(&r.method);
        out.push(',');
        out.push_str(&sig9(r.snr_db));
        out.push(',');
        out.push_str(&opt_sig9(r.sweep_var));
        out.push(',');
        out.push_str(&opt_sig9(r.value));
        out.push(',');
        out.push_str(&opt_sig9(r.ci_lo));
        out.push(',');
        out.push_str(&opt_sig9(r.ci_hi));
        out.push(',');
        out.push_str(&opt_u64(r.trials));
        out.push(',');
        out.push_str(&opt_u64(r.seed));
        out.push(',');
        out.push_str(&r.error.as_deref().map(csv_field).unwrap_or_default());
        out.push('\n');
    }
    out
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_opt_num(x: Option<f64>) -> String {
    x.map(sig9).unwrap_or_else(|| "null".into())
}

pub fn render_json(rows: &[Row]) -> String {
    let mut out = String::from("[\n");
    for (i, r) in rows.iter().enumerate() {
        out.push_str("  {");
        out.push_str(&format!("\"scheme\":{},", json_str(&r.scheme)));
        out.push_str(&format!("\"user\":{},", json_str(&r.user)));
        out.push_str(&format!("\"metric\":{},", json_str(&r.metric)));
        out.push_str(&format!("\"method\":{},", json_str(&r.method)));
        out.push_str(&format!("\"snr_db\":{},", sig9(r.snr_db)));
        out.push_str(&format!("\"sweep_var\":{},", json_opt_num(r.sweep_var)));
        out.push_str(&format!("\"value\":{},", json_opt_num(r.value)));
        out.push_str(&format!("\"ci_lo\":{},", json_opt_num(r.ci_lo)));
        out.push_str(&format!("\"ci_hi\":{},", json_opt_num(r.ci_hi)));
        out.push_str(&format!(
            "\"trials\":{},",
            r.trials.map(|v| v.to_string()).unwrap_or_else(|| "null".into())
        ));
        out.push_str(&format!(
            "\"seed\":{},",
            r.seed.map(|v| v.to_string()).unwrap_or_else(|| "null".into())
        ));
        out.push_str(&format!(
            "\"error\":{}",
            r.error.as_deref().map(json_str).unwrap_or_else(|| "null".into())
        ));
        out.push('}');
        if i + 1 < rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}
