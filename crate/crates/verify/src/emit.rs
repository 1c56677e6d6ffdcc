//! Byte-stable JSON and CSV output.
//!
//! Floats are always written in scientific notation with 17 significant
//! digits, which round-trips every `f64` exactly. Non-finite values become
//! `null` in JSON and `NaN`/`inf`/`-inf` in CSV.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use thiserror::Error;

use crate::report::VerificationReport;

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),
}

/// `{:.16e}`: one leading digit plus sixteen decimals.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// Pretty JSON with fixed-precision floats.
struct FixedFloats(PrettyFormatter<'static>);

macro_rules! forward {
    ($($name:ident$(($arg:ident: $ty:ty))?),* $(,)?) => {
        $(
            fn $name<W: ?Sized + Write>(&mut self, w: &mut W $(, $arg: $ty)?) -> io::Result<()> {
                self.0.$name(w $(, $arg)?)
            }
        )*
    };
}

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_float(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(value))
    }

    forward!(
        begin_array,
        end_array,
        begin_array_value(first: bool),
        end_array_value,
        begin_object,
        end_object,
        begin_object_key(first: bool),
        end_object_key,
        begin_object_value,
        end_object_value,
    );
}

pub fn to_json(report: &VerificationReport) -> Result<Vec<u8>, EmitError> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloats(PrettyFormatter::new()));
    report.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(out)
}

pub fn to_csv(report: &VerificationReport) -> Result<Vec<u8>, EmitError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "name",
        "suite",
        "samples_used",
        "samples_skipped",
        "max_abs_err",
        "tolerance",
        "pass",
    ])?;
    for c in &report.checks {
        w.write_record([
            c.name.clone(),
            c.suite.to_string(),
            c.samples_used.to_string(),
            c.samples_skipped.to_string(),
            format_float(c.max_abs_err),
            format_float(c.tolerance),
            c.pass.to_string(),
        ])?;
    }
    w.into_inner()
        .map_err(|e| EmitError::Io {
            path: "<csv buffer>".into(),
            source: e.into_error(),
        })
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), EmitError> {
    let io_err = |source| EmitError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut f = BufWriter::new(File::create(path).map_err(io_err)?);
    f.write_all(bytes).map_err(io_err)?;
    f.flush().map_err(io_err)
}

/// Writes whichever outputs are requested.
pub fn emit(
    report: &VerificationReport,
    json_path: Option<&Path>,
    csv_path: Option<&Path>,
) -> Result<(), EmitError> {
    if let Some(p) = json_path {
        write_file(p, &to_json(report)?)?;
    }
    if let Some(p) = csv_path {
        write_file(p, &to_csv(report)?)?;
    }
    Ok(())
}
