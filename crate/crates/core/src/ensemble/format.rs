//! Number formatting and CSV/JSON writers for the command-line tool.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use super::edges::EdgeRecord;
use super::record::ScatterRecord;
use super::scatter::ScatterStudy;

pub const JSON_DIGITS: usize = 12;
pub const CSV_DIGITS: usize = 9;

/// Rounds to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

/// Shortest decimal that carries at most `digits` significant digits;
/// magnitudes outside `[1e-4, 1e9)` use exponent notation.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    let r = round_sig(x, digits);
    if r == 0.0 {
        "0".into()
    } else if r.is_finite() && !(1e-4..1e9).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

fn round_value(v: &mut Value, digits: usize) {
    match v {
        Value::Number(n) => {
            if n.is_f64() {
                if let Some(x) = n.as_f64() {
                    if let Some(m) = serde_json::Number::from_f64(round_sig(x, digits)) {
                        *n = m;
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|x| round_value(x, digits)),
        Value::Object(map) => map.values_mut().for_each(|x| round_value(x, digits)),
        _ => {}
    }
}

/// Pretty JSON with floats rounded to [`JSON_DIGITS`] significant digits.
/// Non-finite floats become `null`.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut v = serde_json::to_value(value)?;
    round_value(&mut v, JSON_DIGITS);
    serde_json::to_string_pretty(&v)
}

fn record_fields(r: &ScatterRecord) -> String {
    let f = |x: f64| fmt_sig(x, CSV_DIGITS);
    let s = r.spectrum;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        f(r.point.c1),
        f(r.point.c2),
        f(r.point.c3),
        f(s[0]),
        f(s[1]),
        f(s[2]),
        f(s[3]),
        r.schmidt_number,
        f(r.k_sch),
        f(r.l),
        f(r.ep),
        r.is_pe
    )
}

const RECORD_HEADER: &str = "c1,c2,c3,s1,s2,s3,s4,schmidt_number,k_sch,l,ep,is_pe";

pub fn write_edge_csv<W: Write>(mut w: W, records: &[EdgeRecord]) -> io::Result<()> {
    writeln!(w, "t,{RECORD_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{}",
            fmt_sig(r.t, CSV_DIGITS),
            record_fields(&r.record)
        )?;
    }
    Ok(())
}

/// Records, then `covariance,<value>`, then the final `pearson,<value>` line.
pub fn write_scatter_csv<W: Write>(mut w: W, study: &ScatterStudy) -> io::Result<()> {
    writeln!(w, "index,{RECORD_HEADER}")?;
    for (i, r) in study.records.iter().enumerate() {
        writeln!(w, "{i},{}", record_fields(r))?;
    }
    writeln!(w, "covariance,{}", fmt_sig(study.covariance, CSV_DIGITS))?;
    writeln!(w, "pearson,{}", fmt_sig(study.pearson, CSV_DIGITS))?;
    Ok(())
}
