//! Tabular output and parameter-range parsing.

use serde::Serialize;
use serde_json::Value;

use crate::failure::Failure;
use crate::report::Provenance;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Serialize)]
struct TableFile<'a> {
    provenance: &'a Provenance,
    kind: &'a str,
    #[serde(flatten)]
    table: &'a Table,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn to_csv(&self) -> Result<String, Failure> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Failure::input(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Failure::input(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn to_json(&self, kind: &str, provenance: &Provenance) -> String {
        let file = TableFile {
            provenance,
            kind,
            table: self,
        };
        serde_json::to_string_pretty(&file).expect("table serializes")
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// `+`, `-` or `0`.
pub fn sign(x: f64) -> &'static str {
    if x > 0.0 {
        "+"
    } else if x < 0.0 {
        "-"
    } else {
        "0"
    }
}

/// Parses `a..b` (inclusive), a single integer, or a comma list of either.
pub fn parse_usize_range(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || {
        Failure::input(format!(
            "invalid integer range '{text}' (expected a..b, a, or a,b,..)"
        ))
    };
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(Failure::input(format!("empty range '{part}': {lo} > {hi}")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses a comma-separated list of finite floats.
pub fn parse_f64_list(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Failure::input(format!("invalid number '{part}' in list '{text}'")))
        })
        .collect()
}
