//! CSV and JSON matrix documents.
//!
//! CSV layout: the header row is an empty corner cell followed by the element
//! labels; every following row is a label followed by `n` decimal grades.
//!
//! ```text
//! ,a,b,c
//! a,1,0,0.4
//! b,0,1,0
//! c,0,0,1
//! ```
//!
//! JSON layout: `{"elements": ["a", ...], "matrix": [[1, 0, 0.4], ...]}`.
//!
//! Grades are emitted in the shortest decimal form that parses back to the
//! same `f64`, so parse → emit → parse is value-identical. Rows and columns in
//! error positions are 1-based.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::membership::Membership;
use crate::relation::FuzzyRelation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `.json` files are JSON, everything else is CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Format(format!("unknown format `{other}`"))),
        }
    }
}

fn parse_error(row: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        row,
        col,
        msg: msg.into(),
    }
}

fn parse_grade(text: &str, row: usize, col: usize) -> Result<Membership> {
    let text = text.trim();
    let value: f64 = text
        .parse()
        .map_err(|_| parse_error(row, col, format!("malformed number `{text}`")))?;
    if !value.is_finite() {
        return Err(parse_error(row, col, format!("malformed number `{text}`")));
    }
    Membership::new(value)
        .map_err(|_| parse_error(row, col, format!("value {text} is outside [0, 1]")))
}

fn build(labels: Vec<String>, grid: Vec<Membership>) -> Result<FuzzyRelation> {
    FuzzyRelation::from_grid(labels, grid).map_err(|err| match err {
        Error::EmptyLabel(i) => parse_error(1, i + 2, "empty element label"),
        Error::DuplicateLabel(l) => Error::Format(format!("duplicate element label `{l}`")),
        other => other,
    })
}

pub fn parse_csv(text: &str) -> Result<FuzzyRelation> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut records = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(i + 1, |p| p.line() as usize);
            parse_error(line, 1, e.to_string())
        })?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        let line = rec.position().map_or(i + 1, |p| p.line() as usize);
        records.push((line, rec));
    }

    let Some((_, header)) = records.first() else {
        return Err(Error::EmptyCarrier);
    };
    let labels: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    for (i, label) in labels.iter().enumerate() {
        if label.is_empty() {
            return Err(parse_error(1, i + 2, "empty element label"));
        }
    }
    let body = &records[1..];
    if body.len() != n {
        let row = body.get(n).map_or(records.last().unwrap().0 + 1, |r| r.0);
        return Err(parse_error(
            row,
            1,
            format!("matrix is not square: {n} labels but {} rows", body.len()),
        ));
    }

    let mut grid = Vec::with_capacity(n * n);
    for (i, (line, rec)) in body.iter().enumerate() {
        if rec.len() != n + 1 {
            return Err(parse_error(
                *line,
                rec.len().min(n + 1) + 1,
                format!("expected {} cells, found {}", n + 1, rec.len()),
            ));
        }
        if rec[0] != labels[i] {
            return Err(parse_error(
                *line,
                1,
                format!(
                    "row label `{}` does not match column label `{}`",
                    &rec[0], labels[i]
                ),
            ));
        }
        for (j, cell) in rec.iter().skip(1).enumerate() {
            grid.push(parse_grade(cell, *line, j + 2)?);
        }
    }
    build(labels, grid)
}

pub fn parse_json(text: &str) -> Result<FuzzyRelation> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| parse_error(e.line(), e.column(), format!("invalid JSON: {e}")))?;
    let elements = doc
        .get("elements")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("missing `elements` array".into()))?;
    let matrix = doc
        .get("matrix")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("missing `matrix` array".into()))?;

    let labels = elements
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::Format(format!("element {} is not a string", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if matrix.len() != n {
        return Err(parse_error(
            matrix.len().min(n) + 1,
            1,
            format!(
                "matrix is not square: {n} elements but {} rows",
                matrix.len()
            ),
        ));
    }

    let mut grid = Vec::with_capacity(n * n);
    for (i, row) in matrix.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| parse_error(i + 1, 1, "row is not an array"))?;
        if row.len() != n {
            return Err(parse_error(
                i + 1,
                row.len().min(n) + 1,
                format!("expected {n} values, found {}", row.len()),
            ));
        }
        for (j, cell) in row.iter().enumerate() {
            let value = cell
                .as_f64()
                .ok_or_else(|| parse_error(i + 1, j + 1, format!("malformed number `{cell}`")))?;
            let m = Membership::new(value).map_err(|_| {
                parse_error(i + 1, j + 1, format!("value {cell} is outside [0, 1]"))
            })?;
            grid.push(m);
        }
    }
    build(labels, grid)
}

pub fn parse_matrix(text: &str, format: Format) -> Result<FuzzyRelation> {
    match format {
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

pub fn emit_csv(r: &FuzzyRelation) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header = std::iter::once("").chain(r.labels().iter().map(String::as_str));
    writer.write_record(header).expect("write to Vec");
    for (label, row) in r.labels().iter().zip(r.rows()) {
        let cells = std::iter::once(label.clone()).chain(row.iter().map(|m| m.to_string()));
        writer.write_record(cells).expect("write to Vec");
    }
    String::from_utf8(writer.into_inner().expect("flush to Vec")).expect("utf-8 input")
}

pub fn emit_json(r: &FuzzyRelation) -> String {
    let elements = serde_json::to_string(r.labels()).expect("labels serialize");
    let rows: Vec<String> = r
        .rows()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|m| m.to_string()).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    format!(
        "{{\n  \"elements\": {elements},\n  \"matrix\": [\n{}\n  ]\n}}\n",
        rows.join(",\n")
    )
}

pub fn emit_matrix(r: &FuzzyRelation, format: Format) -> String {
    match format {
        Format::Csv => emit_csv(r),
        Format::Json => emit_json(r),
    }
}

pub fn read_relation(path: &Path) -> Result<(FuzzyRelation, Format)> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let format = Format::from_path(path);
    Ok((parse_matrix(&text, format)?, format))
}

pub fn write_relation(path: &Path, r: &FuzzyRelation, format: Format) -> Result<()> {
    fs::write(path, emit_matrix(r, format))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
