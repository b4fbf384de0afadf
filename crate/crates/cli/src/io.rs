//! CSV input and output.
//!
//! Input: two columns `t,z`, an optional non-numeric header row, `#` comment
//! lines, strictly increasing `t`. Output: `t,value,d1,d2` with 17
//! significant digits so every value round-trips exactly.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use csv::{ReaderBuilder, StringRecord, Trim};
use lspline::SampleTable;

use crate::error::CliError;

pub const TABLE_HEADER: &str = "t,value,d1,d2";

#[derive(Debug, Clone, PartialEq)]
pub struct KnotData {
    pub t: Vec<f64>,
    pub z: Vec<f64>,
}

fn parse_err(path: &Path, line: u64, column: Option<usize>, message: impl Into<String>) -> CliError {
    CliError::Parse {
        path: path.to_path_buf(),
        line,
        column,
        message: message.into(),
    }
}

fn open_reader(path: &Path) -> Result<csv::Reader<File>, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    Ok(ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(Trim::All)
        .flexible(true)
        .from_reader(file))
}

/// Reads each record as a row of finite floats. The first record may be a
/// header: it is skipped when none of its fields parse as a number.
fn read_rows(path: &Path, width: usize) -> Result<Vec<(u64, Vec<f64>)>, CliError> {
    let mut rdr = open_reader(path)?;
    let mut rows = Vec::new();
    let mut record = StringRecord::new();
    let mut first = true;
    loop {
        let more = rdr.read_record(&mut record).map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            match e.into_kind() {
                csv::ErrorKind::Io(io) => CliError::io(path, io),
                other => parse_err(path, line, None, format!("{other:?}")),
            }
        })?;
        if !more {
            break;
        }
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if first {
            first = false;
            if record.iter().all(|f| f.parse::<f64>().is_err()) {
                continue;
            }
        }
        if record.len() != width {
            return Err(parse_err(
                path,
                line,
                None,
                format!("expected {width} fields, found {}", record.len()),
            ));
        }
        let mut row = Vec::with_capacity(width);
        for (col, field) in record.iter().enumerate() {
            let v: f64 = field
                .parse()
                .map_err(|_| parse_err(path, line, Some(col + 1), format!("not a number: {field:?}")))?;
            if !v.is_finite() {
                return Err(parse_err(path, line, Some(col + 1), format!("non-finite value {field:?}")));
            }
            row.push(v);
        }
        rows.push((line, row));
    }
    Ok(rows)
}

/// Reads knot/value pairs and checks that the knots strictly increase.
pub fn read_knots(path: &Path) -> Result<KnotData, CliError> {
    let rows = read_rows(path, 2)?;
    let mut data = KnotData { t: Vec::with_capacity(rows.len()), z: Vec::with_capacity(rows.len()) };
    for (line, row) in rows {
        if let Some(&prev) = data.t.last() {
            if !(row[0] > prev) {
                return Err(parse_err(
                    path,
                    line,
                    Some(1),
                    format!("knots must be strictly increasing: {} follows {}", row[0], prev),
                ));
            }
        }
        data.t.push(row[0]);
        data.z.push(row[1]);
    }
    if data.t.len() < 2 {
        return Err(parse_err(
            path,
            0,
            None,
            format!("at least 2 data rows are required, found {}", data.t.len()),
        ));
    }
    Ok(data)
}

#[inline]
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn format_table(table: &SampleTable) -> String {
    let mut out = String::with_capacity(72 * (table.len() + 1));
    out.push_str(TABLE_HEADER);
    out.push('\n');
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(|&v| fmt17(v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Two-column `t,value` table.
pub fn format_pairs(t: &[f64], value: &[f64]) -> String {
    let mut out = String::from("t,value\n");
    for (a, b) in t.iter().zip(value) {
        out.push_str(&fmt17(*a));
        out.push(',');
        out.push_str(&fmt17(*b));
        out.push('\n');
    }
    out
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    w.write_all(text.as_bytes()).and_then(|_| w.flush()).map_err(|e| CliError::io(path, e))
}

/// Parses a file written by [`format_table`].
pub fn read_table(path: &Path) -> Result<SampleTable, CliError> {
    let mut table = SampleTable::default();
    for (_, row) in read_rows(path, 4)? {
        table.t.push(row[0]);
        table.value.push(row[1]);
        table.deriv1.push(row[2]);
        table.deriv2.push(row[3]);
    }
    Ok(table)
}
