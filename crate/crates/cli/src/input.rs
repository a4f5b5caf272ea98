//! CSV datasets.
//!
//! Accepted layouts, comma-separated (or `;`/tab-separated when the first line
//! uses those):
//!
//! ```text
//! label,x1,x2        z1,-6,0        -6,0
//! z1,-6,0            z2,-4,2        -4,2
//! ```
//!
//! The first row is a header when any of its coordinate cells is not a number.
//! A leading label column is present when the header starts with `label`, or,
//! without a header, when the first cell of the first row is not a number.
//! Decimal commas (`-6,00`) are accepted in quoted cells or with a `;`/tab
//! delimiter.

use std::io::Read;

use possclust::{Dataset, Point};

use crate::error::{CliError, Result};

fn sniff_delimiter(text: &str) -> u8 {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.contains(';') {
        b';'
    } else if first.contains('\t') {
        b'\t'
    } else {
        b','
    }
}

/// Parses one numeric cell, accepting a decimal comma and a Unicode minus.
pub fn parse_number(cell: &str) -> Option<f64> {
    let mut s = cell.trim().replace('\u{2212}', "-");
    if !s.contains('.') && s.matches(',').count() == 1 {
        s = s.replace(',', ".");
    }
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

pub fn parse_csv_reader<R: Read>(mut reader: R) -> Result<Dataset> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| CliError::parse(0, format!("input is not UTF-8 text: {e}")))?;
    parse_csv(&text)
}

pub fn parse_csv(text: &str) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .delimiter(sniff_delimiter(text))
        .from_reader(text.as_bytes());

    let mut rows: Vec<(u64, Vec<String>)> = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            CliError::parse(line, e.to_string())
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let cells: Vec<String> = record.iter().map(|c| c.trim().to_string()).collect();
        if cells.iter().all(String::is_empty) {
            continue;
        }
        rows.push((line, cells));
    }
    let Some((_, first)) = rows.first() else {
        return Err(CliError::parse(1, "empty input"));
    };

    let header = if first.len() == 1 {
        parse_number(&first[0]).is_none()
    } else {
        first[1..].iter().any(|c| parse_number(c).is_none())
    };
    let labeled = if header {
        first[0].eq_ignore_ascii_case("label")
    } else {
        parse_number(&first[0]).is_none()
    };
    let width = first.len();
    let data = if header { &rows[1..] } else { &rows[..] };
    if data.is_empty() {
        return Err(CliError::parse(
            rows[0].0 + 1,
            "no data rows after the header",
        ));
    }
    if labeled && width < 2 {
        return Err(CliError::parse(
            rows[0].0,
            "a labeled row needs at least one coordinate",
        ));
    }

    let mut points = Vec::with_capacity(data.len());
    for (k, (line, cells)) in data.iter().enumerate() {
        if cells.len() != width {
            return Err(CliError::parse(
                *line,
                format!("expected {width} cells, found {}", cells.len()),
            ));
        }
        let (label, coord_cells) = if labeled {
            (cells[0].clone(), &cells[1..])
        } else {
            (format!("p{}", k + 1), &cells[..])
        };
        let coords = coord_cells
            .iter()
            .map(|c| {
                parse_number(c)
                    .ok_or_else(|| CliError::parse(*line, format!("not a finite number: {c:?}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        points.push(
            Point::labeled(label, coords).map_err(|e| CliError::parse(*line, e.to_string()))?,
        );
    }
    Dataset::new(points).map_err(|e| CliError::parse(data[0].0, e.to_string()))
}

/// Writes a dataset with a `label,x1,...,xd` header at full precision.
pub fn write_dataset_csv(ds: &Dataset) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["label".to_string()];
    header.extend((1..=ds.dim()).map(|j| format!("x{j}")));
    w.write_record(&header).expect("writing to memory");
    for (k, p) in ds.iter().enumerate() {
        let mut row = vec![ds.label_or_default(k)];
        row.extend(p.coords().iter().map(f64::to_string));
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is UTF-8")
}

/// Parses `x,y;x,y;...` into one coordinate row per centroid.
pub fn parse_centroid_list(spec: &str) -> std::result::Result<Vec<Vec<f64>>, String> {
    spec.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|c| {
            c.split(',')
                .map(|v| {
                    let v = v.trim().replace('\u{2212}', "-");
                    v.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| format!("bad centroid coordinate {v:?}"))
                })
                .collect()
        })
        .collect()
}
