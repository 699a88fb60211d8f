//! Distance-matrix file formats.
//!
//! Two formats are supported and detected by content:
//!
//! - CSV: first row is the labels, followed by the square matrix;
//! - JSON: `{"labels": [...], "dist": [[...], ...]}`.
//!
//! Floats are written in shortest round-trip form, so a space written out
//! and read back is bit-identical. Readers validate the metric axioms and
//! refuse invalid matrices.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::correspondence::Correspondence;
use crate::error::{GhError, Result};
use crate::space::FiniteMetricSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceFormat {
    Csv,
    Json,
}

#[derive(Serialize, Deserialize)]
struct SpaceFile {
    labels: Vec<String>,
    dist: Vec<Vec<f64>>,
}

/// Read a space from `path`, detecting the format, and validate it as a
/// strict metric.
pub fn read_space(path: &Path) -> Result<FiniteMetricSpace> {
    read_space_with(path, false)
}

/// Like [`read_space`], optionally allowing zero distances between distinct
/// points (pseudo-metrics).
pub fn read_space_with(path: &Path, allow_pseudo: bool) -> Result<FiniteMetricSpace> {
    let text = fs::read_to_string(path)?;
    parse_space(&text, allow_pseudo)
}

/// Parse a space from text in either format; JSON is assumed when the first
/// non-whitespace byte is `{`.
pub fn parse_space(text: &str, allow_pseudo: bool) -> Result<FiniteMetricSpace> {
    let space = parse_space_lenient(text)?;
    let violations = space.validate(allow_pseudo);
    if violations.is_empty() {
        Ok(space)
    } else {
        Err(GhError::InvalidMetric(violations))
    }
}

/// Parse without checking the metric axioms (shape checks only), so callers
/// like `validate` can report the violations themselves.
pub fn parse_space_lenient(text: &str) -> Result<FiniteMetricSpace> {
    if text.trim_start().starts_with('{') {
        parse_space_json(text)
    } else {
        parse_space_csv(text)
    }
}

fn parse_space_json(text: &str) -> Result<FiniteMetricSpace> {
    let file: SpaceFile = serde_json::from_str(text)?;
    FiniteMetricSpace::new(file.labels, file.dist)
}

fn parse_space_csv(text: &str) -> Result<FiniteMetricSpace> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let labels: Vec<String> = match records.next() {
        Some(first) => first?.iter().map(|s| s.to_string()).collect(),
        None => return Err(GhError::Parse("empty CSV input".into())),
    };
    let mut rows = Vec::with_capacity(labels.len());
    for record in records {
        let record = record?;
        let row: Vec<f64> = record
            .iter()
            .map(|field| {
                field.parse::<f64>().map_err(|e| {
                    GhError::Parse(format!("bad matrix entry {field:?}: {e}"))
                })
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    FiniteMetricSpace::new(labels, rows)
}

/// Serialize a space in the given format.
pub fn space_to_string(space: &FiniteMetricSpace, format: SpaceFormat) -> Result<String> {
    match format {
        SpaceFormat::Json => {
            let file = SpaceFile {
                labels: space.labels().to_vec(),
                dist: space.matrix_rows(),
            };
            Ok(serde_json::to_string_pretty(&file)? + "\n")
        }
        SpaceFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(space.labels())?;
            for row in space.matrix_rows() {
                writer.write_record(row.iter().map(|v| v.to_string()))?;
            }
            let bytes = writer.into_inner().map_err(|e| GhError::Parse(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

/// Write a space to a file (or to the given writer via `space_to_string`).
pub fn write_space(space: &FiniteMetricSpace, path: &Path, format: SpaceFormat) -> Result<()> {
    let mut file = fs::File::create(path)?;
    file.write_all(space_to_string(space, format)?.as_bytes())?;
    Ok(())
}

/// Read a correspondence given as a JSON list of `[x_label, y_label]` pairs,
/// resolving labels against the two spaces.
pub fn read_correspondence(
    path: &Path,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> Result<Correspondence> {
    let text = fs::read_to_string(path)?;
    parse_correspondence(&text, x, y)
}

pub fn parse_correspondence(
    text: &str,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> Result<Correspondence> {
    let raw: Vec<(String, String)> = serde_json::from_str(text)?;
    let x_index = label_index(x)?;
    let y_index = label_index(y)?;
    let mut pairs = Vec::with_capacity(raw.len());
    for (a, b) in raw {
        let i = *x_index.get(a.as_str()).ok_or_else(|| GhError::UnknownLabel(a.clone()))?;
        let j = *y_index.get(b.as_str()).ok_or_else(|| GhError::UnknownLabel(b.clone()))?;
        pairs.push((i, j));
    }
    Correspondence::new(pairs)
}

fn label_index(space: &FiniteMetricSpace) -> Result<std::collections::HashMap<&str, usize>> {
    let mut map = std::collections::HashMap::with_capacity(space.points());
    for (i, label) in space.labels().iter().enumerate() {
        if map.insert(label.as_str(), i).is_some() {
            return Err(GhError::DuplicateLabel(label.clone()));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::regular_polygon;

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = regular_polygon(7).unwrap();
        let text = space_to_string(&p, SpaceFormat::Json).unwrap();
        let back = parse_space(&text, false).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.as_polygon(), Some(7));
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let p = regular_polygon(9).unwrap();
        let text = space_to_string(&p, SpaceFormat::Csv).unwrap();
        let back = parse_space(&text, false).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.as_polygon(), Some(9));
    }

    #[test]
    fn reader_rejects_invalid_metrics() {
        let text = "a,b,c\n0,1,3\n1,0,1\n3,1,0\n";
        match parse_space(text, false) {
            Err(GhError::InvalidMetric(violations)) => assert!(!violations.is_empty()),
            other => panic!("expected InvalidMetric, got {other:?}"),
        }
    }

    #[test]
    fn reader_rejects_shape_errors() {
        assert!(matches!(parse_space("a,b\n0,1\n", false), Err(GhError::NonSquare { .. })));
        assert!(matches!(
            parse_space("a,b\n0,x\n1,0\n", false),
            Err(GhError::Parse(_))
        ));
    }

    #[test]
    fn correspondence_labels_resolve() {
        let x = regular_polygon(2).unwrap();
        let y = regular_polygon(3).unwrap();
        let text = r#"[["v1","v1"],["v1","v2"],["v2","v3"]]"#;
        let r = parse_correspondence(text, &x, &y).unwrap();
        assert_eq!(r.pairs(), &[(0, 0), (0, 1), (1, 2)]);
        assert!(matches!(
            parse_correspondence(r#"[["v9","v1"]]"#, &x, &y),
            Err(GhError::UnknownLabel(_))
        ));
    }
}
