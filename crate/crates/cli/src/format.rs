//! Text and JSON encodings of a partial square array.
//!
//! Text: a header line `n k`, then `n` lines of `n` whitespace-separated
//! tokens, each a signed nonzero integer or `.` for an empty cell.
//!
//! JSON: `{"n", "k", "cells": [{"row", "col", "value"}], "masks"?}` with
//! cells in row-major order.

use std::collections::BTreeMap;

use heffter::{CellSet, Position, SparseSquareArray};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Text { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Array(#[from] heffter::array::ArrayError),
}

fn text_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Text {
        line,
        message: message.into(),
    }
}

/// An array with its declared `k` and optional named cell masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub array: SparseSquareArray,
    pub k: usize,
    pub masks: BTreeMap<String, CellSet>,
}

impl Document {
    pub fn new(array: SparseSquareArray, k: usize) -> Self {
        Self {
            array,
            k,
            masks: BTreeMap::new(),
        }
    }
}

pub fn to_text(a: &SparseSquareArray, k: usize) -> String {
    format!("{} {}\n{}", a.order(), k, a.render())
}

pub fn parse_text(input: &str) -> Result<Document, FormatError> {
    let mut lines = input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| text_err(1, "empty input"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| text_err(hline + 1, format!("bad dimension {s:?}")));
    let (n, k) = match dims.as_slice() {
        [n, k] => (parse_dim(n)?, parse_dim(k)?),
        _ => return Err(text_err(hline + 1, "header must be \"n k\"")),
    };
    if n == 0 {
        return Err(text_err(hline + 1, "order must be positive"));
    }
    let mut array = SparseSquareArray::new(n);
    let mut row = 0;
    for (i, line) in lines {
        row += 1;
        if row > n {
            return Err(text_err(i + 1, format!("more than {n} rows")));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != n {
            return Err(text_err(i + 1, format!("expected {n} tokens, found {}", tokens.len())));
        }
        for (c, tok) in tokens.iter().enumerate() {
            if *tok == "." {
                continue;
            }
            let v: i64 = tok.parse().map_err(|_| text_err(i + 1, format!("bad token {tok:?}")))?;
            if v == 0 {
                return Err(text_err(i + 1, "0 is not allowed; use . for an empty cell"));
            }
            array.insert(Position::new(row, c + 1), v)?;
        }
    }
    if row != n {
        return Err(text_err(row + 2, format!("expected {n} rows, found {row}")));
    }
    Ok(Document::new(array, k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
struct JsonCell {
    row: usize,
    col: usize,
    value: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
struct JsonPos {
    row: usize,
    col: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct JsonArray {
    n: usize,
    k: usize,
    cells: Vec<JsonCell>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    masks: BTreeMap<String, Vec<JsonPos>>,
}

pub fn to_json(doc: &Document) -> String {
    let j = JsonArray {
        n: doc.array.order(),
        k: doc.k,
        cells: doc
            .array
            .iter()
            .map(|(p, value)| JsonCell {
                row: p.row,
                col: p.col,
                value,
            })
            .collect(),
        masks: doc
            .masks
            .iter()
            .map(|(name, s)| (name.clone(), s.iter().map(|p| JsonPos { row: p.row, col: p.col }).collect()))
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("plain data serializes")
}

pub fn parse_json(input: &str) -> Result<Document, FormatError> {
    let j: JsonArray = serde_json::from_str(input)?;
    let array = SparseSquareArray::from_cells(j.n, j.cells.iter().map(|c| (Position::new(c.row, c.col), c.value)))?;
    let mut masks = BTreeMap::new();
    for (name, cells) in j.masks {
        for c in &cells {
            if !(1..=j.n).contains(&c.row) || !(1..=j.n).contains(&c.col) {
                return Err(heffter::array::ArrayError::OutOfRange {
                    row: c.row,
                    col: c.col,
                    n: j.n,
                }
                .into());
            }
        }
        masks.insert(name, CellSet::from_positions(j.n, cells.iter().map(|c| Position::new(c.row, c.col))));
    }
    Ok(Document { array, k: j.k, masks })
}

/// JSON if the first non-blank character is `{`, text otherwise.
pub fn parse_any(input: &str) -> Result<Document, FormatError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let a = heffter::generate(7, 3).unwrap();
        let doc = parse_text(&to_text(&a, 3)).unwrap();
        assert_eq!(doc.array, a);
        assert_eq!(doc.k, 3);
    }

    #[test]
    fn rejects_zero_and_bad_shapes() {
        assert!(parse_text("2 1\n1 .\n. 0\n").is_err());
        assert!(parse_text("2 1\n1 .\n").is_err());
        assert!(parse_text("2 1\n1 . 3\n. 2\n").is_err());
        assert!(parse_text("2\n1 .\n. 2\n").is_err());
        assert!(parse_text("2 1\n1 x\n. 2\n").is_err());
        assert!(parse_text("2 1\n1 .\n. 2\n").is_ok());
    }

    #[test]
    fn json_round_trip_with_masks() {
        let f = heffter::get_fixture("H(30;3)", None).unwrap();
        let doc = Document {
            array: f.array,
            k: 3,
            masks: f.masks,
        };
        assert_eq!(parse_any(&to_json(&doc)).unwrap(), doc);
    }
}
