//! Reading context matrices: `F<k>` and `1` shortcuts, JSON files
//! `{"n": .., "rows": [[..], ..]}` and plain grids of 0/1 separated by
//! whitespace.

use std::path::Path;

use ckstar::ZeroOneMatrix;
use thiserror::Error;

use crate::schema::MatrixJson;

#[derive(Debug, Error)]
pub enum MatrixInputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: invalid JSON matrix: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: line {line}: expected 0 or 1, found '{token}'")]
    Token {
        path: String,
        line: usize,
        token: String,
    },
    #[error("{path}: {source}")]
    Matrix { path: String, source: ckstar::Error },
}

/// `F<k>` for `k >= 1`, or `1`.
pub fn shortcut(name: &str) -> Option<ZeroOneMatrix> {
    if name == "1" {
        return Some(ZeroOneMatrix::unit());
    }
    let k: usize = name.strip_prefix('F')?.parse().ok()?;
    (k >= 1).then(|| ZeroOneMatrix::full(k))
}

pub fn parse_matrix_text(text: &str, origin: &str) -> Result<ZeroOneMatrix, MatrixInputError> {
    let matrix_err = |source| MatrixInputError::Matrix {
        path: origin.to_string(),
        source,
    };
    if text.trim_start().starts_with('{') {
        let m: MatrixJson =
            serde_json::from_str(text).map_err(|source| MatrixInputError::Json {
                path: origin.to_string(),
                source,
            })?;
        return ZeroOneMatrix::try_from(&m).map_err(matrix_err);
    }
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                _ => Err(MatrixInputError::Token {
                    path: origin.to_string(),
                    line: k + 1,
                    token: t.to_string(),
                }),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        rows.push(row);
    }
    ZeroOneMatrix::from_rows(&rows).map_err(matrix_err)
}

/// A shortcut name or a path to a matrix file.
pub fn load_matrix(arg: &str) -> Result<ZeroOneMatrix, MatrixInputError> {
    if let Some(m) = shortcut(arg) {
        return Ok(m);
    }
    let text = std::fs::read_to_string(Path::new(arg)).map_err(|source| MatrixInputError::Io {
        path: arg.to_string(),
        source,
    })?;
    parse_matrix_text(&text, arg)
}
