//! OEIS b-files: one `index value` pair per line, `#` comments and blank
//! lines allowed, indices strictly increasing.

use std::path::Path;

use thiserror::Error;
use torus_hilbert::Int;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected \"index value\", found {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {token:?} is not an integer")]
    NotInteger { line: usize, token: String },
    #[error("line {line}: index {index} does not follow index {previous}")]
    NotIncreasing {
        line: usize,
        index: i64,
        previous: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub sequence: String,
    pub entries: Vec<(i64, Int)>,
}

impl BFile {
    pub fn parse(sequence: &str, text: &str) -> Result<BFile, ParseError> {
        let mut entries: Vec<(i64, Int)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let [index, value] = tokens[..] else {
                return Err(ParseError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            };
            let not_integer = |token: &str| ParseError::NotInteger {
                line,
                token: token.to_string(),
            };
            let index: i64 = index.parse().map_err(|_| not_integer(index))?;
            let value: Int = value.parse().map_err(|_| not_integer(value))?;
            if let Some(&(previous, _)) = entries.last() {
                if index <= previous {
                    return Err(ParseError::NotIncreasing {
                        line,
                        index,
                        previous,
                    });
                }
            }
            entries.push((index, value));
        }
        Ok(BFile {
            sequence: sequence.to_string(),
            entries,
        })
    }

    pub fn read(sequence: &str, path: &Path) -> Result<BFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(BFile::parse(sequence, &text)?)
    }
}
