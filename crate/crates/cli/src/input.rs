// Copyright 2026 The latpick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Polygon file formats.
//!
//! `plain`: one vertex per line as two whitespace-separated integers; `#`
//! starts a comment; blank lines are skipped.
//!
//! `json`: an array of `[x, y]` integer pairs, e.g. `[[0,0],[1,0],[0,1]]`.

use std::path::{Path, PathBuf};

use latpick::{validate_polygon, LatticePoint, LatticePolygon, COORD_BOUND};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

impl Format {
    /// `.json` files are structured, everything else is plain.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Plain,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonDocument {
    pub vertices: Vec<LatticePoint>,
    pub source: PathBuf,
    pub format: Format,
}

impl PolygonDocument {
    pub fn into_polygon(self) -> Result<LatticePolygon, CliError> {
        Ok(validate_polygon(self.vertices)?)
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        location: format!("line {line}, column {column}"),
        message: message.into(),
    }
}

fn check_bound(v: i64) -> bool {
    v.checked_abs().is_some_and(|a| a <= COORD_BOUND)
}

fn parse_plain(text: &str) -> Result<Vec<LatticePoint>, CliError> {
    let mut vertices = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut fields = Vec::new();
        let mut rest = content;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let end = rest[start..]
                .find(char::is_whitespace)
                .map_or(rest.len(), |e| start + e);
            let column = content.len() - rest.len() + start + 1;
            fields.push((column, &rest[start..end]));
            rest = &rest[end..];
        }
        match fields.as_slice() {
            [] => continue,
            [(cx, x), (cy, y)] => {
                let parse = |column: usize, tok: &str| -> Result<i64, CliError> {
                    let v: i64 = tok.parse().map_err(|_| {
                        parse_error(line, column, format!("non-integer coordinate `{tok}`"))
                    })?;
                    if !check_bound(v) {
                        return Err(parse_error(
                            line,
                            column,
                            format!("coordinate {v} exceeds the bound 2^31"),
                        ));
                    }
                    Ok(v)
                };
                vertices.push(LatticePoint::new(parse(*cx, x)?, parse(*cy, y)?));
            }
            _ => {
                let column = fields.get(2).map_or(fields[0].0, |f| f.0);
                return Err(parse_error(
                    line,
                    column,
                    format!("expected two coordinates, found {}", fields.len()),
                ));
            }
        }
    }
    Ok(vertices)
}

fn parse_json(text: &str) -> Result<Vec<LatticePoint>, CliError> {
    let pairs: Vec<[i64; 2]> =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    pairs
        .iter()
        .enumerate()
        .map(|(i, &[x, y])| {
            if check_bound(x) && check_bound(y) {
                Ok(LatticePoint::new(x, y))
            } else {
                Err(CliError::Parse {
                    location: format!("vertex {i}"),
                    message: format!("coordinate ({x}, {y}) exceeds the bound 2^31"),
                })
            }
        })
        .collect()
}

pub fn parse_polygon(text: &str, format: Format) -> Result<Vec<LatticePoint>, CliError> {
    match format {
        Format::Plain => parse_plain(text),
        Format::Json => parse_json(text),
    }
}

pub fn read_document(path: &Path, format: Option<Format>) -> Result<PolygonDocument, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let text = String::from_utf8(bytes).map_err(|e| CliError::Parse {
        location: format!("byte {}", e.utf8_error().valid_up_to()),
        message: "input is not valid UTF-8".into(),
    })?;
    let format = format.unwrap_or_else(|| Format::from_path(path));
    Ok(PolygonDocument {
        vertices: parse_polygon(&text, format)?,
        source: path.to_path_buf(),
        format,
    })
}
