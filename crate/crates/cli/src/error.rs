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

use std::path::PathBuf;

use thiserror::Error;

/// Exit status for each error class.
pub mod exit {
    pub const OK: i32 = 0;
    /// Output file could not be written.
    pub const WRITE: i32 = 1;
    /// Input missing, unreadable, or not parseable.
    pub const PARSE: i32 = 2;
    /// Parsed, but not a valid simple lattice polygon.
    pub const INVALID_POLYGON: i32 = 3;
    /// The enumeration oracle's bounding-box limit was exceeded.
    pub const GUARD: i32 = 4;
    /// An internal invariant failed; indicates a bug.
    pub const INTERNAL: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Geometry(#[from] latpick::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use latpick::Error as G;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => exit::PARSE,
            CliError::Write { .. } => exit::WRITE,
            CliError::Geometry(e) => match e {
                G::BoxTooLarge { .. } => exit::GUARD,
                G::Contract(_) | G::InvariantViolation(_) | G::InvalidCut(_) => exit::INTERNAL,
                G::Overflow
                | G::OutOfBounds { .. }
                | G::DegenerateSegment(_)
                | G::DegenerateTriangle => exit::INVALID_POLYGON,
                e if e.is_polygon_error() => exit::INVALID_POLYGON,
                _ => exit::INTERNAL,
            },
        }
    }
}
