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

use thiserror::Error;

use crate::lattice::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in this crate.
///
/// Variants are grouped by cause: arithmetic/input bounds, polygon
/// validation, violated operation contracts, and oracle limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow (inputs outside the supported coordinate range)")]
    Overflow,
    #[error("coordinate ({x}, {y}) exceeds the supported bound of 2^31")]
    OutOfBounds { x: i64, y: i64 },
    #[error("degenerate segment: both endpoints are {0}")]
    DegenerateSegment(LatticePoint),
    #[error("degenerate triangle: vertices are collinear")]
    DegenerateTriangle,

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {index} repeats vertex {next}")]
    RepeatedVertex { index: usize, next: usize },
    #[error("polygon has zero area")]
    ZeroArea,
    #[error("polygon boundary self-intersects: edge {first} meets edge {second}")]
    SelfIntersecting { first: usize, second: usize },

    #[error("contract violated: {0}")]
    Contract(String),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("oracle bounding box holds {points} lattice points, limit is {limit}")]
    BoxTooLarge { points: u128, limit: u128 },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for the errors raised while validating a polygon's vertex ring.
    pub fn is_polygon_error(&self) -> bool {
        matches!(
            self,
            Error::TooFewVertices(_)
                | Error::RepeatedVertex { .. }
                | Error::ZeroArea
                | Error::SelfIntersecting { .. }
        )
    }
}
