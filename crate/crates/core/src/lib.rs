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

//! Exact lattice-polygon geometry.
//!
//! Computes areas of simple lattice polygons from their lattice-point
//! counts (Pick's formula), refines any simple lattice polygon into
//! primitive triangles of twice-area 1 using an extended-Euclid split-point
//! construction, and checks every result against brute-force enumeration.
//!
//! All arithmetic is exact: coordinates are bounded by [`COORD_BOUND`] and
//! determinants are evaluated in `i128`.

pub mod bezout;
pub mod error;
pub mod lattice;
pub mod pick;
pub mod sample;
pub mod triangulation;

pub use error::{Error, Result};
pub use lattice::{
    edge_gcd, extended_gcd, point_in_polygon, point_on_segment, segment_lattice_points,
    twice_polygon_area, twice_signed_area, validate_polygon, BezoutResult, LatticePoint,
    LatticePolygon, LatticeVector, Location, COORD_BOUND,
};
