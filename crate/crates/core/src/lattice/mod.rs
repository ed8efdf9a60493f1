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

//! Exact integer points, predicates and polygon fundamentals.

mod gcd;
mod point;
mod polygon;
mod predicates;

pub use gcd::{extended_gcd, gcd, BezoutResult};
pub use point::{LatticePoint, LatticeVector, COORD_BOUND};
pub(crate) use polygon::bounding_box;
pub use polygon::{point_in_polygon, twice_polygon_area, validate_polygon, LatticePolygon};
pub use predicates::{
    edge_gcd, locate_in_ring, point_on_segment, segment_lattice_points, segments_intersect,
    twice_signed_area, Location,
};
