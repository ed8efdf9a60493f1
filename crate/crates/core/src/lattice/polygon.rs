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

use super::point::LatticePoint;
use super::predicates::{locate_in_ring, segments_intersect, twice_signed_area, Location};
use crate::error::{Error, Result};

/// A simple lattice polygon with its vertices stored counterclockwise.
///
/// Only [`validate_polygon`] constructs one, so every value upholds:
/// at least three vertices, no repeated consecutive vertices, nonzero area,
/// a simple boundary, coordinates within [`COORD_BOUND`](super::COORD_BOUND).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(start, end)` pairs in ring order.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Inclusive bounding box as `(min, max)` corners.
    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        bounding_box(&self.vertices)
    }

    pub fn twice_area(&self) -> i128 {
        // Validated vertices are bounded, so the shoelace sum cannot overflow.
        shoelace(&self.vertices).expect("validated polygon area fits in i128")
    }

    pub fn locate(&self, p: LatticePoint) -> Result<Location> {
        locate_in_ring(p, &self.vertices)
    }
}

pub(crate) fn bounding_box(points: &[LatticePoint]) -> (LatticePoint, LatticePoint) {
    let mut lo = points[0];
    let mut hi = points[0];
    for p in &points[1..] {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (lo, hi)
}

/// Twice the signed shoelace area of a vertex ring.
pub(crate) fn shoelace(ring: &[LatticePoint]) -> Result<i128> {
    let origin = ring[0];
    let mut sum = 0i128;
    for w in ring[1..].windows(2) {
        sum = sum
            .checked_add(twice_signed_area(origin, w[0], w[1])?)
            .ok_or(Error::Overflow)?;
    }
    Ok(sum)
}

/// Exact twice-area of a polygon, always positive.
pub fn twice_polygon_area(p: &LatticePolygon) -> i128 {
    p.twice_area()
}

pub fn point_in_polygon(p: LatticePoint, poly: &LatticePolygon) -> Result<Location> {
    poly.locate(p)
}

/// Checks a vertex ring and returns it as a counterclockwise polygon.
///
/// Checks run in this order: vertex count, coordinate bounds, repeated
/// consecutive vertices, all vertices collinear (zero area), then pairwise
/// edge intersection (`O(n^2)`). Clockwise input is reversed in place, keeping vertex 0 first.
pub fn validate_polygon(vertices: Vec<LatticePoint>) -> Result<LatticePolygon> {
    let n = vertices.len();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    for v in &vertices {
        v.check_bounds()?;
    }
    for i in 0..n {
        if vertices[i] == vertices[(i + 1) % n] {
            return Err(Error::RepeatedVertex {
                index: i,
                next: (i + 1) % n,
            });
        }
    }
    let (v0, v1) = (vertices[0], vertices[1]);
    let mut collinear = true;
    for &v in &vertices[2..] {
        if twice_signed_area(v0, v1, v)? != 0 {
            collinear = false;
            break;
        }
    }
    if collinear {
        return Err(Error::ZeroArea);
    }
    check_simple(&vertices)?;
    let area = shoelace(&vertices)?;
    if area == 0 {
        return Err(Error::InvariantViolation(
            "simple polygon with zero area".into(),
        ));
    }

    let mut vertices = vertices;
    if area < 0 {
        vertices[1..].reverse();
    }
    Ok(LatticePolygon { vertices })
}

fn check_simple(v: &[LatticePoint]) -> Result<()> {
    let n = v.len();
    let edge = |i: usize| (v[i], v[(i + 1) % n]);
    for i in 0..n {
        // Adjacent edges share v[i+1]; they may not fold back over each other.
        let (a, b) = edge(i);
        let c = v[(i + 2) % n];
        if twice_signed_area(a, b, c)? == 0 && a.to(b)?.dot(b.to(c)?)? < 0 {
            return Err(Error::SelfIntersecting {
                first: i,
                second: (i + 1) % n,
            });
        }
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = edge(j);
            if segments_intersect(a, b, c, d)? {
                return Err(Error::SelfIntersecting {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}
