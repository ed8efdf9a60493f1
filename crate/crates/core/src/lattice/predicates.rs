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

use std::cmp::Ordering;

use super::gcd::gcd;
use super::point::LatticePoint;
use crate::error::{Error, Result};

/// Where a point sits relative to a closed region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// Twice the signed area of the triangle `abc`, i.e. `(b - a) x (c - a)`.
///
/// Positive for counterclockwise, negative for clockwise, zero for
/// collinear input. Fails only when a coordinate difference overflows `i64`.
pub fn twice_signed_area(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<i128> {
    Ok(a.to(b)?.cross(a.to(c)?))
}

/// Number of primitive sub-segments of the segment `ab`.
///
/// The open segment contains exactly `edge_gcd(a, b) - 1` lattice points.
pub fn edge_gcd(a: LatticePoint, b: LatticePoint) -> Result<u64> {
    if a == b {
        return Err(Error::DegenerateSegment(a));
    }
    let v = a.to(b)?;
    Ok(gcd(v.dx, v.dy))
}

/// All lattice points of the closed segment `ab`, ordered from `a` to `b`.
pub fn segment_lattice_points(a: LatticePoint, b: LatticePoint) -> Result<Vec<LatticePoint>> {
    let k = edge_gcd(a, b)?;
    let v = a.to(b)?;
    let k = k as i64;
    let step = (v.dx / k, v.dy / k);
    Ok((0..=k)
        .map(|j| LatticePoint::new(a.x + j * step.0, a.y + j * step.1))
        .collect())
}

/// True if `p` lies on the closed segment `ab`.
///
/// A degenerate segment (`a == b`) contains only `a`.
pub fn point_on_segment(p: LatticePoint, a: LatticePoint, b: LatticePoint) -> Result<bool> {
    if twice_signed_area(a, b, p)? != 0 {
        return Ok(false);
    }
    Ok(within_box(p, a, b))
}

fn within_box(p: LatticePoint, a: LatticePoint, b: LatticePoint) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

fn orientation(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<Ordering> {
    Ok(twice_signed_area(a, b, c)?.cmp(&0))
}

/// True if the closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(
    a: LatticePoint,
    b: LatticePoint,
    c: LatticePoint,
    d: LatticePoint,
) -> Result<bool> {
    let o1 = orientation(a, b, c)?;
    let o2 = orientation(a, b, d)?;
    let o3 = orientation(c, d, a)?;
    let o4 = orientation(c, d, b)?;
    use Ordering::Equal;
    if o1 != o2 && o3 != o4 && o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal {
        return Ok(true);
    }
    Ok((o1 == Equal && within_box(c, a, b))
        || (o2 == Equal && within_box(d, a, b))
        || (o3 == Equal && within_box(a, c, d))
        || (o4 == Equal && within_box(b, c, d)))
}

/// Classifies `p` against the closed region bounded by the vertex ring.
///
/// Boundary is tested first, edge by edge. Otherwise a horizontal ray is
/// cast to the right and crossings are counted with the half-open rule
/// (an edge counts when exactly one endpoint lies strictly above `p`), so
/// vertices on the ray are counted once. Works for either orientation.
pub fn locate_in_ring(p: LatticePoint, ring: &[LatticePoint]) -> Result<Location> {
    let n = ring.len();
    for i in 0..n {
        if point_on_segment(p, ring[i], ring[(i + 1) % n])? {
            return Ok(Location::Boundary);
        }
    }
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (ring[i], ring[(i + 1) % n]);
        let a_above = a.y > p.y;
        let b_above = b.y > p.y;
        if a_above == b_above {
            continue;
        }
        // Crossing lies right of p iff p is left of the upward-directed edge.
        let side = twice_signed_area(a, b, p)?;
        if (b_above && side > 0) || (a_above && side < 0) {
            inside = !inside;
        }
    }
    Ok(if inside {
        Location::Interior
    } else {
        Location::Exterior
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn signed_area_examples() {
        assert_eq!(twice_signed_area(pt(0, 0), pt(1, 0), pt(0, 1)), Ok(1));
        assert_eq!(twice_signed_area(pt(0, 0), pt(0, 1), pt(1, 0)), Ok(-1));
        assert_eq!(twice_signed_area(pt(0, 0), pt(2, 0), pt(1, 1)), Ok(2));
        assert_eq!(twice_signed_area(pt(0, 0), pt(1, 1), pt(3, 3)), Ok(0));
    }

    #[test]
    fn signed_area_overflow() {
        let r = twice_signed_area(pt(i64::MIN, 0), pt(i64::MAX, 0), pt(0, 1));
        assert_eq!(r, Err(Error::Overflow));
    }

    #[test]
    fn edge_gcd_examples() {
        assert_eq!(edge_gcd(pt(0, 0), pt(4, 6)), Ok(2));
        assert_eq!(edge_gcd(pt(0, 0), pt(3, 5)), Ok(1));
        assert_eq!(edge_gcd(pt(1, 1), pt(1, 7)), Ok(6));
        assert_eq!(
            edge_gcd(pt(2, 2), pt(2, 2)),
            Err(Error::DegenerateSegment(pt(2, 2)))
        );
    }

    #[test]
    fn segment_points_examples() {
        assert_eq!(
            segment_lattice_points(pt(0, 0), pt(4, 6)).unwrap(),
            vec![pt(0, 0), pt(2, 3), pt(4, 6)]
        );
        assert_eq!(
            segment_lattice_points(pt(0, 0), pt(1, 1)).unwrap(),
            vec![pt(0, 0), pt(1, 1)]
        );
        assert_eq!(
            segment_lattice_points(pt(0, 0), pt(0, 3)).unwrap(),
            vec![pt(0, 0), pt(0, 1), pt(0, 2), pt(0, 3)]
        );
        assert_eq!(
            segment_lattice_points(pt(4, -6), pt(0, 0)).unwrap(),
            vec![pt(4, -6), pt(2, -3), pt(0, 0)]
        );
        assert!(segment_lattice_points(pt(1, 1), pt(1, 1)).is_err());
    }

    #[test]
    fn on_segment() {
        assert_eq!(point_on_segment(pt(2, 3), pt(0, 0), pt(4, 6)), Ok(true));
        assert_eq!(point_on_segment(pt(0, 0), pt(0, 0), pt(4, 6)), Ok(true));
        assert_eq!(point_on_segment(pt(6, 9), pt(0, 0), pt(4, 6)), Ok(false));
        assert_eq!(point_on_segment(pt(1, 1), pt(0, 0), pt(4, 6)), Ok(false));
        assert_eq!(point_on_segment(pt(1, 1), pt(1, 1), pt(1, 1)), Ok(true));
    }

    #[test]
    fn intersections() {
        let yes = |a, b, c, d| assert_eq!(segments_intersect(a, b, c, d), Ok(true));
        let no = |a, b, c, d| assert_eq!(segments_intersect(a, b, c, d), Ok(false));
        yes(pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2));
        yes(pt(0, 0), pt(2, 0), pt(2, 0), pt(3, 5));
        yes(pt(0, 0), pt(4, 0), pt(2, 0), pt(6, 0));
        yes(pt(0, 0), pt(4, 0), pt(2, 0), pt(2, 3));
        no(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0));
        no(pt(0, 0), pt(2, 2), pt(1, 0), pt(3, 2));
        no(pt(0, 0), pt(1, 1), pt(3, 0), pt(2, 1));
    }

    #[test]
    fn ring_location() {
        let square = [pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)];
        assert_eq!(locate_in_ring(pt(1, 1), &square), Ok(Location::Interior));
        assert_eq!(locate_in_ring(pt(1, 0), &square), Ok(Location::Boundary));
        assert_eq!(locate_in_ring(pt(3, 0), &square), Ok(Location::Exterior));
        assert_eq!(locate_in_ring(pt(-1, 1), &square), Ok(Location::Exterior));
        assert_eq!(locate_in_ring(pt(-1, 2), &square), Ok(Location::Exterior));

        // Ray through a reflex vertex of a notched polygon.
        let notch = [pt(0, 0), pt(4, 0), pt(4, 4), pt(2, 2), pt(0, 4)];
        assert_eq!(locate_in_ring(pt(1, 2), &notch), Ok(Location::Interior));
        assert_eq!(locate_in_ring(pt(2, 3), &notch), Ok(Location::Exterior));
        assert_eq!(locate_in_ring(pt(3, 3), &notch), Ok(Location::Boundary));
        let reversed: Vec<_> = notch.iter().rev().copied().collect();
        assert_eq!(locate_in_ring(pt(1, 2), &reversed), Ok(Location::Interior));
    }
}
