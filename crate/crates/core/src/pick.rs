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

//! Lattice-point counts and Pick's formula.
//!
//! Everything is kept in doubled form, `2A = 2i + u - 2`, so no halves
//! appear. Interior counts come from brute-force enumeration of the
//! bounding box; boundary counts from edge gcds.

use crate::error::{Error, Result};
use crate::lattice::{
    edge_gcd, locate_in_ring, point_in_polygon, twice_signed_area, validate_polygon, LatticePoint,
    LatticePolygon, Location,
};
use crate::triangulation::SplitEvent;

/// Default cap on the number of bounding-box points the oracle visits.
pub const DEFAULT_ORACLE_LIMIT: u128 = 100_000_000;

/// Interior count `i`, boundary count `u` and twice-area of a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PickCount {
    pub interior: u64,
    pub boundary: u64,
    pub twice_area: i128,
}

impl PickCount {
    /// `twice_area == 2 * interior + boundary - 2`
    pub fn identity_holds(&self) -> bool {
        pick_twice_area(self.interior, self.boundary) == self.twice_area
    }
}

/// Lattice points of a closed region split by location.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Census {
    pub interior: u64,
    pub boundary: u64,
}

/// Pick's formula doubled: `2i + u - 2`. Meaningful for `u >= 3`.
pub fn pick_twice_area(interior: u64, boundary: u64) -> i128 {
    2 * interior as i128 + boundary as i128 - 2
}

/// Number of boundary lattice points: the sum of edge gcds, which counts
/// each vertex once.
pub fn boundary_count(p: &LatticePolygon) -> u64 {
    p.edges()
        .map(|(a, b)| edge_gcd(a, b).expect("polygon edges are non-degenerate"))
        .sum()
}

fn box_size(lo: LatticePoint, hi: LatticePoint) -> u128 {
    (hi.x - lo.x + 1) as u128 * (hi.y - lo.y + 1) as u128
}

/// Classifies every lattice point of the ring's bounding box.
///
/// Fails with [`Error::BoxTooLarge`] before doing any work if the box holds
/// more than `limit` points.
pub fn census_oracle(ring: &[LatticePoint], limit: u128) -> Result<Census> {
    let (lo, hi) = crate::lattice::bounding_box(ring);
    let points = box_size(lo, hi);
    if points > limit {
        return Err(Error::BoxTooLarge { points, limit });
    }
    let mut census = Census::default();
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            match locate_in_ring(LatticePoint::new(x, y), ring)? {
                Location::Interior => census.interior += 1,
                Location::Boundary => census.boundary += 1,
                Location::Exterior => {}
            }
        }
    }
    Ok(census)
}

/// Every lattice point of the closed polygon, boundary points first, each
/// group in column-major order. Same guard as [`census_oracle`].
pub fn lattice_points_oracle(
    p: &LatticePolygon,
    limit: u128,
) -> Result<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let (lo, hi) = p.bounding_box();
    let points = box_size(lo, hi);
    if points > limit {
        return Err(Error::BoxTooLarge { points, limit });
    }
    let (mut boundary, mut interior) = (Vec::new(), Vec::new());
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            let q = LatticePoint::new(x, y);
            match point_in_polygon(q, p)? {
                Location::Interior => interior.push(q),
                Location::Boundary => boundary.push(q),
                Location::Exterior => {}
            }
        }
    }
    Ok((boundary, interior))
}

pub fn interior_count_oracle(p: &LatticePolygon) -> Result<u64> {
    interior_count_oracle_with_limit(p, DEFAULT_ORACLE_LIMIT)
}

pub fn interior_count_oracle_with_limit(p: &LatticePolygon, limit: u128) -> Result<u64> {
    Ok(census_oracle(p.vertices(), limit)?.interior)
}

/// Lattice points of a closed convex region, counted column by column.
///
/// For each integer `x` in range the region meets the vertical line in one
/// segment; its integer points are `floor(y_max) - ceil(y_min) + 1`, with
/// the edge crossings evaluated as exact rationals. `O(width * n)`, so it
/// handles triangles far too large for box enumeration. The ring must be
/// convex (any orientation).
pub fn convex_closed_count(ring: &[LatticePoint]) -> Result<u128> {
    let (lo, hi) = crate::lattice::bounding_box(ring);
    let n = ring.len();
    let mut total = 0u128;
    for x in lo.x..=hi.x {
        let mut y_min: Option<i128> = None;
        let mut y_max: Option<i128> = None;
        for i in 0..n {
            let (a, b) = (ring[i], ring[(i + 1) % n]);
            if x < a.x.min(b.x) || x > a.x.max(b.x) {
                continue;
            }
            let (lo_y, hi_y) = if a.x == b.x {
                (a.y.min(b.y) as i128, a.y.max(b.y) as i128)
            } else {
                // y = a.y + (b.y - a.y)(x - a.x) / (b.x - a.x)
                let mut num = (b.y - a.y) as i128 * (x - a.x) as i128;
                let mut den = (b.x - a.x) as i128;
                if den < 0 {
                    num = -num;
                    den = -den;
                }
                let floor = num.div_euclid(den);
                let ceil = -((-num).div_euclid(den));
                (a.y as i128 + ceil, a.y as i128 + floor)
            };
            y_min = Some(y_min.map_or(lo_y, |m| m.min(lo_y)));
            y_max = Some(y_max.map_or(hi_y, |m| m.max(hi_y)));
        }
        if let (Some(l), Some(h)) = (y_min, y_max) {
            if h >= l {
                total += (h - l + 1) as u128;
            }
        }
    }
    Ok(total)
}

/// Counts `i` and `u` for a polygon and checks Pick's identity against the
/// shoelace twice-area.
pub fn verify_pick(p: &LatticePolygon) -> Result<PickCount> {
    verify_pick_with_limit(p, DEFAULT_ORACLE_LIMIT)
}

pub fn verify_pick_with_limit(p: &LatticePolygon, limit: u128) -> Result<PickCount> {
    let count = PickCount {
        interior: interior_count_oracle_with_limit(p, limit)?,
        boundary: boundary_count(p),
        twice_area: p.twice_area(),
    };
    if !count.identity_holds() {
        return Err(Error::InvariantViolation(format!(
            "Pick identity fails: 2*{} + {} - 2 != {}",
            count.interior, count.boundary, count.twice_area
        )));
    }
    Ok(count)
}

/// Counts for a polygon cut into two parts along `A-D-B`.
///
/// `cut_points` is the number of lattice points on the segments `AD` and
/// `DB`, each of `A`, `B`, `D` counted once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdditivityWitness {
    pub i: u64,
    pub u: u64,
    pub i1: u64,
    pub u1: u64,
    pub i2: u64,
    pub u2: u64,
    pub cut_points: u64,
}

impl AdditivityWitness {
    pub fn interior_identity(&self) -> bool {
        self.i as i128 == self.i1 as i128 + self.i2 as i128 + self.cut_points as i128 - 2
    }

    pub fn boundary_identity(&self) -> bool {
        self.u as i128 == self.u1 as i128 + self.u2 as i128 - 2 * self.cut_points as i128 + 2
    }

    /// Pick's doubled formula is additive over the two parts.
    pub fn pick_identity(&self) -> bool {
        pick_twice_area(self.i, self.u)
            == pick_twice_area(self.i1, self.u1) + pick_twice_area(self.i2, self.u2)
    }
}

/// Splices `extra` into the ring after the start of the edge it lies on,
/// unless it is already a vertex. Returns its index.
fn splice_boundary_point(ring: &mut Vec<LatticePoint>, extra: LatticePoint) -> Result<usize> {
    if let Some(i) = ring.iter().position(|&v| v == extra) {
        return Ok(i);
    }
    let n = ring.len();
    for i in 0..n {
        if crate::lattice::point_on_segment(extra, ring[i], ring[(i + 1) % n])? {
            ring.insert(i + 1, extra);
            return Ok(i + 1);
        }
    }
    Err(Error::InvalidCut(format!("{extra} is not on the boundary")))
}

fn chain(ring: &[LatticePoint], from: usize, to: usize) -> Vec<LatticePoint> {
    let n = ring.len();
    let mut out = vec![ring[from]];
    let mut i = from;
    while i != to {
        i = (i + 1) % n;
        out.push(ring[i]);
    }
    out
}

fn signed_ring_area(ring: &[LatticePoint]) -> Result<i128> {
    let mut sum = 0i128;
    for w in ring[1..].windows(2) {
        sum += twice_signed_area(ring[0], w[0], w[1])?;
    }
    Ok(sum)
}

/// Cuts `p` along `A-D-B` and checks that the lattice-point counts of the
/// parts account for those of the whole.
///
/// `A` and `B` must be distinct boundary lattice points. `D` is either an
/// interior lattice point or equal to `A`, in which case the cut is the
/// single chord `AB`. The cut must run inside `p` and leave two simple
/// polygons.
pub fn verify_additivity(
    p: &LatticePolygon,
    a: LatticePoint,
    d: LatticePoint,
    b: LatticePoint,
) -> Result<AdditivityWitness> {
    if a == b {
        return Err(Error::InvalidCut("A and B coincide".into()));
    }
    for q in [a, b] {
        if p.locate(q)? != Location::Boundary {
            return Err(Error::InvalidCut(format!("{q} is not on the boundary")));
        }
    }
    let chord = d == a;
    if !chord && p.locate(d)? != Location::Interior {
        return Err(Error::InvalidCut(format!("{d} is not an interior point")));
    }

    let mut ring = p.vertices().to_vec();
    splice_boundary_point(&mut ring, a)?;
    splice_boundary_point(&mut ring, b)?;
    let ia = ring.iter().position(|&v| v == a).expect("spliced");
    let ib = ring.iter().position(|&v| v == b).expect("spliced");

    let mut first = chain(&ring, ia, ib);
    let mut second = chain(&ring, ib, ia);
    if !chord {
        first.push(d);
        second.push(d);
    }
    for part in [&first, &second] {
        if part.len() < 3 || signed_ring_area(part)? <= 0 {
            return Err(Error::InvalidCut(
                "cut does not run inside the polygon".into(),
            ));
        }
    }
    if signed_ring_area(&first)? + signed_ring_area(&second)? != p.twice_area() {
        return Err(Error::InvalidCut("parts do not tile the polygon".into()));
    }
    let to_part = |ring: Vec<LatticePoint>| {
        validate_polygon(ring).map_err(|e| Error::InvalidCut(format!("part is not simple: {e}")))
    };
    let (first, second) = (to_part(first)?, to_part(second)?);

    let cut_points = if chord {
        edge_gcd(a, b)? + 1
    } else {
        edge_gcd(a, d)? + edge_gcd(d, b)? + 1
    };
    let witness = AdditivityWitness {
        i: interior_count_oracle(p)?,
        u: boundary_count(p),
        i1: interior_count_oracle(&first)?,
        u1: boundary_count(&first),
        i2: interior_count_oracle(&second)?,
        u2: boundary_count(&second),
        cut_points,
    };
    if !(witness.interior_identity() && witness.boundary_identity() && witness.pick_identity()) {
        return Err(Error::InvariantViolation(format!(
            "additivity fails: {witness:?}"
        )));
    }
    Ok(witness)
}

/// Doubled Pick quantity of a split's parent and of each child, from oracle
/// counts. Additivity means the first equals the sum of the second.
pub fn event_pick_values(event: &SplitEvent) -> Result<(i128, Vec<i128>)> {
    let value = |ring: &[LatticePoint]| -> Result<i128> {
        let c = census_oracle(ring, DEFAULT_ORACLE_LIMIT)?;
        Ok(pick_twice_area(c.interior, c.boundary))
    };
    let parent = value(&event.parent.vertices())?;
    let children = event
        .children
        .iter()
        .map(|c| value(&c.vertices()))
        .collect::<Result<Vec<_>>>()?;
    Ok((parent, children))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn poly(coords: &[(i64, i64)]) -> LatticePolygon {
        validate_polygon(coords.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    fn unit_square() -> LatticePolygon {
        poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    fn square2() -> LatticePolygon {
        poly(&[(0, 0), (2, 0), (2, 2), (0, 2)])
    }

    #[test]
    fn boundary_counts() {
        assert_eq!(boundary_count(&unit_square()), 4);
        assert_eq!(boundary_count(&square2()), 8);
        assert_eq!(boundary_count(&poly(&[(0, 0), (2, 0), (1, 1)])), 4);
    }

    #[test]
    fn interior_counts() {
        assert_eq!(interior_count_oracle(&unit_square()), Ok(0));
        assert_eq!(interior_count_oracle(&square2()), Ok(1));
        let t = poly(&[(0, 0), (1, 2), (-1, 1)]);
        assert_eq!(interior_count_oracle(&t), Ok(1));
        let (_, interior) = lattice_points_oracle(&t, DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(interior, vec![pt(0, 1)]);
    }

    #[test]
    fn oracle_guard() {
        let big = poly(&[(0, 0), (20_000, 0), (0, 20_000)]);
        assert_eq!(
            interior_count_oracle(&big),
            Err(Error::BoxTooLarge {
                points: 20_001 * 20_001,
                limit: DEFAULT_ORACLE_LIMIT
            })
        );
        assert!(interior_count_oracle_with_limit(&square2(), 8).is_err());
        assert_eq!(interior_count_oracle_with_limit(&square2(), 9), Ok(1));
    }

    #[test]
    fn doubled_formula() {
        assert_eq!(pick_twice_area(0, 3), 1);
        assert_eq!(pick_twice_area(1, 8), 8);
        assert_eq!(pick_twice_area(0, 4), 2);
    }

    #[test]
    fn verify_pick_examples() {
        let expect = |p: LatticePolygon, interior, boundary, twice_area| {
            let c = verify_pick(&p).unwrap();
            assert_eq!(
                c,
                PickCount {
                    interior,
                    boundary,
                    twice_area
                }
            );
        };
        expect(unit_square(), 0, 4, 2);
        expect(square2(), 1, 8, 8);
        expect(poly(&[(0, 0), (2, 0), (1, 1)]), 0, 4, 2);
        expect(poly(&[(0, 0), (1, 2), (-1, 1)]), 1, 3, 3);
    }

    #[test]
    fn convex_count_matches_box_scan() {
        let cases: &[&[(i64, i64)]] = &[
            &[(0, 0), (1, 0), (0, 1)],
            &[(0, 0), (2, 0), (2, 2), (0, 2)],
            &[(0, 0), (1, 2), (-1, 1)],
            &[(-3, -7), (11, 2), (4, 9)],
            &[(0, 0), (0, 5), (-3, 5)],
        ];
        for ring in cases {
            let ring: Vec<_> = ring.iter().map(|&(x, y)| pt(x, y)).collect();
            let c = census_oracle(&ring, DEFAULT_ORACLE_LIMIT).unwrap();
            assert_eq!(
                convex_closed_count(&ring).unwrap(),
                (c.interior + c.boundary) as u128
            );
        }
    }

    #[test]
    fn additivity_through_interior_point() {
        let w = verify_additivity(&square2(), pt(0, 0), pt(1, 1), pt(2, 2)).unwrap();
        assert_eq!(w.cut_points, 3);
        assert_eq!((w.i, w.u), (1, 8));
        assert_eq!((w.i1, w.u1, w.i2, w.u2), (0, 6, 0, 6));
    }

    #[test]
    fn additivity_bent_cut() {
        let p = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let w = verify_additivity(&p, pt(2, 0), pt(2, 2), pt(0, 3)).unwrap();
        assert_eq!(w.cut_points, 2 + 1 + 1);
        assert!(w.pick_identity());
    }

    #[test]
    fn additivity_chord() {
        let w = verify_additivity(&unit_square(), pt(0, 0), pt(0, 0), pt(1, 1)).unwrap();
        assert_eq!(w.cut_points, 2);
        assert_eq!((w.i1, w.u1, w.i2, w.u2), (0, 3, 0, 3));
    }

    #[test]
    fn invalid_cuts() {
        // Notched polygon: the chord between the two top corners runs outside.
        let notch = poly(&[(0, 0), (4, 0), (4, 4), (2, 2), (0, 4)]);
        assert!(matches!(
            verify_additivity(&notch, pt(4, 4), pt(4, 4), pt(0, 4)),
            Err(Error::InvalidCut(_))
        ));
        // Segment from (1, 2) to (4, 3) passes above the notch vertex (2, 2).
        assert!(matches!(
            verify_additivity(&notch, pt(0, 3), pt(1, 2), pt(4, 3)),
            Err(Error::InvalidCut(_))
        ));
        assert!(matches!(
            verify_additivity(&square2(), pt(0, 0), pt(3, 3), pt(2, 2)),
            Err(Error::InvalidCut(_))
        ));
        // A and B adjacent along one edge: one part is empty.
        assert!(matches!(
            verify_additivity(&square2(), pt(0, 0), pt(0, 0), pt(1, 0)),
            Err(Error::InvalidCut(_))
        ));
    }
}
