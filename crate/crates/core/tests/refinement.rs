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

use latpick::pick::{
    boundary_count, census_oracle, convex_closed_count, event_pick_values, interior_count_oracle,
    pick_twice_area, verify_pick, DEFAULT_ORACLE_LIMIT,
};
use latpick::sample::{random_simple_polygon, random_triangle};
use latpick::triangulation::{primitive_triangulation, LatticeTriangle, Triangulation};
use latpick::{point_in_polygon, validate_polygon, LatticePoint, LatticePolygon, Location};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn poly(coords: &[(i64, i64)]) -> LatticePolygon {
    validate_polygon(
        coords
            .iter()
            .map(|&(x, y)| LatticePoint::new(x, y))
            .collect(),
    )
    .unwrap()
}

/// Lattice points of a closed triangle, scanning its bounding box.
fn closed_points(t: &LatticeTriangle) -> Vec<LatticePoint> {
    let v = t.vertices();
    let (x0, x1) = (
        v.iter().map(|p| p.x).min().unwrap(),
        v.iter().map(|p| p.x).max().unwrap(),
    );
    let (y0, y1) = (
        v.iter().map(|p| p.y).min().unwrap(),
        v.iter().map(|p| p.y).max().unwrap(),
    );
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = LatticePoint::new(x, y);
            if t.locate(p).unwrap() != Location::Exterior {
                out.push(p);
            }
        }
    }
    out
}

/// Interior test for the tripled centroid against a triangle scaled by 3.
fn centroid_inside(sample: &LatticeTriangle, other: &LatticeTriangle) -> bool {
    let [a, b, c] = sample.vertices();
    let g = LatticePoint::new(a.x + b.x + c.x, a.y + b.y + c.y);
    let scaled = other
        .vertices()
        .map(|p| LatticePoint::new(3 * p.x, 3 * p.y));
    latpick::lattice::locate_in_ring(g, &scaled).unwrap() == Location::Interior
}

fn check_triangulation(p: &LatticePolygon, tr: &Triangulation) {
    assert_eq!(tr.triangles.len() as i128, p.twice_area(), "{p:?}");
    for t in &tr.triangles {
        assert_eq!(t.twice_area(), 1);
        let pts = closed_points(t);
        assert_eq!(pts.len(), 3, "{t} is primitive but holds {pts:?}");
        for v in t.vertices() {
            assert_ne!(point_in_polygon(v, p).unwrap(), Location::Exterior);
        }
    }
    for ev in &tr.events {
        let sum: i128 = ev.children.iter().map(|c| c.twice_area()).sum();
        assert_eq!(sum, ev.parent.twice_area());
        let parent = ev.parent.vertices();
        for c in &ev.children {
            for v in c.vertices() {
                assert!(parent.contains(&v) || v == ev.point);
            }
        }
    }
    assert_eq!(tr.replay().unwrap(), tr.triangles);
}

fn check_tiling(tr: &Triangulation) {
    for (i, t) in tr.triangles.iter().enumerate() {
        for (j, u) in tr.triangles.iter().enumerate() {
            if i != j {
                assert!(!centroid_inside(t, u), "{t} overlaps {u}");
            }
        }
    }
}

#[test]
fn fixed_shapes() {
    for coords in [
        &[(0, 0), (1, 0), (1, 1), (0, 1)][..],
        &[(0, 0), (2, 0), (2, 2), (0, 2)][..],
        &[(0, 0), (4, 0), (0, 4)][..],
        &[(0, 0), (2, 0), (3, 2), (1, 3), (-1, 2)][..],
        &[
            (0, 0),
            (6, 0),
            (6, 1),
            (1, 1),
            (1, 5),
            (6, 5),
            (6, 6),
            (0, 6),
        ][..],
        &[(0, 0), (9, 2), (4, 3), (2, 8)][..],
        &[(-5, -5), (5, -4), (0, 0), (4, 6), (-6, 5)][..],
    ] {
        let p = poly(coords);
        let tr = primitive_triangulation(&p).unwrap();
        check_triangulation(&p, &tr);
        check_tiling(&tr);
    }
}

#[test]
fn random_polygons_refine_completely() {
    let mut rng = StdRng::seed_from_u64(2024);
    for k in 0..150 {
        let p = random_simple_polygon(&mut rng, 12, -20, 20);
        let tr = primitive_triangulation(&p).unwrap();
        check_triangulation(&p, &tr);
        if k % 10 == 0 {
            check_tiling(&tr);
        }
        for ev in &tr.events {
            let (parent, children) = event_pick_values(ev).unwrap();
            assert_eq!(parent, children.iter().sum::<i128>());
        }
    }
}

#[test]
fn pick_identity_on_random_polygons() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..300 {
        let p = random_simple_polygon(&mut rng, 12, -20, 20);
        let i = interior_count_oracle(&p).unwrap();
        let u = boundary_count(&p);
        assert_eq!(pick_twice_area(i, u), p.twice_area());
        let census = census_oracle(p.vertices(), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(census.boundary, u);
        assert!(u >= p.len() as u64);
        assert!(verify_pick(&p).unwrap().identity_holds());
    }
}

#[test]
fn primitive_triangles_report_anchor_counts() {
    let p = poly(&[(0, 0), (5, 1), (3, 4), (-2, 3)]);
    for t in primitive_triangulation(&p).unwrap().triangles {
        let c = verify_pick(&t.to_polygon()).unwrap();
        assert_eq!((c.interior, c.boundary, c.twice_area), (0, 3, 1));
    }
}

#[test]
fn column_scan_matches_box_scan() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..500 {
        let t = random_triangle(&mut rng, -30, 30);
        let census = census_oracle(&t, DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(
            convex_closed_count(&t).unwrap(),
            (census.interior + census.boundary) as u128
        );
    }
}
