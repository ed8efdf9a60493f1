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

//! Random lattice geometry for property tests and benchmarks.
//!
//! Every generator retries until it has a valid object, so callers only
//! choose the size and coordinate range.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bezout::{normalize, NormalizedTriangle};
use crate::lattice::{
    segments_intersect, twice_signed_area, validate_polygon, LatticePoint, LatticePolygon,
};

fn random_point<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> LatticePoint {
    LatticePoint::new(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi))
}

fn distinct_points<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Vec<LatticePoint> {
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let p = random_point(rng, lo, hi);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// Angular order around `c`, starting from the positive x axis; ties broken
/// by distance.
fn angle_cmp(c: LatticePoint, p: LatticePoint, q: LatticePoint) -> Ordering {
    let half = |v: LatticePoint| (v.y < c.y || (v.y == c.y && v.x < c.x)) as u8;
    half(p).cmp(&half(q)).then_with(|| {
        let cross = twice_signed_area(c, p, q).expect("small coordinates");
        0.cmp(&cross).then_with(|| {
            let d = |v: LatticePoint| (v.x - c.x).pow(2) + (v.y - c.y).pow(2);
            d(p).cmp(&d(q))
        })
    })
}

fn star_ring<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Vec<LatticePoint> {
    let c = random_point(rng, lo, hi);
    let mut pts: Vec<_> = distinct_points(rng, n, lo, hi)
        .into_iter()
        .filter(|&p| p != c)
        .collect();
    pts.sort_by(|&p, &q| angle_cmp(c, p, q));
    pts
}

/// Random order, then 2-opt moves until no two edges cross.
fn untangled_ring<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Vec<LatticePoint> {
    let mut ring = distinct_points(rng, n, lo, hi);
    ring.shuffle(rng);
    for _ in 0..(n * n * 4) {
        let mut crossing = None;
        'scan: for i in 0..n {
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (ring[i], ring[i + 1]);
                let (c, d) = (ring[j], ring[(j + 1) % n]);
                if segments_intersect(a, b, c, d).expect("small coordinates") {
                    crossing = Some((i, j));
                    break 'scan;
                }
            }
        }
        match crossing {
            Some((i, j)) => ring[i + 1..=j].reverse(),
            None => break,
        }
    }
    ring
}

/// A random simple polygon with 3 to `max_vertices` vertices, coordinates
/// in `[lo, hi]`.
///
/// Mixes star-shaped polygons (angular sort around a random centre) with
/// 2-opt untangled random rings, which are often far from convex.
pub fn random_simple_polygon<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    lo: i64,
    hi: i64,
) -> LatticePolygon {
    assert!(max_vertices >= 3 && hi - lo >= 2);
    loop {
        let n = rng.gen_range(3..=max_vertices);
        let ring = if rng.gen_bool(0.5) {
            star_ring(rng, n, lo, hi)
        } else {
            untangled_ring(rng, n, lo, hi)
        };
        if let Ok(p) = validate_polygon(ring) {
            return p;
        }
    }
}

/// Three non-collinear random points in `[lo, hi]^2`.
pub fn random_triangle<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> [LatticePoint; 3] {
    loop {
        let t = [
            random_point(rng, lo, hi),
            random_point(rng, lo, hi),
            random_point(rng, lo, hi),
        ];
        if twice_signed_area(t[0], t[1], t[2]).expect("small coordinates") != 0 {
            return t;
        }
    }
}

/// A random triangle of twice-area 1: the unit triangle pushed through a
/// random product of integer shears, translated to a random spot.
pub fn random_unimodular_triangle<R: Rng + ?Sized>(
    rng: &mut R,
    lo: i64,
    hi: i64,
) -> [LatticePoint; 3] {
    loop {
        // Columns of a determinant-one integer matrix.
        let (mut e1, mut e2) = ((1i64, 0i64), (0i64, 1i64));
        for _ in 0..rng.gen_range(0..6) {
            let k = rng.gen_range(-6..=6);
            if rng.gen_bool(0.5) {
                e1.0 += k * e1.1;
                e2.0 += k * e2.1;
            } else {
                e1.1 += k * e1.0;
                e2.1 += k * e2.0;
            }
        }
        let o = random_point(rng, lo, hi);
        let t = [
            o,
            LatticePoint::new(o.x + e1.0, o.y + e1.1),
            LatticePoint::new(o.x + e2.0, o.y + e2.1),
        ];
        if t.iter()
            .all(|p| (lo..=hi).contains(&p.x) && (lo..=hi).contains(&p.y))
        {
            let mut t = t;
            t.shuffle(rng);
            return t;
        }
    }
}

/// A normalized triangle with primitive opposite edge and `1 < n <= max_n`,
/// taken from a random triangle with coordinates in `[-bound, bound]` and a
/// random pivot. Returns the input triangle alongside.
pub fn random_splittable_triangle<R: Rng + ?Sized>(
    rng: &mut R,
    bound: i64,
    max_n: i128,
) -> ([LatticePoint; 3], NormalizedTriangle) {
    loop {
        let reach = *[4, 16, 64, 128].choose(rng).expect("non-empty");
        let c = random_point(rng, -bound, bound);
        let near = |rng: &mut R| {
            LatticePoint::new(
                c.x + rng.gen_range(-reach..=reach),
                c.y + rng.gen_range(-reach..=reach),
            )
        };
        let t = [c, near(rng), near(rng)];
        if t.iter().any(|p| p.x.abs() > bound || p.y.abs() > bound) {
            continue;
        }
        let Ok(nt) = normalize(t, rng.gen_range(0..3)) else {
            continue;
        };
        if nt.n() > 1 && nt.n() <= max_n && nt.opposite_edge_gcd() == 1 {
            return (t, nt);
        }
    }
}
