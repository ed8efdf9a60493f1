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

use super::LatticeTriangle;
use crate::error::{Error, Result};
use crate::lattice::{locate_in_ring, twice_signed_area, LatticePolygon, Location};

/// Splits a polygon into `n - 2` triangles on its own vertices.
///
/// Ear clipping: repeatedly remove the first vertex (in current ring order)
/// whose turn is strictly convex and whose triangle with its two neighbours
/// contains no other remaining vertex, boundary included. Every test is an
/// exact sign of `twice_signed_area`. `O(n^3)`.
pub fn initial_triangulation(p: &LatticePolygon) -> Result<Vec<LatticeTriangle>> {
    let v = p.vertices();
    let mut ring: Vec<usize> = (0..v.len()).collect();
    let mut out = Vec::with_capacity(v.len() - 2);

    while ring.len() > 3 {
        let m = ring.len();
        let mut clipped = None;
        for i in 0..m {
            let (prev, cur, next) = (ring[(i + m - 1) % m], ring[i], ring[(i + 1) % m]);
            if is_ear(p, &ring, prev, cur, next)? {
                clipped = Some((i, [v[prev], v[cur], v[next]]));
                break;
            }
        }
        let Some((i, [a, b, c])) = clipped else {
            return Err(Error::InvariantViolation(format!(
                "no ear found with {m} vertices left"
            )));
        };
        out.push(LatticeTriangle::new(a, b, c)?);
        ring.remove(i);
    }
    out.push(LatticeTriangle::new(v[ring[0]], v[ring[1]], v[ring[2]])?);
    Ok(out)
}

fn is_ear(
    p: &LatticePolygon,
    ring: &[usize],
    prev: usize,
    cur: usize,
    next: usize,
) -> Result<bool> {
    let v = p.vertices();
    let tri = [v[prev], v[cur], v[next]];
    if twice_signed_area(tri[0], tri[1], tri[2])? <= 0 {
        return Ok(false);
    }
    for &j in ring {
        if j == prev || j == cur || j == next {
            continue;
        }
        if locate_in_ring(v[j], &tri)? != Location::Exterior {
            return Ok(false);
        }
    }
    Ok(true)
}
