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

//! Split points of non-primitive lattice triangles.
//!
//! A triangle is first moved into a normalized frame: pivot vertex `C` at
//! the origin, the other two vertices `A = (a, c)` and `B = (b, d)` with
//! `n = ad - bc > 0` and `c < d`. When the opposite edge `AB` is primitive
//! and `n > 1`, the segment from `(n-1)/n * A` to `(n-1)/n * B` carries
//! exactly one lattice point. [`interior_split_point`] constructs it from
//! Bezout coefficients in constant time; [`split_point_scan`] finds it by
//! testing the `n` evenly spaced candidates on that segment.

use crate::error::{Error, Result};
use crate::lattice::{extended_gcd, gcd, twice_signed_area, LatticePoint, LatticeVector};

/// Rigid lattice map from the original frame into the normalized one.
///
/// Applied in order: translate the pivot to the origin, optionally swap the
/// axes `(x, y) -> (y, x)`, optionally rotate by a half turn
/// `(x, y) -> (-x, -y)`. `swap_ab` records whether the roles of the two
/// non-pivot vertices were exchanged to make the orientation positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrameTransform {
    pub origin: LatticePoint,
    pub pivot: usize,
    pub swap_axes: bool,
    pub half_turn: bool,
    pub swap_ab: bool,
}

impl FrameTransform {
    pub const IDENTITY: FrameTransform = FrameTransform {
        origin: LatticePoint::ORIGIN,
        pivot: 0,
        swap_axes: false,
        half_turn: false,
        swap_ab: false,
    };

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    fn apply_linear(&self, v: LatticeVector) -> LatticeVector {
        let v = if self.swap_axes {
            LatticeVector::new(v.dy, v.dx)
        } else {
            v
        };
        if self.half_turn {
            -v
        } else {
            v
        }
    }

    /// Original frame to normalized frame.
    pub fn forward(&self, p: LatticePoint) -> Result<LatticePoint> {
        let v = self.apply_linear(self.origin.to(p)?);
        Ok(LatticePoint::new(v.dx, v.dy))
    }

    /// Normalized frame back to the original frame.
    pub fn inverse(&self, p: LatticePoint) -> Result<LatticePoint> {
        // Both linear parts are involutions and commute, so the linear
        // part is its own inverse.
        let v = self.apply_linear(LatticePoint::ORIGIN.to(p)?);
        self.origin.translate(v)
    }
}

/// A lattice triangle moved so that its pivot sits at the origin.
///
/// Invariants: `n = a.dx * b.dy - b.dx * a.dy > 0` and `a.dy < b.dy`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalizedTriangle {
    a: LatticeVector,
    b: LatticeVector,
    n: i128,
    transform: FrameTransform,
}

impl NormalizedTriangle {
    /// Wraps vectors that already satisfy the normalized-frame invariants,
    /// with the identity transform.
    pub fn from_vectors(a: LatticeVector, b: LatticeVector) -> Result<Self> {
        let n = a.cross(b);
        if n <= 0 {
            return Err(Error::Contract(format!(
                "normalized triangle needs positive orientation, got n = {n}"
            )));
        }
        if a.dy >= b.dy {
            return Err(Error::Contract(format!(
                "normalized triangle needs a.dy < b.dy, got {} >= {}",
                a.dy, b.dy
            )));
        }
        Ok(NormalizedTriangle {
            a,
            b,
            n,
            transform: FrameTransform::IDENTITY,
        })
    }

    pub fn a(&self) -> LatticeVector {
        self.a
    }

    pub fn b(&self) -> LatticeVector {
        self.b
    }

    /// Twice the area.
    pub fn n(&self) -> i128 {
        self.n
    }

    pub fn transform(&self) -> &FrameTransform {
        &self.transform
    }

    /// `gcd(a - b)` over both coordinates: 1 iff the edge opposite the pivot
    /// is primitive.
    pub fn opposite_edge_gcd(&self) -> u64 {
        let ab = self.a - self.b;
        gcd(ab.dx, ab.dy)
    }

    /// Maps a normalized-frame point back into the input frame.
    pub fn to_original(&self, p: LatticePoint) -> Result<LatticePoint> {
        self.transform.inverse(p)
    }

    /// The input vertices, in the order given to [`normalize`].
    pub fn original_vertices(&self) -> Result<[LatticePoint; 3]> {
        let t = &self.transform;
        let (first, second) = if t.swap_ab {
            (self.b, self.a)
        } else {
            (self.a, self.b)
        };
        let mut out = [LatticePoint::ORIGIN; 3];
        out[t.pivot] = t.inverse(LatticePoint::ORIGIN)?;
        out[(t.pivot + 1) % 3] = t.inverse(LatticePoint::new(first.dx, first.dy))?;
        out[(t.pivot + 2) % 3] = t.inverse(LatticePoint::new(second.dx, second.dy))?;
        Ok(out)
    }

    fn check_split_preconditions(&self) -> Result<()> {
        if self.n <= 1 {
            return Err(Error::Contract(format!(
                "split point needs twice-area n > 1, got {}",
                self.n
            )));
        }
        let k = self.opposite_edge_gcd();
        if k != 1 {
            return Err(Error::Contract(format!(
                "split point needs a primitive opposite edge, edge gcd is {k}"
            )));
        }
        Ok(())
    }
}

/// Moves vertex `pivot` of `t` to the origin and fixes orientation.
///
/// The other vertices become `a = t[pivot+1] - t[pivot]` and
/// `b = t[pivot+2] - t[pivot]` (indices mod 3). Then, in order: if
/// `a.dy == b.dy` the axes are swapped; if the orientation is negative `a`
/// and `b` are exchanged; if `a.dy > b.dy` both are rotated by a half turn.
pub fn normalize(t: [LatticePoint; 3], pivot: usize) -> Result<NormalizedTriangle> {
    if pivot > 2 {
        return Err(Error::Contract(format!("pivot index {pivot} out of range")));
    }
    if twice_signed_area(t[0], t[1], t[2])? == 0 {
        return Err(Error::DegenerateTriangle);
    }
    let origin = t[pivot];
    let mut transform = FrameTransform {
        origin,
        pivot,
        ..FrameTransform::IDENTITY
    };
    let mut a = origin.to(t[(pivot + 1) % 3])?;
    let mut b = origin.to(t[(pivot + 2) % 3])?;

    if a.dy == b.dy {
        transform.swap_axes = true;
        a = LatticeVector::new(a.dy, a.dx);
        b = LatticeVector::new(b.dy, b.dx);
    }
    let mut n = a.cross(b);
    if n < 0 {
        transform.swap_ab = true;
        std::mem::swap(&mut a, &mut b);
        n = -n;
    }
    if a.dy > b.dy {
        transform.half_turn = true;
        a = -a;
        b = -b;
    }
    Ok(NormalizedTriangle { a, b, n, transform })
}

fn ceil_div(num: i128, den: i128) -> i128 {
    -((-num).div_euclid(den))
}

/// The lattice point on the segment `(n-1)/n * AB`, by construction.
///
/// Solves `(a-b) s - (c-d) t = 1` with [`extended_gcd`]; `(n-1)(t, s)` is then
/// a lattice point on the line `(a-b) y - (c-d) x = n - 1`. Shifting it by
/// integer multiples of `(a-b, c-d)` moves `y` in steps of `d - c`; the shift
/// is chosen with one Euclidean division so that
/// `(n-1) c / n <= y < (n-1) c / n + (d - c)`, and that window contains only
/// points of the segment. The shift is taken modulo `d - c` before it is
/// applied and `x` is recovered from the line equation, which keeps every
/// intermediate far inside `i128`.
///
/// The result is in the normalized frame. It may lie on edge `CA` or `CB`
/// when those edges are not primitive.
pub fn interior_split_point(nt: &NormalizedTriangle) -> Result<LatticePoint> {
    nt.check_split_preconditions()?;
    let (a, b, n) = (nt.a, nt.b, nt.n);
    let p = a.dx as i128 - b.dx as i128;
    let delta = b.dy as i128 - a.dy as i128;
    let bezout = extended_gcd(
        a.dx.checked_sub(b.dx).ok_or(Error::Overflow)?,
        b.dy.checked_sub(a.dy).ok_or(Error::Overflow)?,
    );
    debug_assert_eq!(bezout.g, 1);

    // y0 = (n - 1) s, reduced mod delta.
    let y0_mod = ((n - 1).rem_euclid(delta) * bezout.s.rem_euclid(delta)).rem_euclid(delta);
    let low = ceil_div((n - 1) * a.dy as i128, n);
    let y = low + (y0_mod - low).rem_euclid(delta);

    let numer = (n - 1) - p * y;
    if numer % delta != 0 {
        return Err(Error::InvariantViolation(format!(
            "split point x is not integral: {numer} / {delta}"
        )));
    }
    let x = numer / delta;
    let to_i64 = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow);
    Ok(LatticePoint::new(to_i64(x)?, to_i64(y)?))
}

/// Every element of `{((n-i) A + (i-1) B) / n : i = 1..n}` with integral
/// coordinates, in increasing `i`. `O(n)`.
pub fn x_set_lattice_points(nt: &NormalizedTriangle) -> Vec<LatticePoint> {
    let (a, b, n) = (nt.a, nt.b, nt.n);
    let mut found = Vec::new();
    for i in 1..=n {
        let x = (n - i) * a.dx as i128 + (i - 1) * b.dx as i128;
        let y = (n - i) * a.dy as i128 + (i - 1) * b.dy as i128;
        if x % n == 0 && y % n == 0 {
            found.push(LatticePoint::new((x / n) as i64, (y / n) as i64));
        }
    }
    found
}

/// The split point found by scanning the candidate set; the oracle for
/// [`interior_split_point`].
pub fn split_point_scan(nt: &NormalizedTriangle) -> Result<LatticePoint> {
    nt.check_split_preconditions()?;
    match x_set_lattice_points(nt).as_slice() {
        [only] => Ok(*only),
        found => Err(Error::InvariantViolation(format!(
            "expected exactly one lattice point among the candidates, found {}",
            found.len()
        ))),
    }
}
