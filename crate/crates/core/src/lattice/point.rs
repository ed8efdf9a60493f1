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

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported absolute coordinate value.
///
/// With this bound every determinant of coordinate differences fits in an
/// `i128` with room to spare, so all predicates are exact.
pub const COORD_BOUND: i64 = 1 << 31;

/// A point of the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

/// Difference of two lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LatticeVector {
    pub dx: i64,
    pub dy: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// Builds a point, rejecting coordinates outside `[-COORD_BOUND, COORD_BOUND]`.
    pub fn checked(x: i64, y: i64) -> Result<Self> {
        let p = LatticePoint { x, y };
        p.check_bounds()?;
        Ok(p)
    }

    pub fn in_bounds(&self) -> bool {
        self.x.abs() <= COORD_BOUND && self.y.abs() <= COORD_BOUND
    }

    pub fn check_bounds(&self) -> Result<()> {
        if self.x.checked_abs().is_some() && self.in_bounds() {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                x: self.x,
                y: self.y,
            })
        }
    }

    /// Vector from `self` to `other`, with overflow checked.
    pub fn to(self, other: LatticePoint) -> Result<LatticeVector> {
        Ok(LatticeVector {
            dx: other.x.checked_sub(self.x).ok_or(Error::Overflow)?,
            dy: other.y.checked_sub(self.y).ok_or(Error::Overflow)?,
        })
    }

    pub fn translate(self, v: LatticeVector) -> Result<LatticePoint> {
        Ok(LatticePoint {
            x: self.x.checked_add(v.dx).ok_or(Error::Overflow)?,
            y: self.y.checked_add(v.dy).ok_or(Error::Overflow)?,
        })
    }
}

impl LatticeVector {
    pub const fn new(dx: i64, dy: i64) -> Self {
        LatticeVector { dx, dy }
    }

    /// Exact 2D cross product `self.dx * other.dy - self.dy * other.dx`.
    ///
    /// Each product of two `i64` values lies in `[-2^126 + 2^63, 2^126]`, so
    /// the difference always fits in an `i128`.
    pub fn cross(self, other: LatticeVector) -> i128 {
        self.dx as i128 * other.dy as i128 - self.dy as i128 * other.dx as i128
    }

    pub fn dot(self, other: LatticeVector) -> Result<i128> {
        let lhs = (self.dx as i128).checked_mul(other.dx as i128);
        let rhs = (self.dy as i128).checked_mul(other.dy as i128);
        match (lhs, rhs) {
            (Some(l), Some(r)) => l.checked_add(r).ok_or(Error::Overflow),
            _ => Err(Error::Overflow),
        }
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0 && self.dy == 0
    }
}

// Operator impls use plain arithmetic; callers working near i64 limits
// should go through `to`/`translate`.
impl Sub for LatticePoint {
    type Output = LatticeVector;
    fn sub(self, rhs: LatticePoint) -> LatticeVector {
        LatticeVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<LatticeVector> for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: LatticeVector) -> LatticePoint {
        LatticePoint::new(self.x + rhs.dx, self.y + rhs.dy)
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.dx - rhs.dx, self.dy - rhs.dy)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.dx, -self.dy)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint::new(x, y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
