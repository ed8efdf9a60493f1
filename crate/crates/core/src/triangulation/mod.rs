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

//! Refinement of a simple lattice polygon into primitive triangles.
//!
//! The polygon is first ear-clipped on its own vertices. Each resulting
//! triangle is then split until every piece has twice-area 1:
//!
//! 1. if an edge carries interior lattice points, split at the one next to
//!    the edge's first endpoint ([`gcd_edge_split`]);
//! 2. otherwise split at the lattice point found by
//!    [`interior_split_point`](crate::bezout::interior_split_point)
//!    ([`interior_split`]).
//!
//! Work is kept on a LIFO stack; children are pushed in construction order,
//! so the last child is refined first. The output order and the event log
//! are fully determined by the input polygon.

mod ear;

use std::fmt;

pub use ear::initial_triangulation;

use crate::bezout::{interior_split_point, normalize};
use crate::error::{Error, Result};
use crate::lattice::{
    edge_gcd, locate_in_ring, twice_signed_area, validate_polygon, LatticePoint, LatticePolygon,
    Location,
};

/// A non-degenerate lattice triangle stored counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeTriangle {
    vertices: [LatticePoint; 3],
    twice_area: i128,
}

impl LatticeTriangle {
    /// Builds a triangle, swapping `v1` and `v2` if the input is clockwise.
    pub fn new(v0: LatticePoint, v1: LatticePoint, v2: LatticePoint) -> Result<Self> {
        let area = twice_signed_area(v0, v1, v2)?;
        match area.signum() {
            0 => Err(Error::DegenerateTriangle),
            1 => Ok(LatticeTriangle {
                vertices: [v0, v1, v2],
                twice_area: area,
            }),
            _ => Ok(LatticeTriangle {
                vertices: [v0, v2, v1],
                twice_area: -area,
            }),
        }
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        self.vertices
    }

    pub fn twice_area(&self) -> i128 {
        self.twice_area
    }

    pub fn is_primitive(&self) -> bool {
        self.twice_area == 1
    }

    /// Edges in scan order `v0v1`, `v1v2`, `v2v0`, each paired with the
    /// opposite vertex.
    pub fn edges(&self) -> [(LatticePoint, LatticePoint, LatticePoint); 3] {
        let [a, b, c] = self.vertices;
        [(a, b, c), (b, c, a), (c, a, b)]
    }

    pub fn locate(&self, p: LatticePoint) -> Result<Location> {
        locate_in_ring(p, &self.vertices)
    }

    pub fn to_polygon(&self) -> LatticePolygon {
        validate_polygon(self.vertices.to_vec()).expect("lattice triangle is a valid polygon")
    }
}

impl fmt::Display for LatticeTriangle {
    /// `x0 y0 x1 y1 x2 y2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "{} {} {} {} {} {}", a.x, a.y, b.x, b.y, c.x, c.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitRule {
    /// Two children through a lattice point on a non-primitive edge.
    EdgeGcdSplit,
    /// Three children through a strictly interior split point.
    InteriorPointSplit,
    /// The split point fell on an edge through the pivot; the zero-area
    /// child was dropped, leaving two.
    DegenerateThreeWay,
}

impl SplitRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            SplitRule::EdgeGcdSplit => "edge-gcd-split",
            SplitRule::InteriorPointSplit => "interior-point-split",
            SplitRule::DegenerateThreeWay => "degenerate-three-way",
        }
    }
}

impl fmt::Display for SplitRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One refinement step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitEvent {
    pub parent: LatticeTriangle,
    pub rule: SplitRule,
    pub point: LatticePoint,
    pub children: Vec<LatticeTriangle>,
}

impl SplitEvent {
    fn new(
        parent: LatticeTriangle,
        rule: SplitRule,
        point: LatticePoint,
        children: Vec<LatticeTriangle>,
    ) -> Result<Self> {
        let sum: i128 = children.iter().map(|c| c.twice_area).sum();
        if sum != parent.twice_area {
            return Err(Error::InvariantViolation(format!(
                "children of {parent} have twice-area {sum}, parent has {}",
                parent.twice_area
            )));
        }
        Ok(SplitEvent {
            parent,
            rule,
            point,
            children,
        })
    }
}

/// A polygon refined into primitive triangles, with the steps that got
/// there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub source: LatticePolygon,
    /// Output of [`initial_triangulation`], the starting point for replay.
    pub initial: Vec<LatticeTriangle>,
    pub triangles: Vec<LatticeTriangle>,
    pub events: Vec<SplitEvent>,
}

impl Triangulation {
    /// Re-runs the work stack from `initial`, taking each split from the
    /// event log instead of recomputing it, and returns the final list.
    ///
    /// Fails if the log does not match the stack discipline.
    pub fn replay(&self) -> Result<Vec<LatticeTriangle>> {
        let mut stack = self.initial.clone();
        let mut events = self.events.iter().peekable();
        let mut out = Vec::with_capacity(self.triangles.len());
        while let Some(t) = stack.pop() {
            match events.peek() {
                Some(ev) if ev.parent == t => {
                    stack.extend(ev.children.iter().copied());
                    events.next();
                }
                _ if t.is_primitive() => out.push(t),
                _ => {
                    return Err(Error::InvariantViolation(format!(
                        "replay: no event refines non-primitive triangle {t}"
                    )))
                }
            }
        }
        if events.next().is_some() {
            return Err(Error::InvariantViolation(
                "replay: unused events remain".into(),
            ));
        }
        Ok(out)
    }
}

fn child(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<Option<LatticeTriangle>> {
    match LatticeTriangle::new(a, b, c) {
        Ok(t) => Ok(Some(t)),
        Err(Error::DegenerateTriangle) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Splits through the lattice point nearest the first endpoint of the first
/// non-primitive edge, or returns `None` if all edges are primitive.
///
/// With edge `AB` (scan order), opposite vertex `C` and `k = edge_gcd(A, B)`,
/// the point is `D = ((k-1) A + B) / k` and the children are `ACD`, `BCD`.
pub fn gcd_edge_split(t: &LatticeTriangle) -> Result<Option<SplitEvent>> {
    for (a, b, c) in t.edges() {
        let k = edge_gcd(a, b)?;
        if k > 1 {
            let k = k as i64;
            let d = LatticePoint::new(a.x + (b.x - a.x) / k, a.y + (b.y - a.y) / k);
            let children = vec![
                LatticeTriangle::new(a, c, d)?,
                LatticeTriangle::new(b, c, d)?,
            ];
            return SplitEvent::new(*t, SplitRule::EdgeGcdSplit, d, children).map(Some);
        }
    }
    Ok(None)
}

/// Splits a triangle with primitive edges and twice-area `n > 1`.
///
/// The pivot is `v2` (`C`), with `A = v0` and `B = v1`; the split point `D`
/// comes from [`interior_split_point`]. Children are `ABD`, `ACD`, `BCD`,
/// minus any with zero area.
pub fn interior_split(t: &LatticeTriangle) -> Result<SplitEvent> {
    if t.twice_area <= 1 {
        return Err(Error::Contract(format!(
            "interior split needs twice-area > 1, got {}",
            t.twice_area
        )));
    }
    for (a, b, _) in t.edges() {
        let k = edge_gcd(a, b)?;
        if k != 1 {
            return Err(Error::Contract(format!(
                "interior split needs primitive edges, edge {a}-{b} has gcd {k}"
            )));
        }
    }
    let nt = normalize(t.vertices, 2)?;
    let d = nt.to_original(interior_split_point(&nt)?)?;
    let [a, b, c] = t.vertices;
    let children: Vec<_> = [child(a, b, d)?, child(a, c, d)?, child(b, c, d)?]
        .into_iter()
        .flatten()
        .collect();
    let rule = match children.len() {
        3 => SplitRule::InteriorPointSplit,
        2 => SplitRule::DegenerateThreeWay,
        m => {
            return Err(Error::InvariantViolation(format!(
                "split point {d} of {t} leaves {m} non-degenerate children"
            )))
        }
    };
    SplitEvent::new(*t, rule, d, children)
}

/// Refines a polygon into `twice_polygon_area(p)` triangles of twice-area 1.
pub fn primitive_triangulation(p: &LatticePolygon) -> Result<Triangulation> {
    let initial = initial_triangulation(p)?;
    let mut stack = initial.clone();
    let mut triangles = Vec::new();
    let mut events = Vec::new();
    while let Some(t) = stack.pop() {
        if t.is_primitive() {
            triangles.push(t);
            continue;
        }
        let event = match gcd_edge_split(&t)? {
            Some(ev) => ev,
            None => interior_split(&t)?,
        };
        stack.extend(event.children.iter().copied());
        events.push(event);
    }
    Ok(Triangulation {
        source: p.clone(),
        initial,
        triangles,
        events,
    })
}
