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

//! Deterministic SVG rendering of a refined polygon.

use std::fmt::Write;

use latpick::triangulation::LatticeTriangle;
use latpick::{LatticePoint, LatticePolygon};

/// Pixels per lattice unit.
const SCALE: i64 = 20;
const INK: &str = "#1f2933";
const MESH: &str = "#9aa5b1";

struct Frame {
    min_x: i64,
    max_y: i64,
    width: i64,
    height: i64,
}

impl Frame {
    /// Bounding box plus one unit of margin on every side; y points up.
    fn new(p: &LatticePolygon) -> Frame {
        let (lo, hi) = p.bounding_box();
        Frame {
            min_x: lo.x,
            max_y: hi.y,
            width: (hi.x - lo.x + 2) * SCALE,
            height: (hi.y - lo.y + 2) * SCALE,
        }
    }

    fn map(&self, p: LatticePoint) -> (i64, i64) {
        (
            (p.x - self.min_x + 1) * SCALE,
            (self.max_y - p.y + 1) * SCALE,
        )
    }

    fn points_attr(&self, pts: &[LatticePoint]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Outline, primitive triangle edges, boundary points (filled) and interior
/// points (hollow), in that paint order.
pub fn render(
    polygon: &LatticePolygon,
    triangles: &[LatticeTriangle],
    boundary: &[LatticePoint],
    interior: &[LatticePoint],
) -> String {
    let f = Frame::new(polygon);
    let mut out = String::new();
    let w = &mut out;
    // Writing into a String cannot fail.
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        f.width, f.height
    );
    let _ = writeln!(w, r#"<g fill="none" stroke="{MESH}" stroke-width="1">"#);
    for t in triangles {
        let _ = writeln!(w, r#"<polygon points="{}"/>"#, f.points_attr(&t.vertices()));
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(
        w,
        r#"<polygon points="{}" fill="none" stroke="{INK}" stroke-width="2"/>"#,
        f.points_attr(polygon.vertices())
    );
    let _ = writeln!(w, r#"<g fill="{INK}">"#);
    for &p in boundary {
        let (x, y) = f.map(p);
        let _ = writeln!(w, r#"<circle cx="{x}" cy="{y}" r="3"/>"#);
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, r#"<g fill="white" stroke="{INK}" stroke-width="1">"#);
    for &p in interior {
        let (x, y) = f.map(p);
        let _ = writeln!(w, r#"<circle cx="{x}" cy="{y}" r="3"/>"#);
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, "</svg>");
    out
}
