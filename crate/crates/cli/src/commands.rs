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

use std::fmt::Write;
use std::path::Path;

use latpick::pick::{
    boundary_count, interior_count_oracle, lattice_points_oracle, verify_pick, DEFAULT_ORACLE_LIMIT,
};
use latpick::triangulation::{primitive_triangulation, SplitEvent};
use latpick::LatticePolygon;

use crate::error::CliError;
use crate::svg;

pub fn area(p: &LatticePolygon) -> String {
    let twice = p.twice_area();
    format!("twice_area={twice} area={twice}/2\n")
}

pub fn count(p: &LatticePolygon) -> Result<String, CliError> {
    let interior = interior_count_oracle(p)?;
    let boundary = boundary_count(p);
    Ok(format!("interior={interior} boundary={boundary}\n"))
}

pub fn pick(p: &LatticePolygon) -> Result<String, CliError> {
    let c = verify_pick(p)?;
    Ok(format!(
        "interior={} boundary={} twice_area={} OK\n",
        c.interior, c.boundary, c.twice_area
    ))
}

fn write_event(out: &mut String, index: usize, ev: &SplitEvent) {
    let children: Vec<String> = ev.children.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "event {index} {} point {} {} parent {} children {}",
        ev.rule,
        ev.point.x,
        ev.point.y,
        ev.parent,
        children.join(" ; ")
    );
}

/// One primitive triangle per line, then optionally the split log.
pub fn triangulate(p: &LatticePolygon, events: bool) -> Result<String, CliError> {
    let tr = primitive_triangulation(p)?;
    let mut out = String::new();
    for t in &tr.triangles {
        let _ = writeln!(out, "{t}");
    }
    if events {
        let _ = writeln!(out, "events={}", tr.events.len());
        for (i, ev) in tr.events.iter().enumerate() {
            write_event(&mut out, i, ev);
        }
    }
    Ok(out)
}

pub fn svg(p: &LatticePolygon, out: &Path) -> Result<(), CliError> {
    let (boundary, interior) = lattice_points_oracle(p, DEFAULT_ORACLE_LIMIT)?;
    let tr = primitive_triangulation(p)?;
    let doc = svg::render(p, &tr.triangles, &boundary, &interior);
    std::fs::write(out, doc).map_err(|source| CliError::Write {
        path: out.to_path_buf(),
        source,
    })
}
