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

//! Golden-file runner shared by the `golden` and `acceptance` targets.
//!
//! Every file in `corpus/` is run through all five subcommands and compared
//! byte for byte against `golden/<file>/`. Every file in `errors/` must fail
//! with the exit code and message recorded in `golden/errors/<file>.out`.
//! Set `LATPICK_BLESS=1` to rewrite the expected files.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_latpick")
}

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("spawn latpick")
}

pub fn files_in(dir: &str) -> Vec<PathBuf> {
    let mut files: Vec<_> = fs::read_dir(tests_dir().join(dir))
        .expect("read dir")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    files
}

fn blessing() -> bool {
    std::env::var_os("LATPICK_BLESS").is_some()
}

fn compare(expected_path: &Path, actual: &[u8], failures: &mut Vec<String>) {
    if blessing() {
        fs::create_dir_all(expected_path.parent().unwrap()).unwrap();
        fs::write(expected_path, actual).unwrap();
        return;
    }
    match fs::read(expected_path) {
        Ok(expected) if expected == actual => {}
        Ok(_) => failures.push(format!("{} differs", expected_path.display())),
        Err(e) => failures.push(format!("{}: {e}", expected_path.display())),
    }
}

/// Runs the whole golden corpus. Returns the number of comparisons made and
/// a description of each mismatch.
pub fn check_golden() -> (usize, Vec<String>) {
    let golden = tests_dir().join("golden");
    let tmp = std::env::temp_dir().join(format!("latpick-golden-{}", std::process::id()));
    fs::create_dir_all(&tmp).unwrap();
    let mut failures = Vec::new();
    let mut checked = 0;

    for file in files_in("corpus") {
        let name = file.file_name().unwrap().to_str().unwrap().to_owned();
        let path = file.to_str().unwrap();
        let dir = golden.join(&name);
        let runs: [(&str, Vec<&str>); 5] = [
            ("area", vec!["area", path]),
            ("count", vec!["count", path]),
            ("pick", vec!["pick", path]),
            ("triangulate", vec!["triangulate", path]),
            ("triangulate_events", vec!["triangulate", "--events", path]),
        ];
        for (label, args) in runs {
            let out = run(&args);
            if !out.status.success() {
                failures.push(format!("{name} {label}: exit {:?}", out.status.code()));
                continue;
            }
            compare(
                &dir.join(format!("{label}.out")),
                &out.stdout,
                &mut failures,
            );
            checked += 1;
        }
        let svg_path = tmp.join(format!("{name}.svg"));
        let out = run(&["svg", path, "-o", svg_path.to_str().unwrap()]);
        if !out.status.success() || !out.stdout.is_empty() {
            failures.push(format!("{name} svg: exit {:?}", out.status.code()));
        } else {
            compare(
                &dir.join("svg.svg"),
                &fs::read(&svg_path).unwrap(),
                &mut failures,
            );
            checked += 1;
        }
    }

    for file in files_in("errors") {
        let name = file.file_name().unwrap().to_str().unwrap().to_owned();
        let out = run(&["pick", file.to_str().unwrap()]);
        let mut record = format!("exit={}\n", out.status.code().unwrap_or(-1)).into_bytes();
        record.extend_from_slice(&out.stderr);
        compare(
            &golden.join("errors").join(format!("{name}.out")),
            &record,
            &mut failures,
        );
        checked += 1;
    }
    let _ = fs::remove_dir_all(&tmp);
    (checked, failures)
}
