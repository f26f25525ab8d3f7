// Copyright 2026 The spinqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


//! The checked-in program corpus matches its generator and parses back to
//! the same programs.

use std::path::PathBuf;

use spinqc::corpus::{self, Kind};
use spinqc::{parse_program, run_program, serialize, RunConfig};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("programs")
}

#[test]
fn files_on_disk_match_the_generator() {
    for e in corpus::all() {
        let path = root().join(&e.path);
        let text = std::fs::read_to_string(&path).unwrap_or_else(|err| panic!("{}: {err}", path.display()));
        assert_eq!(text, e.file_text(), "{} is stale; rerun the gen_corpus example", e.path);
    }
}

#[test]
fn no_stray_files() {
    let want: Vec<String> = corpus::all().into_iter().map(|e| e.path).collect();
    for dir in ["gates", "nmr", "micro"] {
        for f in std::fs::read_dir(root().join(dir)).unwrap() {
            let name = format!("{dir}/{}", f.unwrap().file_name().to_string_lossy());
            assert!(want.contains(&name), "{name} is not generated");
        }
    }
}

#[test]
fn files_parse_to_their_programs() {
    for e in corpus::all() {
        let text = std::fs::read_to_string(root().join(&e.path)).unwrap();
        let p = parse_program(&text).unwrap_or_else(|err| panic!("{}: {err}", e.path));
        assert_eq!(p, e.program, "{}", e.path);
        assert_eq!(parse_program(&serialize(&p)).unwrap(), p, "{}", e.path);
    }
}

#[test]
fn gate_files_pass_on_the_ideal_backend() {
    for e in corpus::all().into_iter().filter(|e| e.kind == Kind::Gate) {
        let text = std::fs::read_to_string(root().join(&e.path)).unwrap();
        let report = run_program(&parse_program(&text).unwrap(), &RunConfig::default()).unwrap();
        assert!(!report.assertions.is_empty(), "{} has no asserts", e.path);
        assert!(report.all_passed(), "{}: {:?}", e.path, report.assertions);
    }
}

#[test]
fn nmr_files_are_exact_on_the_ideal_backend() {
    for e in corpus::all().into_iter().filter(|e| e.kind == Kind::Nmr) {
        let text = std::fs::read_to_string(root().join(&e.path)).unwrap();
        let report = run_program(&parse_program(&text).unwrap(), &RunConfig::default()).unwrap();
        let q = &report.last().expectations;
        for x in q {
            let near = x.qz.min(1.0 - x.qz);
            assert!(near < 1e-6, "{}: Qz = {}", e.path, x.qz);
        }
    }
}
