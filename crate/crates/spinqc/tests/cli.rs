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


//! The command-line front end, run as a separate process.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn spinqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinqc")).args(args).output().unwrap()
}

fn program(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("programs").join(name).to_string_lossy().into_owned()
}

fn temp_program(tag: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("spinqc-cli-{}-{tag}.qp", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ideal_run_passes_its_asserts() {
    let o = spinqc(&["--program", &program("gates/grover2.qp")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("final"));
}

#[test]
fn csv_has_the_documented_columns() {
    let o = spinqc(&["--program", &program("gates/cnot-01.qp"), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("checkpoint,qubit,qx,qy,qz"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    let qz: Vec<f64> = rows.iter().map(|r| r.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert!((qz[0] - 1.0).abs() < 1e-12 && (qz[1] - 1.0).abs() < 1e-12, "{out}");
}

#[test]
fn json_lines_are_valid_json() {
    let o = spinqc(&["--program", &program("gates/qft3.qp"), "--format", "json-lines", "--dump-amplitudes"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut kinds = Vec::new();
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap_or_else(|e| panic!("{line}: {e}"));
        kinds.push(v["type"].as_str().unwrap().to_string());
    }
    for k in ["config", "expectation", "amplitude"] {
        assert!(kinds.iter().any(|x| x == k), "no {k} line in {out}");
    }
}

#[test]
fn nmr_program_on_a_physical_backend() {
    let o = spinqc(&["--program", &program("nmr/grover2-nmr.qp"), "--backend", "st4-pair", "--s", "8", "--format", "csv"]);
    assert!(o.status.success() || o.status.code() == Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("checkpoint,qubit,qx,qy,qz"));
}

#[test]
fn failed_assert_exits_with_one() {
    let p = temp_program("assert", "qubits 1\ngate X 1\ngate X 1\nassert qz 1 0 tol 0.1\n");
    let o = spinqc(&["--program", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn parse_error_reports_line_and_column() {
    let p = temp_program("parse", "qubits 2\ngate CP 1 2 angle pi/\n");
    let o = spinqc(&["--program", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2, column"), "{err}");
}

#[test]
fn bad_flags_are_rejected() {
    assert_ne!(spinqc(&["--program", &program("gates/qft3.qp"), "--backend", "magic"]).status.code(), Some(0));
    assert_ne!(spinqc(&["--program", &program("gates/qft3.qp"), "--s", "12"]).status.code(), Some(0));
    assert_eq!(spinqc(&["--bench", "spin-bath-99"]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = spinqc(&["--selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn bench_refuses_what_exceeds_the_memory_cap() {
    let o = spinqc(&["--bench", "spin-bath-22", "--mem-cap-mib", "16"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("spin-bath-22"));
}
