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


//! Text renderings of a [`RunReport`].
//!
//! * `table`: expectation values rounded to two digits, as in printed
//!   result tables.
//! * `csv`: columns `checkpoint,qubit,qx,qy,qz` at full precision.
//! * `json-lines`: one JSON object per line, each with a `type` field
//!   (`config`, `expectation`, `assertion`, `amplitude`, `timing`).

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;

use crate::runner::RunReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    JsonLines,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json-lines" | "jsonl" => Ok(Format::JsonLines),
            _ => Err(format!("unknown format `{s}` (table, csv or json-lines)")),
        }
    }
}

/// Two decimals, without a negative zero.
pub fn two_digits(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn full(v: f64) -> String {
    format!("{v:.15e}")
}

fn bits(i: usize, n: usize) -> String {
    format!("{:0width$b}", i, width = n)
}

pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Table => table(report),
        Format::Csv => csv(report),
        Format::JsonLines => json_lines(report),
    }
}

fn table(r: &RunReport) -> String {
    let mut out = String::new();
    for (k, v) in &r.config {
        let _ = writeln!(out, "# {k:<14} {v}");
    }
    let w = r.checkpoints.iter().map(|c| c.label.len()).max().unwrap_or(0).max(10);
    let _ = writeln!(out, "{:<w$}  qubit    Qx    Qy    Qz", "checkpoint");
    for c in &r.checkpoints {
        for (j, e) in c.expectations.iter().enumerate() {
            let _ = writeln!(
                out,
                "{:<w$}  {:>5}  {:>4}  {:>4}  {:>4}",
                c.label,
                j + 1,
                two_digits(e.qx),
                two_digits(e.qy),
                two_digits(e.qz)
            );
        }
    }
    if !r.assertions.is_empty() {
        out.push('\n');
        for a in &r.assertions {
            let s = &a.assertion;
            let _ = writeln!(
                out,
                "assert q{} {} = {:.6} (expected {} tol {:e}) {}",
                s.axis.name().to_ascii_lowercase(),
                s.qubit,
                a.actual,
                s.value,
                s.tol,
                if a.pass { "PASS" } else { "FAIL" }
            );
        }
    }
    if let Some(amps) = &r.amplitudes {
        out.push_str("\nindex  state  re  im\n");
        for (i, a) in amps.iter().enumerate() {
            let _ = writeln!(out, "{i}  {}  {}  {}", bits(i, r.num_qubits), full(a.re), full(a.im));
        }
    }
    out.push('\n');
    for (k, t) in &r.timings {
        let _ = writeln!(out, "# time {k:<9} {t:.3} s");
    }
    out
}

fn csv(r: &RunReport) -> String {
    let mut out = String::from("checkpoint,qubit,qx,qy,qz\n");
    for c in &r.checkpoints {
        for (j, e) in c.expectations.iter().enumerate() {
            let _ = writeln!(out, "{},{},{},{},{}", c.label, j + 1, full(e.qx), full(e.qy), full(e.qz));
        }
    }
    out
}

fn json_lines(r: &RunReport) -> String {
    let mut lines = Vec::new();
    let cfg: serde_json::Map<String, serde_json::Value> =
        r.config.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    lines.push(json!({"type": "config", "qubits": r.num_qubits, "settings": cfg}));
    for c in &r.checkpoints {
        for (j, e) in c.expectations.iter().enumerate() {
            lines.push(json!({
                "type": "expectation",
                "checkpoint": c.label,
                "qubit": j + 1,
                "qx": e.qx,
                "qy": e.qy,
                "qz": e.qz,
            }));
        }
    }
    for a in &r.assertions {
        lines.push(json!({
            "type": "assertion",
            "axis": a.assertion.axis.name(),
            "qubit": a.assertion.qubit,
            "expected": a.assertion.value,
            "tol": a.assertion.tol,
            "actual": a.actual,
            "pass": a.pass,
        }));
    }
    if let Some(amps) = &r.amplitudes {
        for (i, a) in amps.iter().enumerate() {
            lines.push(json!({"type": "amplitude", "index": i, "re": a.re, "im": a.im}));
        }
    }
    for (k, t) in &r.timings {
        lines.push(json!({"type": "timing", "phase": k, "seconds": t}));
    }
    let mut out = String::new();
    for l in lines {
        out.push_str(&l.to_string());
        out.push('\n');
    }
    out
}
