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


use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;

use spinqc::bench::{self, BenchConfig, Outcome};
use spinqc::report::{self, Format};
use spinqc::{parse_program, run_program, selftest, RunBackend, RunConfig};
use spinqc_core::PropagatorConfig;

/// Above this many qubits a warning about memory is printed.
const LARGE_REGISTER: usize = 26;

#[derive(Parser, Debug)]
#[command(name = "spinqc", version, about = "Simulate gate and microinstruction programs on spin-1/2 quantum computers")]
struct Args {
    /// Program file to run.
    #[arg(long, value_name = "FILE", required_unless_present_any = ["selftest", "bench"])]
    program: Option<std::path::PathBuf>,

    /// ideal, diag, chebyshev, lanczos, st2-pair, st4-pair, st2-xyz or st4-xyz.
    #[arg(long, default_value = "ideal", value_parser = parse_backend)]
    backend: RunBackend,

    /// Time step divided by 2 pi.
    #[arg(long, default_value_t = 0.01)]
    dt: f64,

    #[arg(long, default_value_t = spinqc_core::propagators::DEFAULT_ORDER)]
    lanczos_order: usize,

    /// Chebyshev truncation threshold.
    #[arg(long, default_value_t = spinqc_core::propagators::DEFAULT_KAPPA)]
    cheb_kappa: f64,

    /// Pulse label for nmr steps (a positive multiple of 8, e.g. 8, 16, 32, 64, 256).
    #[arg(long, value_parser = parse_s)]
    s: Option<u64>,

    /// Seed for the random spin-bath model and state.
    #[arg(long, default_value_t = spinqc_core::rng::DEFAULT_SEED)]
    seed: u64,

    /// Print the final amplitudes.
    #[arg(long)]
    dump_amplitudes: bool,

    /// table, csv or json-lines.
    #[arg(long, default_value = "table")]
    format: Format,

    /// Worker threads for the amplitude kernels (default: all cores).
    #[arg(long)]
    workers: Option<usize>,

    /// Run the built-in invariant checks.
    #[arg(long)]
    selftest: bool,

    /// Compare all backends on a spin-bath preset: spin-bath-10, -12, -18 or -22.
    #[arg(long, value_name = "PRESET")]
    bench: Option<String>,

    /// Memory cap for --bench, in MiB.
    #[arg(long, default_value_t = 4096)]
    mem_cap_mib: u64,
}

fn parse_backend(s: &str) -> Result<RunBackend, String> {
    RunBackend::from_name(s).ok_or_else(|| format!("unknown backend `{s}` (one of {})", RunBackend::names().join(", ")))
}

fn parse_s(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(v) if v > 0 && v % 8 == 0 => Ok(v),
        _ => Err(format!("s must be a positive multiple of 8, got `{s}`")),
    }
}

fn propagator_config(a: &Args) -> PropagatorConfig {
    PropagatorConfig {
        dt_over_2pi: a.dt,
        lanczos_order: a.lanczos_order,
        cheb_kappa: a.cheb_kappa,
        ..Default::default()
    }
}

fn run_selftest() -> ExitCode {
    let checks = selftest::run_all();
    let mut ok = true;
    for c in &checks {
        println!("{} {} ({})", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        ok &= c.pass;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_bench(a: &Args, name: &str) -> ExitCode {
    let Some(preset) = bench::preset(name) else {
        let names: Vec<&str> = bench::PRESETS.iter().map(|p| p.name).collect();
        eprintln!("error: unknown preset `{name}` (one of {})", names.join(", "));
        return ExitCode::from(2);
    };
    let cfg = BenchConfig {
        seed: a.seed,
        propagator: propagator_config(a),
        mem_cap_bytes: a.mem_cap_mib.saturating_mul(1 << 20),
        ..Default::default()
    };
    if let Err(e) = cfg.propagator.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let r = match bench::run_bench(preset, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {name}: {e}");
            return ExitCode::from(2);
        }
    };
    match a.format {
        Format::Table => print!("{}", bench::format_table(&r)),
        Format::Csv => {
            println!("backend,error,seconds");
            for row in &r.rows {
                let e = match &row.outcome {
                    Outcome::Reference => "reference".to_string(),
                    Outcome::Error(e) => format!("{e:.15e}"),
                    Outcome::Refused(_) => "refused".to_string(),
                };
                println!("{},{},{}", row.backend.name(), e, row.seconds);
            }
        }
        Format::JsonLines => {
            for row in &r.rows {
                let (kind, err) = match &row.outcome {
                    Outcome::Reference => ("reference", None),
                    Outcome::Error(e) => ("error", Some(*e)),
                    Outcome::Refused(_) => ("refused", None),
                };
                println!(
                    "{}",
                    json!({"type": "bench", "preset": preset.name, "seed": r.seed, "backend": row.backend.name(),
                           "outcome": kind, "error": err, "seconds": row.seconds})
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let a = Args::parse();
    if let Some(n) = a.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    if a.selftest {
        return run_selftest();
    }
    if let Some(name) = a.bench.clone() {
        return run_bench(&a, &name);
    }
    let path = a.program.as_ref().expect("required by clap");
    let t0 = Instant::now();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let program = match parse_program(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let parse_secs = t0.elapsed().as_secs_f64();
    if program.num_qubits > LARGE_REGISTER {
        eprintln!(
            "warning: {} qubits need {} MiB per state vector",
            program.num_qubits,
            (16u64 << program.num_qubits) >> 20
        );
    }
    let cfg = RunConfig {
        backend: a.backend,
        propagator: propagator_config(&a),
        s: a.s,
        dump_amplitudes: a.dump_amplitudes,
    };
    let mut report = match run_program(&program, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    report.timings.insert(0, ("parse".into(), parse_secs));
    if a.format == Format::Csv && a.dump_amplitudes {
        eprintln!("note: csv output carries expectation values only; use json-lines or table for amplitudes");
    }
    print!("{}", report::render(&report, a.format));
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        let failed = report.assertions.iter().filter(|x| !x.pass).count();
        eprintln!("{failed} assertion(s) failed");
        ExitCode::FAILURE
    }
}
