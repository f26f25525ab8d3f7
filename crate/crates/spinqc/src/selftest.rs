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


//! Quick invariant checks run by `spinqc --selftest`.

use std::f64::consts::{FRAC_PI_2, PI};

use spinqc_core::algorithms::{grover_program, period_closed_form, period_find, qft_program};
use spinqc_core::dense::DenseMatrix;
use spinqc_core::gates::{cnot_sequence, run};
use spinqc_core::hamiltonian::build_ising;
use spinqc_core::propagators::Propagator;
use spinqc_core::pulse::{design_pulse, TwoPiKParams};
use spinqc_core::{cis, Axis, Backend, PropagatorConfig, StateVector};

use crate::corpus;
use crate::program::parse_program;
use crate::runner::{run_program, RunConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, value: f64, limit: f64) -> Check {
    Check {
        name,
        pass: value <= limit,
        detail: format!("{value:.3e} <= {limit:.0e}"),
    }
}

fn cnot_truth_table() -> f64 {
    let p = cnot_sequence(2, 1, 2).expect("two qubits");
    let mut worst = 0.0f64;
    for i in 0..4 {
        let mut s = StateVector::basis_state(2, i).expect("basis");
        run(&mut s, &p).expect("valid program");
        let j = i ^ ((i & 1) << 1);
        worst = worst.max(1.0 - s.amplitudes()[j].norm_sqr());
    }
    worst
}

fn qft_vs_dft() -> f64 {
    let u = qft_program(3, &[1, 2, 3], true).and_then(|p| p.unitary()).expect("three qubits");
    let dft = DenseMatrix::from_fn(8, |j, k| cis(2.0 * PI * ((j * k) % 8) as f64 / 8.0) / (8.0f64).sqrt());
    u.max_diff(&dft)
}

fn period_vs_closed_form() -> f64 {
    (1..=8)
        .map(|m| {
            let a = period_find(m, 8).expect("valid period");
            let b = period_closed_form(m, 8).expect("valid period");
            a.max_diff(&b)
        })
        .fold(0.0, f64::max)
}

fn grover_ideal() -> f64 {
    (0..4)
        .map(|j| {
            let mut s = StateVector::basis_state(2, 0).expect("basis");
            run(&mut s, &grover_program(j).expect("item")).expect("valid program");
            1.0 - s.amplitudes()[j].norm_sqr()
        })
        .fold(0.0, f64::max)
}

/// `s = 8`: the spin-1 pulse lasts `2 pi * 8`, so a `pi/2` rotation needs
/// amplitude `1/32`.
fn pulse_amplitude() -> f64 {
    let p = TwoPiKParams::from_s(8).expect("s = 8");
    let x = design_pulse(&p, 1, Axis::X, FRAC_PI_2).expect("valid pulse");
    (x.amp_x[0].abs() - 1.0 / 32.0).abs()
}

fn norm_drift() -> f64 {
    let model = build_ising(
        4,
        &[(1, 2, 0.7), (2, 3, -0.4), (3, 4, 0.9), (1, 4, 0.2)],
        &[(1, [0.3, -0.2, 0.5]), (2, [0.1, 0.4, -0.6]), (3, [-0.8, 0.0, 0.2]), (4, [0.5, 0.5, 0.5])],
    )
    .expect("valid model");
    let mut worst = 0.0f64;
    for b in Backend::ALL {
        let mut p = Propagator::new(PropagatorConfig::with_backend(b)).expect("default config");
        let mut s = StateVector::basis_state(4, 5).expect("basis");
        for _ in 0..200 {
            p.evolve(&mut s, &model, 0.0, 0.05).expect("evolve");
        }
        worst = worst.max((s.norm() - 1.0).abs());
    }
    worst
}

fn corpus_round_trip() -> Check {
    let mut bad = Vec::new();
    for e in corpus::gate_programs() {
        let text = e.program.to_text();
        let ok = parse_program(&text).map(|p| p == e.program).unwrap_or(false)
            && run_program(&e.program, &RunConfig::default()).map(|r| r.all_passed()).unwrap_or(false);
        if !ok {
            bad.push(e.path);
        }
    }
    Check {
        name: "gate corpus parses back and passes its asserts",
        pass: bad.is_empty(),
        detail: if bad.is_empty() { "all".into() } else { bad.join(", ") },
    }
}

pub fn run_all() -> Vec<Check> {
    vec![
        check("CNOT truth table", cnot_truth_table(), 1e-12),
        check("QFT equals DFT (3 qubits)", qft_vs_dft(), 1e-12),
        check("period circuit equals closed form (N=8)", period_vs_closed_form(), 1e-10),
        check("Grover finds every item", grover_ideal(), 1e-10),
        check("pi/2 pulse amplitude at s=8", pulse_amplitude(), 1e-15),
        check("norm drift over 200 steps, all backends", norm_drift(), 1e-10),
        corpus_round_trip(),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn selftest_passes() {
        for c in super::run_all() {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
    }
}
