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


//! The bundled example programs.
//!
//! `cargo run -p spinqc --example gen_corpus` writes them below
//! `crates/spinqc/programs`. A test checks that the files on disk equal
//! what this module generates.

use std::f64::consts::FRAC_PI_2;

use spinqc_core::algorithms::{
    adder3_program, grover_program, permutation_cycle_length, permutation_order_program, qft_program, shor15_program,
};
use spinqc_core::gates::{cnot_sequence, toffoli_sequence};
use spinqc_core::pulse::{cnot_steps, grover_nmr_steps, microinstructions, NmrStep, TwoPiKParams};
use spinqc_core::{Axis, GateProgram, C64};

use crate::program::{Init, Program};

/// Published two-qubit results of the NMR emulation, `(Q1z, Q2z)`.
pub mod tables {
    /// Pulse labels of the physical columns.
    pub const S_VALUES: [u64; 4] = [8, 16, 32, 64];

    /// Initial states of the CNOT rows: basis indices 0..3, then the singlet.
    pub const CNOT_INITS: [&str; 5] = ["00", "01", "10", "11", "singlet"];

    /// `[variant][init]` ideal values.
    pub const CNOT_IDEAL: [[(f64, f64); 5]; 3] = [[(0.0, 0.0), (1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]; 3];

    /// `[variant][init][s]` for `s` in [`S_VALUES`]; five CNOTs, and a final
    /// `Y1` for the singlet.
    pub const CNOT5: [[[(f64, f64); 4]; 5]; 3] = [
        [
            [(0.00, 0.00), (0.00, 0.00), (0.00, 0.00), (0.00, 0.00)],
            [(1.00, 1.00), (1.00, 1.00), (1.00, 1.00), (1.00, 1.00)],
            [(0.00, 1.00), (0.00, 1.00), (0.00, 1.00), (0.00, 1.00)],
            [(1.00, 0.00), (1.00, 0.00), (1.00, 0.00), (1.00, 0.00)],
            [(0.90, 1.00), (0.03, 1.00), (0.58, 1.00), (0.88, 1.00)],
        ],
        [
            [(0.24, 0.76), (0.50, 0.26), (0.20, 0.07), (0.06, 0.02)],
            [(0.76, 0.24), (0.50, 0.74), (0.80, 0.93), (0.95, 0.98)],
            [(0.24, 0.24), (0.51, 0.74), (0.20, 0.93), (0.06, 0.98)],
            [(0.76, 0.76), (0.50, 0.26), (0.80, 0.07), (0.95, 0.02)],
            [(0.98, 0.24), (0.95, 0.74), (0.98, 0.93), (0.99, 0.98)],
        ],
        [
            [(0.23, 0.76), (0.50, 0.26), (0.20, 0.07), (0.06, 0.02)],
            [(0.77, 0.24), (0.50, 0.74), (0.80, 0.93), (0.95, 0.98)],
            [(0.23, 0.24), (0.51, 0.74), (0.20, 0.93), (0.06, 0.98)],
            [(0.77, 0.76), (0.50, 0.26), (0.80, 0.07), (0.95, 0.02)],
            [(0.79, 0.24), (0.55, 0.74), (0.82, 0.93), (0.95, 0.98)],
        ],
    ];

    pub const GROVER_IDEAL: [(f64, f64); 4] = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)];

    /// `[item][s]` for `s` in [`S_VALUES`].
    pub const GROVER: [[(f64, f64); 4]; 4] = [
        [(0.48, 0.53), (0.15, 0.16), (0.04, 0.04), (0.01, 0.01)],
        [(0.52, 0.50), (0.85, 0.15), (0.96, 0.04), (0.99, 0.01)],
        [(0.55, 0.48), (0.15, 0.84), (0.04, 0.96), (0.01, 0.99)],
        [(0.45, 0.50), (0.85, 0.85), (0.96, 0.96), (0.99, 0.99)],
    ];

    /// Half a unit of the last printed digit, plus rounding slack.
    pub const TABLE_TOL: f64 = 0.01;
}

/// Pulse labels of the expanded microinstruction programs.
pub const MICRO_S: [u64; 5] = [8, 16, 32, 64, 256];

/// Default `s` of the symbolic NMR programs.
pub const NMR_DEFAULT_S: u64 = 64;

/// Tolerance of the asserts in exact gate programs.
pub const EXACT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum Kind {
    /// Exact gates, for the ideal backend.
    Gate,
    /// `nmr` steps, expanded at run time.
    Nmr,
    /// Microinstructions expanded at this `s`.
    Micro(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    /// Path below the corpus root.
    pub path: String,
    pub kind: Kind,
    pub program: Program,
}

fn from_gates(g: &GateProgram, init: usize) -> Program {
    let mut p = Program::new(g.num_qubits).with_init(Init::Basis(init));
    p.gates(&g.ops);
    p
}

fn assert_qz(p: &mut Program, values: &[(usize, f64)], tol: f64) {
    for &(q, v) in values {
        p.assert(Axis::Z, q, v, tol);
    }
}

fn singlet() -> Init {
    let h = (0.5f64).sqrt();
    Init::Amplitudes(vec![(1, C64::new(h, 0.0)), (2, C64::new(-h, 0.0))])
}

fn cnot_init(i: usize) -> Init {
    if i < 4 {
        Init::Basis(i)
    } else {
        singlet()
    }
}

/// `Q^z` of period-register bit `b` sits on qubit `width - b` after a QFT
/// without swaps.
fn period_program(m: usize, triplet: [f64; 3]) -> Program {
    let width = 3;
    let fwidth = (usize::BITS - (m - 1).leading_zeros()).max(1) as usize;
    let total = width + fwidth;
    let amp = 1.0 / (8.0f64).sqrt();
    let amps = (0..8).map(|x| (x | (x % m) << width, C64::new(amp, 0.0))).collect();
    let reg: Vec<usize> = (1..=width).collect();
    let mut p = Program::new(total).with_init(Init::Amplitudes(amps));
    p.gates(&qft_program(total, &reg, false).expect("valid register").ops);
    p.expect(Some("register"));
    assert_qz(&mut p, &[(3, triplet[0]), (2, triplet[1]), (1, triplet[2])], EXACT_TOL);
    p
}

/// `Q^z` triplets of the three-qubit period register for `M = 1..4`.
pub const PERIOD_TRIPLETS: [[f64; 3]; 4] = [[0.0, 0.0, 0.0], [0.0, 0.0, 0.5], [0.5, 0.375, 0.34375], [0.0, 0.5, 0.5]];

pub fn gate_programs() -> Vec<Entry> {
    let mut out = Vec::new();
    let mut push = |path: String, program: Program| out.push(Entry { path, kind: Kind::Gate, program });

    let cnot = cnot_sequence(2, 1, 2).expect("two qubits");
    for i in 0..4usize {
        let mut p = from_gates(&cnot, i);
        let (c, t) = (i & 1, (i >> 1) & 1);
        assert_qz(&mut p, &[(1, c as f64), (2, (t ^ c) as f64)], EXACT_TOL);
        push(format!("gates/cnot-{}{}.qp", t, c), p);
    }

    let tof = toffoli_sequence(3, 1, 2, 3).expect("three qubits");
    let mut p = from_gates(&tof, 0b011);
    assert_qz(&mut p, &[(1, 1.0), (2, 1.0), (3, 1.0)], EXACT_TOL);
    push("gates/toffoli-011.qp".into(), p);

    let mut p = from_gates(&qft_program(3, &[1, 2, 3], true).expect("three qubits"), 0);
    assert_qz(&mut p, &[(1, 0.5), (2, 0.5), (3, 0.5)], EXACT_TOL);
    push("gates/qft3.qp".into(), p);

    for (k, t) in PERIOD_TRIPLETS.iter().enumerate() {
        push(format!("gates/period-m{}.qp", k + 1), period_program(k + 1, *t));
    }

    for j in 0..4 {
        let mut p = from_gates(&grover_program(j).expect("item"), 0);
        let (q1, q2) = tables::GROVER_IDEAL[j];
        assert_qz(&mut p, &[(1, q1), (2, q2)], EXACT_TOL);
        push(format!("gates/grover{j}.qp"), p);
    }

    let perm = [0, 3, 2, 1];
    let mut p = from_gates(&permutation_order_program(&perm, 1).expect("permutation"), 0);
    let r = permutation_cycle_length(&perm, 1).expect("permutation");
    assert_qz(&mut p, &[(3, PERIOD_TRIPLETS[r - 1][0]), (2, PERIOD_TRIPLETS[r - 1][1]), (1, PERIOD_TRIPLETS[r - 1][2])], EXACT_TOL);
    push("gates/order-p0213-y1.qp".into(), p);

    for a in [2u64, 4, 7, 8, 11, 13, 14] {
        let mut p = from_gates(&shor15_program(a).expect("valid base"), 0);
        let m = (1..=4).find(|&k| (a.pow(k) % 15) == 1).expect("order divides 4") as usize;
        let t = PERIOD_TRIPLETS[m - 1];
        assert_qz(&mut p, &[(3, t[0]), (2, t[1]), (1, t[2])], EXACT_TOL);
        push(format!("gates/shor15-a{a}.qp"), p);
    }

    for (r1, r2, r3) in [(1u8, 2u8, 3u8), (1, 1, 1), (9, 9, 9)] {
        let mut p = from_gates(&adder3_program(r1, r2, r3).expect("4-bit inputs"), 0);
        let sum = (r1 as usize + r2 as usize + r3 as usize) % 16;
        let vals: Vec<(usize, f64)> = (0..4).map(|b| (9 + b, ((sum >> b) & 1) as f64)).collect();
        assert_qz(&mut p, &vals, EXACT_TOL);
        push(format!("gates/adder-{r1}-{r2}-{r3}.qp"), p);
    }
    out
}

/// The step list of a CNOT table row: five CNOTs, plus `Y1` for the
/// singlet.
pub fn cnot5_steps(variant: usize, init: usize) -> Vec<NmrStep> {
    let one = cnot_steps(variant).expect("variant 1..3");
    let mut steps: Vec<NmrStep> = (0..5).flat_map(|_| one.iter().copied()).collect();
    if init == 4 {
        steps.push(NmrStep::y(1, FRAC_PI_2));
    }
    steps
}

fn cnot_name(variant: usize, init: usize) -> String {
    format!("cnot{variant}-{}", tables::CNOT_INITS[init])
}

pub fn nmr_programs() -> Vec<Entry> {
    let mut out = Vec::new();
    for v in 1..=3 {
        for i in 0..5 {
            let mut p = Program::new(2).with_init(cnot_init(i));
            p.s = Some(NMR_DEFAULT_S);
            p.nmr(&cnot5_steps(v, i));
            out.push(Entry {
                path: format!("nmr/{}-nmr.qp", cnot_name(v, i)),
                kind: Kind::Nmr,
                program: p,
            });
        }
    }
    for j in 0..4 {
        let mut p = Program::new(2);
        p.s = Some(NMR_DEFAULT_S);
        p.nmr(&grover_nmr_steps(j).expect("item"));
        out.push(Entry {
            path: format!("nmr/grover{j}-nmr.qp"),
            kind: Kind::Nmr,
            program: p,
        });
    }
    out
}

fn expanded(steps: &[NmrStep], init: Init, s: u64) -> Program {
    let params = TwoPiKParams::from_s(s).expect("multiple of 8");
    let mut p = Program::new(2).with_init(init);
    p.micros(microinstructions(steps, &params).expect("valid pulses"));
    p
}

pub fn micro_programs() -> Vec<Entry> {
    let mut out = Vec::new();
    for s in MICRO_S {
        let col = tables::S_VALUES.iter().position(|&x| x == s);
        for v in 1..=3 {
            for i in 0..5 {
                let mut p = expanded(&cnot5_steps(v, i), cnot_init(i), s);
                if let Some(c) = col {
                    let (q1, q2) = tables::CNOT5[v - 1][i][c];
                    assert_qz(&mut p, &[(1, q1), (2, q2)], tables::TABLE_TOL);
                }
                out.push(Entry {
                    path: format!("micro/{}-s{s}.qp", cnot_name(v, i)),
                    kind: Kind::Micro(s),
                    program: p,
                });
            }
        }
        for j in 0..4 {
            let mut p = expanded(&grover_nmr_steps(j).expect("item"), Init::Basis(0), s);
            let (q1, q2) = match col {
                Some(c) => tables::GROVER[j][c],
                None => tables::GROVER_IDEAL[j],
            };
            assert_qz(&mut p, &[(1, q1), (2, q2)], tables::TABLE_TOL);
            out.push(Entry {
                path: format!("micro/grover{j}-s{s}.qp"),
                kind: Kind::Micro(s),
                program: p,
            });
        }
    }
    out
}

impl Entry {
    /// File contents: a comment line, then the serialized program.
    pub fn file_text(&self) -> String {
        let what = match self.kind {
            Kind::Gate => "exact gates; run with --backend ideal".to_string(),
            Kind::Nmr => format!("NMR pulses; any backend, expanded at --s (default {NMR_DEFAULT_S})"),
            Kind::Micro(s) => format!("NMR pulses expanded at s = {s}; run with a physical backend"),
        };
        format!("# {}: {what}\n{}", self.path, self.program.to_text())
    }
}

pub fn all() -> Vec<Entry> {
    let mut v = gate_programs();
    v.extend(nmr_programs());
    v.extend(micro_programs());
    v
}
