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


//! Public-API tests against independent dense oracles.

use std::f64::consts::PI;

use proptest::prelude::*;
use spinqc_core::algorithms::{period_closed_form, period_find, qft_program};
use spinqc_core::dense::DenseMatrix;
use spinqc_core::eigen::hermitian_eigen;
use spinqc_core::gates::{run, GateProgram};
use spinqc_core::pulse::{cnot_steps, ideal_program, microinstructions, TwoPiKParams};
use spinqc_core::{Axis, Backend, FieldTerm, GateKind, PropagatorConfig, SpinModel, StateVector, C64};

fn dense_h(model: &SpinModel) -> DenseMatrix {
    let n = model.num_spins();
    let cols: Vec<Vec<C64>> = (0..1 << n)
        .map(|i| model.apply_h(&StateVector::basis_state(n, i).unwrap(), 0.0).unwrap().into_amplitudes())
        .collect();
    DenseMatrix::from_columns(&cols)
}

fn static_model(l: usize, values: &[f64]) -> SpinModel {
    let mut m = SpinModel::new(l).unwrap();
    let mut it = values.iter().copied();
    for j in 1..=l {
        for axis in Axis::ALL {
            m.set_field(j, axis, FieldTerm::constant(it.next().unwrap())).unwrap();
        }
    }
    for j in 1..l {
        for axis in Axis::ALL {
            m.set_coupling(j, j + 1, axis, it.next().unwrap()).unwrap();
        }
    }
    m
}

#[test]
fn qft_with_swaps_is_the_dft() {
    let n = 8;
    let u = qft_program(3, &[1, 2, 3], true).unwrap().unitary().unwrap();
    let dft = DenseMatrix::from_fn(n, |r, c| {
        C64::from_polar(1.0 / (n as f64).sqrt(), 2.0 * PI * (r * c) as f64 / n as f64)
    });
    assert!(u.max_diff(&dft) < 1e-12);
}

#[test]
fn period_finding_matches_closed_form_for_sixteen_points() {
    for m in 1..=16 {
        let sim = period_find(m, 16).unwrap();
        let closed = period_closed_form(m, 16).unwrap();
        assert!(sim.max_diff(&closed) < 1e-10, "M = {m}");
        assert!((sim.probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn hamiltonian_is_hermitian_and_eigen_reconstructs_it() {
    let vals: Vec<f64> = (0..15).map(|k| ((k * 7 % 11) as f64 - 5.0) / 5.0).collect();
    let h = dense_h(&static_model(3, &vals));
    assert!(h.max_diff(&h.dagger()) < 1e-14);
    let e = hermitian_eigen(&h).unwrap();
    let v = e.vectors();
    let lambda = DenseMatrix::from_fn(8, |r, c| C64::new(if r == c { e.values[r] } else { 0.0 }, 0.0));
    assert!(v.mul(&lambda).mul(&v.dagger()).max_diff(&h) < 1e-12);
}

#[test]
fn pulses_implement_the_ideal_cnot_at_large_s() {
    let steps = cnot_steps(1).unwrap();
    let ideal = ideal_program(&steps);
    let cfg = PropagatorConfig::with_backend(Backend::St4Pair);
    for i in 0..4 {
        let mut want = StateVector::basis_state(2, i).unwrap();
        run(&mut want, &ideal).unwrap();
        let mut got = StateVector::basis_state(2, i).unwrap();
        let mut p = spinqc_core::propagators::Propagator::new(cfg).unwrap();
        for m in microinstructions(&steps, &TwoPiKParams::from_s(64).unwrap()).unwrap() {
            p.run_micro(&mut got, &m).unwrap();
        }
        assert!(got.fidelity(&want).unwrap() > 0.99, "basis {i}");
    }
}

fn gate_kind() -> impl Strategy<Value = (GateKind, usize)> {
    let angle = -7.0..7.0f64;
    prop_oneof![
        Just((GateKind::X, 1)),
        Just((GateKind::Ybar, 1)),
        Just((GateKind::Hadamard, 1)),
        angle.clone().prop_map(|a| (GateKind::Rphase(a), 1)),
        angle.clone().prop_map(|a| (GateKind::Rotation(Axis::Y, a), 1)),
        angle.clone().prop_map(|a| (GateKind::CtrlPhase(a), 2)),
        angle.prop_map(|a| (GateKind::ZzPhase(a), 2)),
        Just((GateKind::Cnot, 2)),
        Just((GateKind::Swap, 2)),
        Just((GateKind::Toffoli, 3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn program_is_unitary_and_inverse_undoes_it(
        ops in prop::collection::vec((gate_kind(), Just([1usize, 2, 3, 4]).prop_shuffle()), 1..20)
    ) {
        let mut p = GateProgram::new(4);
        for ((kind, arity), targets) in &ops {
            p.push(*kind, &targets[..*arity]).unwrap();
        }
        let u = p.unitary().unwrap();
        prop_assert!(u.mul(&u.dagger()).max_diff(&DenseMatrix::identity(16)) < 1e-12);
        let round = p.inverse().unitary().unwrap().mul(&u);
        prop_assert!(round.max_diff(&DenseMatrix::identity(16)) < 1e-12);
    }

    #[test]
    fn exact_backends_match_dense_exponential(
        vals in prop::collection::vec(-1.0..1.0f64, 15),
        t in 0.05..2.0f64,
        start in 0usize..8,
    ) {
        let model = static_model(3, &vals);
        let u = dense_h(&model).scale(C64::new(0.0, -t)).expm();
        let want: Vec<C64> = (0..8).map(|r| u.get(r, start)).collect();
        for b in [Backend::Diag, Backend::Chebyshev, Backend::Lanczos] {
            let cfg = PropagatorConfig { backend: b, dt_over_2pi: 0.01, lanczos_order: 10, ..Default::default() };
            let mut psi = StateVector::basis_state(3, start).unwrap();
            spinqc_core::propagators::evolve(&mut psi, &model, 0.0, t, &cfg).unwrap();
            let d = psi.amplitudes().iter().zip(&want).fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
            prop_assert!(d < 1e-9, "{}: {}", b.name(), d);
        }
    }
}
