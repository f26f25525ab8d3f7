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

//! Ideal gates, their matrices, and the standard decompositions.
//!
//! Angles are radians. Rotations follow the convention that `X` and `Y` are
//! rotations of the spin by `pi/2` about the x and y axes, with positive
//! angles turning clockwise: `X = exp(i pi S^x / 2)`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::dense::{mat2_dagger, mat4_dagger, DenseMatrix};
use crate::state::{bit_of, Axis, StateVector};
use crate::{c64, cis, Error, Mat2, Mat4, Result, C64};

/// The kind of an ideal gate, with its angle where it has one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    /// `pi/2` rotation about x.
    X,
    Xbar,
    /// `pi/2` rotation about y.
    Y,
    Ybar,
    /// `diag(1, e^{i phi})` on one qubit.
    Rphase(f64),
    /// `diag(1, 1, 1, e^{i phi})` on two qubits.
    CtrlPhase(f64),
    /// `e^{-i phi/4} diag(1, 1, 1, e^{i phi})`.
    IsingPhase(f64),
    /// `exp(-i theta S^z S^z)` on two qubits.
    ZzPhase(f64),
    /// `exp(i theta S^axis)` on one qubit.
    Rotation(Axis, f64),
    /// Multiplies the whole state by `e^{i theta}`.
    GlobalPhase(f64),
    /// Targets are `(control, target)`.
    Cnot,
    Hadamard,
    Swap,
    /// Targets are `(control, control, target)`.
    Toffoli,
    Not,
    Custom1q(Mat2),
    /// Row/column order `(bit_k bit_j)` for targets `(j, k)`.
    Custom2q(Mat4),
}

impl GateKind {
    /// Number of qubits the gate acts on.
    pub fn arity(&self) -> usize {
        use GateKind::*;
        match self {
            GlobalPhase(_) => 0,
            X | Xbar | Y | Ybar | Rphase(_) | Rotation(..) | Hadamard | Not | Custom1q(_) => 1,
            CtrlPhase(_) | IsingPhase(_) | ZzPhase(_) | Cnot | Swap | Custom2q(_) => 2,
            Toffoli => 3,
        }
    }

    /// Canonical upper-case name as used in program files.
    pub fn name(&self) -> &'static str {
        use GateKind::*;
        match self {
            X => "X",
            Xbar => "XBAR",
            Y => "Y",
            Ybar => "YBAR",
            Rphase(_) => "R",
            CtrlPhase(_) => "CP",
            IsingPhase(_) => "I",
            ZzPhase(_) => "ZZ",
            Rotation(Axis::X, _) => "RX",
            Rotation(Axis::Y, _) => "RY",
            Rotation(Axis::Z, _) => "RZ",
            GlobalPhase(_) => "PHASE",
            Cnot => "CNOT",
            Hadamard => "W",
            Swap => "SWAP",
            Toffoli => "TOFFOLI",
            Not => "NOT",
            Custom1q(_) => "U1",
            Custom2q(_) => "U2",
        }
    }

    pub fn angle(&self) -> Option<f64> {
        use GateKind::*;
        match *self {
            Rphase(a) | CtrlPhase(a) | IsingPhase(a) | ZzPhase(a) | Rotation(_, a) | GlobalPhase(a) => Some(a),
            _ => None,
        }
    }

    /// The 2×2 matrix of a one-qubit gate.
    pub fn matrix1(&self) -> Option<Mat2> {
        use GateKind::*;
        let s = FRAC_1_SQRT_2;
        let z = c64(0.0, 0.0);
        let one = c64(1.0, 0.0);
        Some(match *self {
            X => [[c64(s, 0.0), c64(0.0, s)], [c64(0.0, s), c64(s, 0.0)]],
            Xbar => mat2_dagger(&X.matrix1()?),
            Y => [[c64(s, 0.0), c64(s, 0.0)], [c64(-s, 0.0), c64(s, 0.0)]],
            Ybar => mat2_dagger(&Y.matrix1()?),
            Rphase(phi) => [[one, z], [z, cis(phi)]],
            Rotation(axis, theta) => rotation(axis, theta),
            Hadamard => [[c64(s, 0.0), c64(s, 0.0)], [c64(s, 0.0), c64(-s, 0.0)]],
            Not => [[z, one], [one, z]],
            Custom1q(u) => u,
            _ => return None,
        })
    }

    /// The 4×4 matrix of a two-qubit gate in `(bit_k bit_j)` order for
    /// targets `(j, k)`.
    pub fn matrix2(&self) -> Option<Mat4> {
        use GateKind::*;
        let z = c64(0.0, 0.0);
        let one = c64(1.0, 0.0);
        let diag = |d: [C64; 4]| {
            let mut m = [[z; 4]; 4];
            for i in 0..4 {
                m[i][i] = d[i];
            }
            m
        };
        Some(match *self {
            CtrlPhase(phi) => diag([one, one, one, cis(phi)]),
            IsingPhase(phi) => {
                let a = cis(-phi / 4.0);
                diag([a, a, a, cis(3.0 * phi / 4.0)])
            }
            ZzPhase(theta) => {
                let a = cis(-theta / 4.0);
                let b = cis(theta / 4.0);
                diag([a, b, b, a])
            }
            // Control is the first target (bit_j); the target bit flips.
            Cnot => [
                [one, z, z, z],
                [z, z, z, one],
                [z, z, one, z],
                [z, one, z, z],
            ],
            Swap => [
                [one, z, z, z],
                [z, z, one, z],
                [z, one, z, z],
                [z, z, z, one],
            ],
            Custom2q(u) => u,
            _ => return None,
        })
    }

    /// The kind whose matrix is the Hermitian conjugate of this one.
    pub fn inverse(&self) -> GateKind {
        use GateKind::*;
        match *self {
            X => Xbar,
            Xbar => X,
            Y => Ybar,
            Ybar => Y,
            Rphase(a) => Rphase(-a),
            CtrlPhase(a) => CtrlPhase(-a),
            IsingPhase(a) => IsingPhase(-a),
            ZzPhase(a) => ZzPhase(-a),
            Rotation(ax, a) => Rotation(ax, -a),
            GlobalPhase(a) => GlobalPhase(-a),
            Custom1q(u) => Custom1q(mat2_dagger(&u)),
            Custom2q(u) => Custom2q(mat4_dagger(&u)),
            k @ (Cnot | Hadamard | Swap | Toffoli | Not) => k,
        }
    }
}

/// `exp(i theta S^axis) = cos(theta/2) + i sin(theta/2) sigma^axis`.
pub fn rotation(axis: Axis, theta: f64) -> Mat2 {
    let (c, s) = (libm::cos(theta / 2.0), libm::sin(theta / 2.0));
    match axis {
        Axis::X => [[c64(c, 0.0), c64(0.0, s)], [c64(0.0, s), c64(c, 0.0)]],
        Axis::Y => [[c64(c, 0.0), c64(s, 0.0)], [c64(-s, 0.0), c64(c, 0.0)]],
        Axis::Z => [[c64(c, s), c64(0.0, 0.0)], [c64(0.0, 0.0), c64(c, -s)]],
    }
}

/// A gate with its target qubits (1-based).
#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    pub kind: GateKind,
    pub targets: Vec<usize>,
}

impl GateOp {
    pub fn new(kind: GateKind, targets: &[usize]) -> Self {
        GateOp {
            kind,
            targets: targets.to_vec(),
        }
    }

    pub fn inverse(&self) -> GateOp {
        GateOp {
            kind: self.kind.inverse(),
            targets: self.targets.clone(),
        }
    }

    /// Checks arity, range and distinctness of the targets and finiteness of
    /// the angle.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        if self.targets.len() != self.kind.arity() {
            return Err(Error::Domain("wrong number of targets for gate"));
        }
        for (i, &t) in self.targets.iter().enumerate() {
            bit_of(t, num_qubits)?;
            if self.targets[..i].contains(&t) {
                return Err(Error::SameQubit(t));
            }
        }
        if let Some(a) = self.kind.angle() {
            if !a.is_finite() {
                return Err(Error::Domain("gate angle must be finite"));
            }
        }
        Ok(())
    }

    /// Multiplies the state by the gate's unitary.
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        self.validate(state.num_qubits())?;
        let t = &self.targets;
        match self.kind {
            GateKind::GlobalPhase(theta) => {
                let p = cis(theta);
                state.apply_diagonal(move |_| p);
                Ok(())
            }
            GateKind::Toffoli => {
                let m1 = 1usize << (t[0] - 1);
                let m2 = 1usize << (t[1] - 1);
                let mt = 1usize << (t[2] - 1);
                let amps = state.amplitudes_mut();
                for i in 0..amps.len() {
                    if i & m1 != 0 && i & m2 != 0 && i & mt == 0 {
                        amps.swap(i, i | mt);
                    }
                }
                Ok(())
            }
            GateKind::Custom1q(u) => state.apply_1q_unitary(t[0], &u),
            GateKind::Custom2q(u) => state.apply_2q_unitary(t[0], t[1], &u),
            ref k => {
                if let Some(u) = k.matrix1() {
                    state.apply_1q(t[0], &u)
                } else {
                    let u = k.matrix2().expect("two-qubit kind");
                    state.apply_2q(t[0], t[1], &u)
                }
            }
        }
    }
}

/// Applies `op` to `state`.
pub fn apply(state: &mut StateVector, op: &GateOp) -> Result<()> {
    op.apply(state)
}

/// An ordered sequence of gates on a fixed number of qubits.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GateProgram {
    pub num_qubits: usize,
    pub ops: Vec<GateOp>,
}

impl GateProgram {
    pub fn new(num_qubits: usize) -> Self {
        GateProgram {
            num_qubits,
            ops: Vec::new(),
        }
    }

    /// Appends a validated gate.
    pub fn push(&mut self, kind: GateKind, targets: &[usize]) -> Result<&mut Self> {
        let op = GateOp::new(kind, targets);
        op.validate(self.num_qubits)?;
        self.ops.push(op);
        Ok(self)
    }

    /// Appends all gates of `other`, which must not use more qubits.
    pub fn append(&mut self, other: &GateProgram) -> Result<&mut Self> {
        for op in &other.ops {
            op.validate(self.num_qubits)?;
        }
        self.ops.extend(other.ops.iter().cloned());
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// The program that undoes this one.
    pub fn inverse(&self) -> GateProgram {
        GateProgram {
            num_qubits: self.num_qubits,
            ops: self.ops.iter().rev().map(GateOp::inverse).collect(),
        }
    }

    /// Full unitary, built by running the program on every basis state.
    pub fn unitary(&self) -> Result<DenseMatrix> {
        let dim = 1usize << self.num_qubits;
        let mut cols = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut s = StateVector::basis_state(self.num_qubits, i)?;
            run(&mut s, self)?;
            cols.push(s.into_amplitudes());
        }
        Ok(DenseMatrix::from_columns(&cols))
    }
}

/// Applies every gate of `program` in order.
pub fn run(state: &mut StateVector, program: &GateProgram) -> Result<()> {
    if program.num_qubits != state.num_qubits() {
        return Err(Error::SizeMismatch {
            left: state.num_qubits(),
            right: program.num_qubits,
        });
    }
    for op in &program.ops {
        op.apply(state)?;
    }
    Ok(())
}

fn distinct(q: &[usize]) -> Result<()> {
    for i in 0..q.len() {
        if q[..i].contains(&q[i]) {
            return Err(Error::SameQubit(q[i]));
        }
    }
    Ok(())
}

/// CNOT as `Y_t`, a controlled phase of `pi`, then `Ybar_t`. The product is
/// exactly the CNOT matrix, with no leftover phase.
pub fn cnot_sequence(num_qubits: usize, control: usize, target: usize) -> Result<GateProgram> {
    distinct(&[control, target])?;
    let mut p = GateProgram::new(num_qubits);
    p.push(GateKind::Y, &[target])?
        .push(GateKind::CtrlPhase(PI), &[control, target])?
        .push(GateKind::Ybar, &[target])?;
    Ok(p)
}

/// Toffoli from single-qubit rotations and two-qubit phase gates, equal to
/// the Toffoli gate up to a global phase.
pub fn toffoli_sequence(num_qubits: usize, c1: usize, c2: usize, target: usize) -> Result<GateProgram> {
    use GateKind::*;
    distinct(&[c1, c2, target])?;
    let half = PI / 2.0;
    let mut p = GateProgram::new(num_qubits);
    p.push(Y, &[target])?
        .push(CtrlPhase(-half), &[target, c2])?
        .push(Y, &[c2])?
        .push(IsingPhase(PI), &[c2, c1])?
        .push(Ybar, &[c2])?
        .push(CtrlPhase(half), &[target, c2])?
        .push(Y, &[c2])?
        .push(IsingPhase(PI), &[c2, c1])?
        .push(Ybar, &[c2])?
        .push(CtrlPhase(-half), &[target, c1])?
        .push(Ybar, &[target])?;
    Ok(p)
}

/// Margolus's cheaper Toffoli: CNOTs and `A = exp(i pi S^y / 4)` on the
/// target. When the first control is 1 and the second is 0 the target sees
/// `-2 S^z` instead of the identity; otherwise it is Toffoli.
pub fn toffoli_margolus_sequence(num_qubits: usize, c1: usize, c2: usize, target: usize) -> Result<GateProgram> {
    use GateKind::*;
    distinct(&[c1, c2, target])?;
    let a = Rotation(Axis::Y, PI / 4.0);
    let abar = a.inverse();
    let mut p = GateProgram::new(num_qubits);
    p.push(a, &[target])?
        .push(Cnot, &[c2, target])?
        .push(a, &[target])?
        .push(Cnot, &[c1, target])?
        .push(abar, &[target])?
        .push(Cnot, &[c2, target])?
        .push(abar, &[target])?;
    Ok(p)
}

/// SWAP as three CNOTs.
pub fn swap_sequence(num_qubits: usize, a: usize, b: usize) -> Result<GateProgram> {
    distinct(&[a, b])?;
    let mut p = GateProgram::new(num_qubits);
    p.push(GateKind::Cnot, &[a, b])?
        .push(GateKind::Cnot, &[b, a])?
        .push(GateKind::Cnot, &[a, b])?;
    Ok(p)
}

/// Permutation matrix of Toffoli on `n` qubits, used as a test oracle.
pub fn toffoli_matrix(num_qubits: usize, c1: usize, c2: usize, target: usize) -> DenseMatrix {
    let dim = 1usize << num_qubits;
    let (m1, m2, mt) = (1 << (c1 - 1), 1 << (c2 - 1), 1 << (target - 1));
    let mut cols = vec![vec![c64(0.0, 0.0); dim]; dim];
    for (i, col) in cols.iter_mut().enumerate() {
        let out = if i & m1 != 0 && i & m2 != 0 { i ^ mt } else { i };
        col[out] = c64(1.0, 0.0);
    }
    DenseMatrix::from_columns(&cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{embed_1q, embed_2q, from_mat2, mat2_mul, spin_matrix};
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    fn amps_close(a: &[C64], b: &[C64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).norm() < tol)
    }

    fn op_oracle(n: usize, op: &GateOp) -> DenseMatrix {
        match op.kind {
            GateKind::Toffoli => toffoli_matrix(n, op.targets[0], op.targets[1], op.targets[2]),
            GateKind::GlobalPhase(t) => DenseMatrix::identity(1 << n).scale(cis(t)),
            ref k => match k.arity() {
                1 => embed_1q(n, op.targets[0], &k.matrix1().unwrap()),
                _ => embed_2q(n, op.targets[0], op.targets[1], &k.matrix2().unwrap()),
            },
        }
    }

    fn program_oracle(p: &GateProgram) -> DenseMatrix {
        let mut m = DenseMatrix::identity(1 << p.num_qubits);
        for op in &p.ops {
            m = op_oracle(p.num_qubits, op).mul(&m);
        }
        m
    }

    #[test]
    fn hadamard_on_zero() {
        let mut s = StateVector::basis_state(1, 0).unwrap();
        GateOp::new(GateKind::Hadamard, &[1]).apply(&mut s).unwrap();
        let h = FRAC_1_SQRT_2;
        assert!(amps_close(s.amplitudes(), &[c64(h, 0.0), c64(h, 0.0)], TOL));
    }

    #[test]
    fn x_on_qubit_one_of_10() {
        let mut s = StateVector::basis_state(2, 2).unwrap();
        GateOp::new(GateKind::X, &[1]).apply(&mut s).unwrap();
        let h = FRAC_1_SQRT_2;
        let z = c64(0.0, 0.0);
        assert!(amps_close(s.amplitudes(), &[z, z, c64(h, 0.0), c64(0.0, h)], TOL));
    }

    #[test]
    fn y_on_qubit_two_of_10() {
        let mut s = StateVector::basis_state(2, 2).unwrap();
        GateOp::new(GateKind::Y, &[2]).apply(&mut s).unwrap();
        let h = FRAC_1_SQRT_2;
        let z = c64(0.0, 0.0);
        assert!(amps_close(s.amplitudes(), &[c64(h, 0.0), z, c64(h, 0.0), z], TOL));
    }

    #[test]
    fn toffoli_on_011() {
        let mut s = StateVector::basis_state(3, 3).unwrap();
        GateOp::new(GateKind::Toffoli, &[1, 2, 3]).apply(&mut s).unwrap();
        assert_eq!(s.amplitudes()[7], c64(1.0, 0.0));
    }

    #[test]
    fn cnot_truth_table() {
        for (input, output) in [(0, 0), (1, 3), (2, 2), (3, 1)] {
            let mut s = StateVector::basis_state(2, input).unwrap();
            GateOp::new(GateKind::Cnot, &[1, 2]).apply(&mut s).unwrap();
            assert_eq!(s.amplitudes()[output], c64(1.0, 0.0));
        }
    }

    #[test]
    fn ising_phase_on_00() {
        let mut s = StateVector::basis_state(2, 0).unwrap();
        GateOp::new(GateKind::IsingPhase(PI), &[1, 2]).apply(&mut s).unwrap();
        assert!((s.amplitudes()[0] - cis(-PI / 4.0)).norm() < TOL);
    }

    #[test]
    fn cnot_sequence_is_exact() {
        for (c, t) in [(1, 2), (2, 1)] {
            let p = cnot_sequence(2, c, t).unwrap();
            let want = embed_2q(2, c, t, &GateKind::Cnot.matrix2().unwrap());
            assert!(p.unitary().unwrap().max_diff(&want) < TOL);
        }
        let p = cnot_sequence(2, 1, 2).unwrap();
        let mut twice = p.clone();
        twice.append(&p).unwrap();
        assert!(twice.unitary().unwrap().max_diff(&DenseMatrix::identity(4)) < TOL);
    }

    #[test]
    fn toffoli_sequence_up_to_phase() {
        for (c1, c2, t) in [(1, 2, 3), (3, 1, 2), (2, 3, 1)] {
            let p = toffoli_sequence(3, c1, c2, t).unwrap();
            assert_eq!(p.len(), 11);
            let u = p.unitary().unwrap();
            assert!(u.max_diff_up_to_phase(&toffoli_matrix(3, c1, c2, t)) < TOL);
        }
        let p = toffoli_sequence(4, 4, 2, 1).unwrap();
        assert!(p.unitary().unwrap().max_diff_up_to_phase(&toffoli_matrix(4, 4, 2, 1)) < TOL);
    }

    #[test]
    fn margolus_sign_pattern() {
        // Controls (1, 0) leave -2 S^z = diag(-1, 1) on the target; every
        // other control pattern acts like Toffoli.
        let u = toffoli_margolus_sequence(3, 1, 2, 3).unwrap().unitary().unwrap();
        let tof = toffoli_matrix(3, 1, 2, 3);
        for i in 0..8 {
            let sign = if i & 1 == 1 && i & 2 == 0 && i & 4 == 0 { -1.0 } else { 1.0 };
            for r in 0..8 {
                assert!((u.get(r, i) - tof.get(r, i) * sign).norm() < TOL, "column {i}");
            }
        }
    }

    #[test]
    fn swap_from_three_cnots() {
        let p = swap_sequence(2, 1, 2).unwrap();
        let want = embed_2q(2, 1, 2, &GateKind::Swap.matrix2().unwrap());
        assert!(p.unitary().unwrap().max_diff(&want) < TOL);
    }

    #[test]
    fn empty_program_and_w_squared() {
        let p = GateProgram::new(2);
        assert!(p.unitary().unwrap().max_diff(&DenseMatrix::identity(4)) < TOL);
        let mut p = GateProgram::new(1);
        p.push(GateKind::Hadamard, &[1]).unwrap().push(GateKind::Hadamard, &[1]).unwrap();
        assert!(p.unitary().unwrap().max_diff(&DenseMatrix::identity(2)) < TOL);
    }

    #[test]
    fn hadamard_from_x_and_y() {
        let x = GateKind::X.matrix1().unwrap();
        let y = GateKind::Y.matrix1().unwrap();
        let ybar = GateKind::Ybar.matrix1().unwrap();
        let w = from_mat2(&GateKind::Hadamard.matrix1().unwrap());
        let mi = c64(0.0, -1.0);
        let a = from_mat2(&mat2_mul(&mat2_mul(&x, &x), &ybar)).scale(mi);
        let b = from_mat2(&mat2_mul(&y, &mat2_mul(&x, &x))).scale(mi);
        assert!(a.max_diff(&w) < TOL);
        assert!(b.max_diff(&w) < TOL);
    }

    #[test]
    fn inverses_and_involutions() {
        for k in [GateKind::X, GateKind::Y] {
            let u = mat2_mul(&k.inverse().matrix1().unwrap(), &k.matrix1().unwrap());
            assert!(from_mat2(&u).max_diff(&DenseMatrix::identity(2)) < TOL);
        }
        for k in [GateKind::Cnot, GateKind::Swap] {
            let m = crate::dense::from_mat4(&k.matrix2().unwrap());
            assert!(m.mul(&m).max_diff(&DenseMatrix::identity(4)) < TOL);
        }
        let t = toffoli_matrix(3, 1, 2, 3);
        assert!(t.mul(&t).max_diff(&DenseMatrix::identity(8)) < TOL);
    }

    #[test]
    fn x_rotation_via_y_conjugated_z() {
        for i in 0..16 {
            let phi = -PI + i as f64 * 0.41;
            let lhs = rotation(Axis::X, phi);
            let rhs = mat2_mul(
                &mat2_mul(&rotation(Axis::Y, -PI / 2.0), &rotation(Axis::Z, phi)),
                &rotation(Axis::Y, PI / 2.0),
            );
            assert!(from_mat2(&lhs).max_diff(&from_mat2(&rhs)) < TOL);
        }
    }

    #[test]
    fn named_rotations_match_exponentials() {
        assert!(from_mat2(&GateKind::X.matrix1().unwrap()).max_diff(&from_mat2(&rotation(Axis::X, PI / 2.0))) < TOL);
        assert!(from_mat2(&GateKind::Y.matrix1().unwrap()).max_diff(&from_mat2(&rotation(Axis::Y, PI / 2.0))) < TOL);
        // G = exp(-i pi S^z S^z)
        let g = GateKind::ZzPhase(PI).matrix2().unwrap();
        let want = [cis(-PI / 4.0), cis(PI / 4.0), cis(PI / 4.0), cis(-PI / 4.0)];
        for i in 0..4 {
            assert!((g[i][i] - want[i]).norm() < TOL);
        }
    }

    #[test]
    fn invalid_targets_rejected() {
        let mut s = StateVector::basis_state(2, 0).unwrap();
        assert!(GateOp::new(GateKind::Cnot, &[1, 1]).apply(&mut s).is_err());
        assert!(GateOp::new(GateKind::X, &[3]).apply(&mut s).is_err());
        assert!(GateOp::new(GateKind::X, &[1, 2]).apply(&mut s).is_err());
        assert!(GateOp::new(GateKind::Rphase(f64::NAN), &[1]).apply(&mut s).is_err());
        assert!(cnot_sequence(2, 1, 1).is_err());
    }

    fn arb_axis() -> impl Strategy<Value = Axis> {
        prop_oneof![Just(Axis::X), Just(Axis::Y), Just(Axis::Z)]
    }

    fn arb_kind() -> impl Strategy<Value = GateKind> {
        use GateKind::*;
        let ang = -7.0f64..7.0;
        prop_oneof![
            Just(X),
            Just(Xbar),
            Just(Y),
            Just(Ybar),
            ang.clone().prop_map(Rphase),
            ang.clone().prop_map(CtrlPhase),
            ang.clone().prop_map(IsingPhase),
            ang.clone().prop_map(ZzPhase),
            (arb_axis(), ang.clone()).prop_map(|(a, t)| Rotation(a, t)),
            ang.prop_map(GlobalPhase),
            Just(Cnot),
            Just(Hadamard),
            Just(Swap),
            Just(Toffoli),
            Just(Not),
        ]
    }

    fn arb_program() -> impl Strategy<Value = GateProgram> {
        (3usize..=4).prop_flat_map(|n| {
            prop::collection::vec((arb_kind(), Just((1..=n).collect::<Vec<_>>()).prop_shuffle()), 0..12).prop_map(move |ops| {
                let mut p = GateProgram::new(n);
                for (k, t) in ops {
                    p.push(k, &t[..k.arity()]).unwrap();
                }
                p
            })
        })
    }

    proptest! {
        #[test]
        fn programs_match_dense_oracle(p in arb_program()) {
            let got = p.unitary().unwrap();
            prop_assert!(got.max_diff(&program_oracle(&p)) < TOL);
        }

        #[test]
        fn program_then_inverse_is_identity(p in arb_program()) {
            let mut q = p.clone();
            q.append(&p.inverse()).unwrap();
            prop_assert!(q.unitary().unwrap().max_diff(&DenseMatrix::identity(1 << p.num_qubits)) < TOL);
        }

        #[test]
        fn gates_preserve_norm(p in arb_program(), seed in 0usize..16) {
            let mut s = StateVector::basis_state(p.num_qubits, seed % (1 << p.num_qubits)).unwrap();
            GateOp::new(GateKind::Hadamard, &[1]).apply(&mut s).unwrap();
            run(&mut s, &p).unwrap();
            prop_assert!((s.norm() - 1.0).abs() < TOL);
        }

        #[test]
        fn rotation_matches_exponential(v in prop::array::uniform3(-4.0f64..4.0)) {
            // exp(i v.S) = cos(|v|/2) + (2i v.S/|v|) sin(|v|/2)
            let vn = libm::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            prop_assume!(vn > 1e-6);
            let mut vs = DenseMatrix::zeros(2);
            for (i, ax) in Axis::ALL.iter().enumerate() {
                vs = vs.add(&from_mat2(&spin_matrix(*ax)).scale(c64(v[i], 0.0)));
            }
            let closed = DenseMatrix::identity(2)
                .scale(c64(libm::cos(vn / 2.0), 0.0))
                .add(&vs.scale(c64(0.0, 2.0 * libm::sin(vn / 2.0) / vn)));
            let series = vs.scale(c64(0.0, 1.0)).expm();
            prop_assert!(closed.max_diff(&series) < TOL);
        }
    }
}
