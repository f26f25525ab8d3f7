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

//! The state vector and the in-place operations every higher layer is built
//! from.

use alloc::vec;
use alloc::vec::Vec;

use crate::kernels::{for_each_indexed, for_each_pair, for_each_quad, sum_indexed};
use crate::{c64, Error, Mat2, Mat4, Result, C64};

/// Default tolerance of the unitarity check on user-supplied matrices.
pub const UNITARY_TOL: f64 = 1e-10;

/// Spin component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

/// Expectation values `<Q^x>, <Q^y>, <Q^z>` of one qubit, each in `[0, 1]`.
///
/// `qz` is the probability of reading the qubit as 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitExpectation {
    pub qx: f64,
    pub qy: f64,
    pub qz: f64,
}

/// `2^L` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<C64>,
}

/// Checks that `j` is a valid 1-based qubit and returns its bit position.
#[inline]
pub(crate) fn bit_of(j: usize, num_qubits: usize) -> Result<usize> {
    if j == 0 || j > num_qubits {
        Err(Error::QubitOutOfRange { qubit: j, num_qubits })
    } else {
        Ok(j - 1)
    }
}

/// Largest deviation of `u^dagger u` from the identity.
pub fn unitarity_deviation<const N: usize>(u: &[[C64; N]; N]) -> f64 {
    let mut worst = 0.0f64;
    for r in 0..N {
        for c in 0..N {
            let mut s = c64(0.0, 0.0);
            for k in 0..N {
                s += u[k][r].conj() * u[k][c];
            }
            if r == c {
                s -= 1.0;
            }
            worst = worst.max(s.norm());
        }
    }
    worst
}

fn check_unitary<const N: usize>(u: &[[C64; N]; N], tol: f64) -> Result<()> {
    let deviation = unitarity_deviation(u);
    // NaN must fail too.
    if deviation <= tol {
        Ok(())
    } else {
        Err(Error::NotUnitary { deviation })
    }
}

impl StateVector {
    /// The basis state `|index>` of `num_qubits` qubits.
    pub fn basis_state(num_qubits: usize, index: usize) -> Result<Self> {
        if num_qubits == 0 || num_qubits >= usize::BITS as usize {
            return Err(Error::BadDimension(num_qubits));
        }
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut amps = vec![c64(0.0, 0.0); dim];
        amps[index] = c64(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Wraps an amplitude array whose length is a power of two (at least 2).
    /// The amplitudes are taken as given, without normalization.
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        let n = amps.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::BadDimension(n));
        }
        Ok(StateVector {
            num_qubits: n.trailing_zeros() as usize,
            amps,
        })
    }

    /// Product state with qubit `j` in `states[j - 1]`, given as `(a0, a1)`.
    pub fn product(states: &[[C64; 2]]) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::BadDimension(0));
        }
        let mut amps = vec![c64(1.0, 0.0)];
        for s in states {
            let mut next = Vec::with_capacity(amps.len() * 2);
            // Qubit j is bit j-1: the new qubit becomes the most significant bit.
            for &b in s {
                next.extend(amps.iter().map(|a| a * b));
            }
            amps = next;
        }
        Self::from_amplitudes(amps)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amps
    }

    /// Replaces the state by `S_j^axis |state>`. Not normalized: the spin
    /// operators have norm 1/2.
    pub fn apply_spin(&mut self, axis: Axis, j: usize) -> Result<()> {
        let b = bit_of(j, self.num_qubits)?;
        let half = 0.5;
        match axis {
            Axis::Z => for_each_pair(&mut self.amps, b, |a0, a1| {
                *a0 *= half;
                *a1 *= -half;
            }),
            Axis::X => for_each_pair(&mut self.amps, b, |a0, a1| {
                let t = *a0;
                *a0 = *a1 * half;
                *a1 = t * half;
            }),
            Axis::Y => for_each_pair(&mut self.amps, b, |a0, a1| {
                let t = *a0;
                *a0 = *a1 * c64(0.0, -half);
                *a1 = t * c64(0.0, half);
            }),
        }
        Ok(())
    }

    /// Replaces the state by `S_j^axis S_k^axis |state>`.
    pub fn apply_two_spin(&mut self, axis: Axis, j: usize, k: usize) -> Result<()> {
        let bj = bit_of(j, self.num_qubits)?;
        let bk = bit_of(k, self.num_qubits)?;
        if bj == bk {
            return Err(Error::SameQubit(j));
        }
        let q = 0.25;
        match axis {
            Axis::Z => for_each_quad(&mut self.amps, bj, bk, |a00, a01, a10, a11| {
                *a00 *= q;
                *a01 *= -q;
                *a10 *= -q;
                *a11 *= q;
            }),
            Axis::X => for_each_quad(&mut self.amps, bj, bk, |a00, a01, a10, a11| {
                core::mem::swap(a00, a11);
                core::mem::swap(a01, a10);
                *a00 *= q;
                *a01 *= q;
                *a10 *= q;
                *a11 *= q;
            }),
            // Both bits flip; the product of the two y factors is -1/4 when
            // the bits were equal and +1/4 when they differed.
            Axis::Y => for_each_quad(&mut self.amps, bj, bk, |a00, a01, a10, a11| {
                core::mem::swap(a00, a11);
                core::mem::swap(a01, a10);
                *a00 *= -q;
                *a11 *= -q;
                *a01 *= q;
                *a10 *= q;
            }),
        }
        Ok(())
    }

    /// Applies a 2×2 unitary to qubit `j` after checking unitarity against
    /// [`UNITARY_TOL`].
    pub fn apply_1q_unitary(&mut self, j: usize, u: &Mat2) -> Result<()> {
        self.apply_1q_unitary_tol(j, u, UNITARY_TOL)
    }

    pub fn apply_1q_unitary_tol(&mut self, j: usize, u: &Mat2, tol: f64) -> Result<()> {
        check_unitary(u, tol)?;
        self.apply_1q(j, u)
    }

    /// Applies a 2×2 matrix to qubit `j` without checking unitarity.
    pub fn apply_1q(&mut self, j: usize, u: &Mat2) -> Result<()> {
        let b = bit_of(j, self.num_qubits)?;
        let u = *u;
        for_each_pair(&mut self.amps, b, move |a0, a1| {
            let (x, y) = (*a0, *a1);
            *a0 = u[0][0] * x + u[0][1] * y;
            *a1 = u[1][0] * x + u[1][1] * y;
        });
        Ok(())
    }

    /// Applies a 4×4 unitary to qubits `(j, k)`; row/column order is
    /// `(bit_k bit_j)` with `bit_j` least significant.
    pub fn apply_2q_unitary(&mut self, j: usize, k: usize, u: &Mat4) -> Result<()> {
        self.apply_2q_unitary_tol(j, k, u, UNITARY_TOL)
    }

    pub fn apply_2q_unitary_tol(&mut self, j: usize, k: usize, u: &Mat4, tol: f64) -> Result<()> {
        check_unitary(u, tol)?;
        self.apply_2q(j, k, u)
    }

    /// Applies a 4×4 matrix to qubits `(j, k)` without checking unitarity.
    pub fn apply_2q(&mut self, j: usize, k: usize, u: &Mat4) -> Result<()> {
        let bj = bit_of(j, self.num_qubits)?;
        let bk = bit_of(k, self.num_qubits)?;
        if bj == bk {
            return Err(Error::SameQubit(j));
        }
        let u = *u;
        for_each_quad(&mut self.amps, bj, bk, move |a00, a01, a10, a11| {
            let x = [*a00, *a01, *a10, *a11];
            let row = |r: usize| u[r][0] * x[0] + u[r][1] * x[1] + u[r][2] * x[2] + u[r][3] * x[3];
            *a00 = row(0);
            *a01 = row(1);
            *a10 = row(2);
            *a11 = row(3);
        });
        Ok(())
    }

    /// Multiplies every amplitude by `f(index)`; used for diagonal operators.
    pub fn apply_diagonal<F>(&mut self, f: F)
    where
        F: Fn(usize) -> C64 + Sync + Send,
    {
        for_each_indexed(&mut self.amps, |i, a| *a *= f(i));
    }

    /// Qubit expectations `<Q_j^a> = 1/2 - <S_j^a>`.
    pub fn expectation(&self, j: usize) -> Result<QubitExpectation> {
        let b = bit_of(j, self.num_qubits)?;
        let m = 1usize << b;
        let amps = &self.amps;
        // Over indices with the bit clear: <S^x> = Re(a0* a1), <S^y> = Im(a0* a1).
        let sx = sum_indexed(amps, |i, a| {
            if i & m == 0 {
                (a.conj() * amps[i | m]).re
            } else {
                0.0
            }
        });
        let sy = sum_indexed(amps, |i, a| {
            if i & m == 0 {
                (a.conj() * amps[i | m]).im
            } else {
                0.0
            }
        });
        let qz = sum_indexed(amps, |i, a| if i & m != 0 { a.norm_sqr() } else { 0.0 });
        Ok(QubitExpectation {
            qx: 0.5 - sx,
            qy: 0.5 - sy,
            qz,
        })
    }

    /// Expectations of every qubit, qubit 1 first.
    pub fn expectations(&self) -> Vec<QubitExpectation> {
        (1..=self.num_qubits)
            .map(|j| self.expectation(j).expect("qubit in range"))
            .collect()
    }

    /// `<self|other>`
    pub fn inner_product(&self, other: &StateVector) -> Result<C64> {
        self.same_size(other)?;
        Ok(crate::kernels::dot(&self.amps, &other.amps))
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(sum_indexed(&self.amps, |_, a| a.norm_sqr()))
    }

    /// `|<self|other>|`, insensitive to global phase.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner_product(other)?.norm())
    }

    /// Euclidean distance `||self - other||`.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        self.same_size(other)?;
        let s: f64 = self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok(libm::sqrt(s))
    }

    /// Rescales to unit norm. A zero vector is left alone.
    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            crate::kernels::scale(c64(1.0 / n, 0.0), &mut self.amps);
        }
    }

    fn same_size(&self, other: &StateVector) -> Result<()> {
        if self.num_qubits != other.num_qubits {
            Err(Error::SizeMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{embed_1q, embed_2q, spin_matrix, DenseMatrix};
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    fn random_state(n: usize) -> impl Strategy<Value = StateVector> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n).prop_filter_map(
            "nonzero",
            |v| {
                let mut s = StateVector::from_amplitudes(v.into_iter().map(|(r, i)| c64(r, i)).collect())
                    .unwrap();
                if s.norm() < 1e-3 {
                    return None;
                }
                s.normalize();
                Some(s)
            },
        )
    }

    fn random_unitary2() -> impl Strategy<Value = Mat2> {
        (0.0f64..6.3, 0.0f64..6.3, 0.0f64..6.3, 0.0f64..6.3).prop_map(|(a, b, c, d)| {
            // e^{ia} [[e^{ib} cos c, e^{id} sin c], [-e^{-id} sin c, e^{-ib} cos c]]
            let g = crate::cis(a);
            [
                [g * crate::cis(b) * libm::cos(c), g * crate::cis(d) * libm::sin(c)],
                [-g * crate::cis(-d) * libm::sin(c), g * crate::cis(-b) * libm::cos(c)],
            ]
        })
    }

    #[test]
    fn basis_state_bits() {
        let s = StateVector::basis_state(2, 2).unwrap();
        assert_eq!(s.amplitudes()[2], c64(1.0, 0.0));
        let s = StateVector::basis_state(3, 5).unwrap();
        let q: Vec<f64> = s.expectations().iter().map(|e| e.qz).collect();
        assert_eq!(q, [1.0, 0.0, 1.0]);
        assert_eq!(
            StateVector::basis_state(2, 4),
            Err(Error::IndexOutOfRange { index: 4, dim: 4 })
        );
    }

    #[test]
    fn spin_examples() {
        let mut s = StateVector::basis_state(1, 0).unwrap();
        s.apply_spin(Axis::X, 1).unwrap();
        assert!(close(s.amplitudes(), &[c64(0.0, 0.0), c64(0.5, 0.0)], TOL));
        let mut s = StateVector::basis_state(1, 0).unwrap();
        s.apply_spin(Axis::Z, 1).unwrap();
        assert!(close(s.amplitudes(), &[c64(0.5, 0.0), c64(0.0, 0.0)], TOL));
        let mut s = StateVector::basis_state(1, 0).unwrap();
        s.apply_spin(Axis::Y, 1).unwrap();
        assert!(close(s.amplitudes(), &[c64(0.0, 0.0), c64(0.0, 0.5)], TOL));
        assert!(s.apply_spin(Axis::Y, 2).is_err());
    }

    #[test]
    fn two_spin_examples() {
        let mut s = StateVector::basis_state(2, 0).unwrap();
        s.apply_two_spin(Axis::Z, 1, 2).unwrap();
        assert!((s.amplitudes()[0] - 0.25).norm() < TOL);
        let mut s = StateVector::basis_state(2, 1).unwrap();
        s.apply_two_spin(Axis::Z, 1, 2).unwrap();
        assert!((s.amplitudes()[1] + 0.25).norm() < TOL);
        let mut s = StateVector::basis_state(2, 0).unwrap();
        s.apply_two_spin(Axis::X, 1, 2).unwrap();
        assert!((s.amplitudes()[3] - 0.25).norm() < TOL);
        assert_eq!(s.apply_two_spin(Axis::X, 2, 2), Err(Error::SameQubit(2)));
    }

    #[test]
    fn unitary_examples() {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let x: Mat2 = [[c64(r, 0.0), c64(0.0, r)], [c64(0.0, r), c64(r, 0.0)]];
        let y: Mat2 = [[c64(r, 0.0), c64(r, 0.0)], [c64(-r, 0.0), c64(r, 0.0)]];
        let mut s = StateVector::basis_state(1, 0).unwrap();
        s.apply_1q_unitary(1, &x).unwrap();
        assert!(close(s.amplitudes(), &[c64(r, 0.0), c64(0.0, r)], TOL));
        let mut s = StateVector::basis_state(2, 2).unwrap();
        s.apply_1q_unitary(2, &y).unwrap();
        assert!(close(
            s.amplitudes(),
            &[c64(r, 0.0), c64(0.0, 0.0), c64(r, 0.0), c64(0.0, 0.0)],
            TOL
        ));
        let bad: Mat2 = [[c64(1.0, 0.0), c64(1.0, 0.0)], [c64(0.0, 0.0), c64(1.0, 0.0)]];
        assert!(matches!(s.apply_1q_unitary(1, &bad), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn expectation_examples() {
        let e = StateVector::basis_state(1, 0).unwrap().expectation(1).unwrap();
        assert_eq!((e.qx, e.qy, e.qz), (0.5, 0.5, 0.0));
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let s = StateVector::from_amplitudes(vec![c64(r, 0.0), c64(r, 0.0)]).unwrap();
        let e = s.expectation(1).unwrap();
        assert!(e.qx.abs() < TOL && (e.qz - 0.5).abs() < TOL);
        let e = StateVector::basis_state(2, 2).unwrap().expectation(2).unwrap();
        assert_eq!(e.qz, 1.0);
    }

    #[test]
    fn inner_products() {
        let a = StateVector::basis_state(1, 0).unwrap();
        let b = StateVector::basis_state(1, 1).unwrap();
        assert_eq!(a.inner_product(&a).unwrap(), c64(1.0, 0.0));
        assert_eq!(a.inner_product(&b).unwrap(), c64(0.0, 0.0));
        let c = StateVector::basis_state(2, 0).unwrap();
        assert!(a.inner_product(&c).is_err());
    }

    proptest! {
        #[test]
        fn spin_ops_match_dense(s in (1usize..=4).prop_flat_map(random_state), ax in 0usize..3, jj in 0usize..4) {
            let n = s.num_qubits();
            let j = jj % n + 1;
            let axis = Axis::ALL[ax];
            let mut fast = s.clone();
            fast.apply_spin(axis, j).unwrap();
            let m = embed_1q(n, j, &spin_matrix(axis));
            prop_assert!(close(fast.amplitudes(), &m.apply(s.amplitudes()), TOL));
        }

        #[test]
        fn two_spin_ops_match_dense(s in (2usize..=4).prop_flat_map(random_state), ax in 0usize..3, a in 0usize..4, b in 1usize..4) {
            let n = s.num_qubits();
            let j = a % n + 1;
            let k = (a + b % (n - 1).max(1)) % n + 1;
            prop_assume!(j != k);
            let axis = Axis::ALL[ax];
            let mut fast = s.clone();
            fast.apply_two_spin(axis, j, k).unwrap();
            let sj = embed_1q(n, j, &spin_matrix(axis));
            let sk = embed_1q(n, k, &spin_matrix(axis));
            let m = sj.mul(&sk);
            prop_assert!(close(fast.amplitudes(), &m.apply(s.amplitudes()), TOL));
        }

        #[test]
        fn one_qubit_unitary_matches_dense_and_keeps_norm(s in (1usize..=4).prop_flat_map(random_state), u in random_unitary2(), jj in 0usize..4) {
            let n = s.num_qubits();
            let j = jj % n + 1;
            let mut fast = s.clone();
            fast.apply_1q_unitary(j, &u).unwrap();
            prop_assert!(close(fast.amplitudes(), &embed_1q(n, j, &u).apply(s.amplitudes()), TOL));
            prop_assert!((fast.norm() - 1.0).abs() < TOL);
        }

        #[test]
        fn two_qubit_unitary_matches_dense(s in (2usize..=4).prop_flat_map(random_state), u1 in random_unitary2(), u2 in random_unitary2(), a in 0usize..4, b in 1usize..4) {
            let n = s.num_qubits();
            let j = a % n + 1;
            let k = (a + b % (n - 1).max(1)) % n + 1;
            prop_assume!(j != k);
            // An entangling 4×4 unitary: (u1 ⊗ u2) followed by a controlled phase.
            let mut u = [[c64(0.0, 0.0); 4]; 4];
            for r in 0..4 {
                for c in 0..4 {
                    u[r][c] = u2[r >> 1][c >> 1] * u1[r & 1][c & 1];
                }
            }
            for c in 0..4 {
                u[3][c] *= crate::cis(0.7);
            }
            let mut fast = s.clone();
            fast.apply_2q_unitary(j, k, &u).unwrap();
            let m = embed_2q(n, j, k, &u);
            prop_assert!(close(fast.amplitudes(), &m.apply(s.amplitudes()), TOL));
            prop_assert!((fast.norm() - 1.0).abs() < TOL);
        }

        #[test]
        fn double_x_scales_by_quarter(s in (1usize..=4).prop_flat_map(random_state), jj in 0usize..4) {
            let j = jj % s.num_qubits() + 1;
            let mut t = s.clone();
            t.apply_spin(Axis::X, j).unwrap();
            t.apply_spin(Axis::X, j).unwrap();
            let want: Vec<C64> = s.amplitudes().iter().map(|a| a * 0.25).collect();
            prop_assert!(close(t.amplitudes(), &want, TOL));
        }

        #[test]
        fn doubled_spin_is_unitary(s in (1usize..=4).prop_flat_map(random_state), ax in 0usize..3, jj in 0usize..4) {
            let j = jj % s.num_qubits() + 1;
            let mut t = s.clone();
            t.apply_spin(Axis::ALL[ax], j).unwrap();
            prop_assert!((2.0 * t.norm() - 1.0).abs() < TOL);
        }

        #[test]
        fn expectations_in_range(s in (1usize..=4).prop_flat_map(random_state), jj in 0usize..4) {
            let j = jj % s.num_qubits() + 1;
            let e = s.expectation(j).unwrap();
            for q in [e.qx, e.qy, e.qz] {
                prop_assert!((-TOL..=1.0 + TOL).contains(&q));
            }
            // <Q^a> = 1/2 - <S^a>, checked against the dense spin matrices.
            for (ax, q) in Axis::ALL.iter().zip([e.qx, e.qy, e.qz]) {
                let m = embed_1q(s.num_qubits(), j, &spin_matrix(*ax));
                let v = m.apply(s.amplitudes());
                let sv = crate::kernels::dot(s.amplitudes(), &v).re;
                prop_assert!((q - (0.5 - sv)).abs() < TOL);
            }
        }

        #[test]
        fn fidelity_ignores_global_phase(s in (1usize..=3).prop_flat_map(random_state), th in 0.0f64..6.3) {
            let mut t = s.clone();
            t.apply_diagonal(|_| crate::cis(th));
            prop_assert!((s.fidelity(&t).unwrap() - 1.0).abs() < TOL);
        }
    }

    #[test]
    fn dense_matrix_is_used_consistently() {
        // Sanity check on the oracle itself: S^z on qubit 2 of two qubits.
        let m: DenseMatrix = embed_1q(2, 2, &spin_matrix(Axis::Z));
        assert_eq!(m.get(2, 2), c64(-0.5, 0.0));
        assert_eq!(m.get(1, 1), c64(0.5, 0.0));
    }
}
