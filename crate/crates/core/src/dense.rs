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

//! Small dense complex matrices.
//!
//! These are the reference ("oracle") implementations used to check the
//! in-place kernels, and the storage behind the exact-diagonalization
//! propagator. Row-major, square.

use alloc::vec;
use alloc::vec::Vec;

use crate::state::Axis;
use crate::{c64, Mat2, Mat4, C64};

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<C64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            data: vec![c64(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = c64(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> C64>(n: usize, mut f: F) -> Self {
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.data[r * n + c] = f(r, c);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<C64>]) -> Self {
        let n = cols.len();
        Self::from_fn(n, |r, c| cols[c][r])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: C64) {
        self.data[r * self.n + c] = v;
    }

    pub fn row(&self, r: usize) -> &[C64] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        let n = self.n;
        assert_eq!(n, other.n);
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == c64(0.0, 0.0) {
                    continue;
                }
                let orow = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[r * n..(r + 1) * n];
                for (d, b) in dst.iter_mut().zip(orow) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let n = self.n;
        assert_eq!(v.len(), n);
        (0..n)
            .map(|r| {
                self.data[r * n..(r + 1) * n]
                    .iter()
                    .zip(v)
                    .fold(c64(0.0, 0.0), |s, (a, b)| s + a * b)
            })
            .collect()
    }

    pub fn dagger(&self) -> DenseMatrix {
        Self::from_fn(self.n, |r, c| self.get(c, r).conj())
    }

    pub fn scale(&self, s: C64) -> DenseMatrix {
        DenseMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Largest elementwise `|a - b|`.
    pub fn max_diff(&self, other: &DenseMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest elementwise difference after removing the best global phase,
    /// taken from the largest entry of `other`.
    pub fn max_diff_up_to_phase(&self, other: &DenseMatrix) -> f64 {
        let (idx, _) = other
            .data
            .iter()
            .enumerate()
            .fold((0, 0.0), |(bi, bv), (i, a)| if a.norm() > bv { (i, a.norm()) } else { (bi, bv) });
        let a = self.data[idx];
        let b = other.data[idx];
        if a.norm() == 0.0 {
            return f64::INFINITY;
        }
        let phase = b / a;
        let phase = phase / phase.norm();
        self.scale(phase).max_diff(other)
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|a| a.norm_sqr()).sum())
    }

    /// `exp(self)` by scaling and squaring of a Taylor series.
    pub fn expm(&self) -> DenseMatrix {
        let norm = self.frobenius();
        let mut squarings = 0;
        let mut s = 1.0;
        while norm * s > 0.5 {
            s *= 0.5;
            squarings += 1;
        }
        let a = self.scale(c64(s, 0.0));
        let mut term = DenseMatrix::identity(self.n);
        let mut sum = term.clone();
        for k in 1..30 {
            term = term.mul(&a).scale(c64(1.0 / k as f64, 0.0));
            sum = sum.add(&term);
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }

    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let (n, m) = (self.n, other.n);
        Self::from_fn(n * m, |r, c| self.get(r / m, c / m) * other.get(r % m, c % m))
    }
}

pub fn from_mat2(u: &Mat2) -> DenseMatrix {
    DenseMatrix::from_fn(2, |r, c| u[r][c])
}

pub fn from_mat4(u: &Mat4) -> DenseMatrix {
    DenseMatrix::from_fn(4, |r, c| u[r][c])
}

/// `S^axis = sigma^axis / 2`.
pub fn spin_matrix(axis: Axis) -> Mat2 {
    let z = c64(0.0, 0.0);
    match axis {
        Axis::X => [[z, c64(0.5, 0.0)], [c64(0.5, 0.0), z]],
        Axis::Y => [[z, c64(0.0, -0.5)], [c64(0.0, 0.5), z]],
        Axis::Z => [[c64(0.5, 0.0), z], [z, c64(-0.5, 0.0)]],
    }
}

/// Full `2^L` matrix of `u` acting on qubit `j`, by Kronecker products.
/// Qubit 1 is the least significant bit, so it is the rightmost factor.
pub fn embed_1q(num_qubits: usize, j: usize, u: &Mat2) -> DenseMatrix {
    let mut m = DenseMatrix::identity(1);
    for q in (1..=num_qubits).rev() {
        let f = if q == j {
            from_mat2(u)
        } else {
            DenseMatrix::identity(2)
        };
        m = m.kron(&f);
    }
    m
}

/// Full matrix of a 4×4 `u` on qubits `(j, k)` with `(bit_k bit_j)` ordering.
///
/// Built as a sum of Kronecker products `sum E_ab(k) ⊗ E_cd(j) u[..]`.
pub fn embed_2q(num_qubits: usize, j: usize, k: usize, u: &Mat4) -> DenseMatrix {
    let dim = 1usize << num_qubits;
    let mut total = DenseMatrix::zeros(dim);
    for r in 0..4 {
        for c in 0..4 {
            if u[r][c] == c64(0.0, 0.0) {
                continue;
            }
            let mut ek = [[c64(0.0, 0.0); 2]; 2];
            ek[r >> 1][c >> 1] = c64(1.0, 0.0);
            let mut ej = [[c64(0.0, 0.0); 2]; 2];
            ej[r & 1][c & 1] = c64(1.0, 0.0);
            let term = embed_1q(num_qubits, k, &ek).mul(&embed_1q(num_qubits, j, &ej));
            total = total.add(&term.scale(u[r][c]));
        }
    }
    total
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[c64(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

pub fn mat2_dagger(a: &Mat2) -> Mat2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

pub fn mat4_dagger(a: &Mat4) -> Mat4 {
    let mut out = [[c64(0.0, 0.0); 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            out[r][c] = a[c][r].conj();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_order_puts_qubit_one_last() {
        // X on qubit 1 of two qubits swaps |00> and |01>.
        let x: Mat2 = [[c64(0.0, 0.0), c64(1.0, 0.0)], [c64(1.0, 0.0), c64(0.0, 0.0)]];
        let m = embed_1q(2, 1, &x);
        assert_eq!(m.get(1, 0), c64(1.0, 0.0));
        assert_eq!(m.get(2, 0), c64(0.0, 0.0));
    }

    #[test]
    fn embed_2q_matches_kron_for_products() {
        let a = spin_matrix(Axis::X);
        let b = spin_matrix(Axis::Y);
        let mut u = [[c64(0.0, 0.0); 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                u[r][c] = b[r >> 1][c >> 1] * a[r & 1][c & 1];
            }
        }
        let full = embed_2q(3, 1, 3, &u);
        let want = embed_1q(3, 3, &b).mul(&embed_1q(3, 1, &a));
        assert!(full.max_diff(&want) < 1e-15);
    }

    #[test]
    fn expm_of_rotation() {
        // exp(i theta sigma_x) = cos theta + i sin theta sigma_x
        let th = 0.9;
        let g = from_mat2(&spin_matrix(Axis::X)).scale(c64(0.0, 2.0 * th));
        let e = g.expm();
        assert!((e.get(0, 0) - c64(libm::cos(th), 0.0)).norm() < 1e-14);
        assert!((e.get(0, 1) - c64(0.0, libm::sin(th))).norm() < 1e-14);
    }
}
