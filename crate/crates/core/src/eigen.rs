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

//! Dense Hermitian eigensolver.
//!
//! Householder reflections reduce the matrix to Hermitian tridiagonal form,
//! a diagonal phase matrix makes the off-diagonal real, and the real
//! symmetric tridiagonal problem is solved by the QL algorithm with implicit
//! Wilkinson shifts. Eigenvectors are accumulated as rows so that every
//! rotation touches two contiguous slices.

use alloc::vec;
use alloc::vec::Vec;

use crate::dense::DenseMatrix;
use crate::{c64, Error, Result, C64};

const MAX_SWEEPS: usize = 60;

/// Eigenvalues and eigenvectors of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    n: usize,
    pub values: Vec<f64>,
    /// Row `i` holds eigenvector `i`.
    rows: Vec<C64>,
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vector(&self, i: usize) -> &[C64] {
        &self.rows[i * self.n..(i + 1) * self.n]
    }

    /// `psi <- V f(Lambda) V^dagger psi` for a diagonal function `f`.
    pub fn apply_function<F: Fn(f64) -> C64>(&self, psi: &mut [C64], f: F) {
        let n = self.n;
        assert_eq!(psi.len(), n);
        let mut out = vec![c64(0.0, 0.0); n];
        for i in 0..n {
            let v = self.vector(i);
            let proj = v
                .iter()
                .zip(psi.iter())
                .fold(c64(0.0, 0.0), |s, (a, b)| s + a.conj() * b);
            let coef = proj * f(self.values[i]);
            for (o, a) in out.iter_mut().zip(v) {
                *o += coef * a;
            }
        }
        psi.copy_from_slice(&out);
    }

    /// `psi <- exp(-i tau H) psi`
    pub fn apply_exp(&self, tau: f64, psi: &mut [C64]) {
        self.apply_function(psi, |l| crate::cis(-tau * l));
    }

    /// Matrix with the eigenvectors as columns.
    pub fn vectors(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, |r, c| self.rows[c * self.n + r])
    }
}

/// Diagonalizes a Hermitian matrix. Only the lower triangle is read.
pub fn hermitian_eigen(a: &DenseMatrix) -> Result<HermitianEigen> {
    let n = a.dim();
    if n == 0 {
        return Ok(HermitianEigen {
            n,
            values: Vec::new(),
            rows: Vec::new(),
        });
    }
    // Working copy, made exactly Hermitian from the lower triangle.
    let mut w: Vec<C64> = vec![c64(0.0, 0.0); n * n];
    for r in 0..n {
        for c in 0..=r {
            let v = if r == c { c64(a.get(r, r).re, 0.0) } else { a.get(r, c) };
            w[r * n + c] = v;
            w[c * n + r] = v.conj();
        }
    }

    let mut reflectors: Vec<(usize, Vec<C64>)> = Vec::new();
    let mut sub = vec![c64(0.0, 0.0); n.saturating_sub(1)];
    for k in 0..n.saturating_sub(1) {
        let m = n - k - 1;
        let x: Vec<C64> = (0..m).map(|i| w[(k + 1 + i) * n + k]).collect();
        let tail: f64 = x[1..].iter().map(|a| a.norm_sqr()).sum();
        if tail == 0.0 {
            sub[k] = x[0];
            continue;
        }
        let xnorm = libm::sqrt(tail + x[0].norm_sqr());
        let phase = if x[0].norm() > 0.0 {
            x[0] / x[0].norm()
        } else {
            c64(1.0, 0.0)
        };
        let alpha = -phase * xnorm;
        let mut v = x;
        v[0] -= alpha;
        let vnorm = libm::sqrt(v.iter().map(|a| a.norm_sqr()).sum());
        for a in v.iter_mut() {
            *a /= vnorm;
        }
        // p = B v on the trailing block, then the rank-2 update
        // B <- B - 2 (v w^dagger + w v^dagger) with w = p - (v^dagger p) v.
        let off = k + 1;
        let mut p = vec![c64(0.0, 0.0); m];
        for (i, pi) in p.iter_mut().enumerate() {
            let row = &w[(off + i) * n + off..(off + i) * n + n];
            *pi = row.iter().zip(&v).fold(c64(0.0, 0.0), |s, (b, vv)| s + b * vv);
        }
        let kk = v
            .iter()
            .zip(&p)
            .fold(c64(0.0, 0.0), |s, (vv, pp)| s + vv.conj() * pp)
            .re;
        let wv: Vec<C64> = p.iter().zip(&v).map(|(pp, vv)| pp - vv * kk).collect();
        for i in 0..m {
            let vi2 = v[i] * 2.0;
            let wi2 = wv[i] * 2.0;
            let row = &mut w[(off + i) * n + off..(off + i) * n + n];
            for (jdx, b) in row.iter_mut().enumerate() {
                *b -= vi2 * wv[jdx].conj() + wi2 * v[jdx].conj();
            }
        }
        sub[k] = alpha;
        reflectors.push((k, v));
    }

    let mut d: Vec<f64> = (0..n).map(|i| w[i * n + i].re).collect();
    drop(w);

    // Q = H_0 H_1 ... accumulated as Q <- H_k Q from the last reflector on.
    let mut q = vec![c64(0.0, 0.0); n * n];
    for i in 0..n {
        q[i * n + i] = c64(1.0, 0.0);
    }
    for (k, v) in reflectors.iter().rev() {
        let off = k + 1;
        let m = v.len();
        // y = v^dagger Q[off.., :]
        let mut y = vec![c64(0.0, 0.0); n];
        for i in 0..m {
            let vc = v[i].conj();
            let row = &q[(off + i) * n..(off + i + 1) * n];
            for (yy, a) in y.iter_mut().zip(row) {
                *yy += vc * a;
            }
        }
        for i in 0..m {
            let vi2 = v[i] * 2.0;
            let row = &mut q[(off + i) * n..(off + i + 1) * n];
            for (a, yy) in row.iter_mut().zip(&y) {
                *a -= vi2 * yy;
            }
        }
    }

    // Phases that make the subdiagonal real and non-negative.
    let mut e = vec![0.0; n];
    let mut phases = vec![c64(1.0, 0.0); n];
    for i in 0..n - 1 {
        let s = sub[i];
        let mag = s.norm();
        e[i] = mag;
        phases[i + 1] = if mag > 0.0 { phases[i] * (s / mag) } else { phases[i] };
    }

    // rows[k] = column k of Q times phase k.
    let mut rows = vec![c64(0.0, 0.0); n * n];
    for r in 0..n {
        for k in 0..n {
            rows[k * n + r] = q[r * n + k] * phases[k];
        }
    }
    drop(q);

    tridiagonal_ql(&mut d, &mut e, |i, c, s| {
        let (lo, hi) = rows.split_at_mut((i + 1) * n);
        let ri = &mut lo[i * n..];
        let rj = &mut hi[..n];
        for (a, b) in ri.iter_mut().zip(rj.iter_mut()) {
            let f = *b;
            *b = *a * s + f * c;
            *a = *a * c - f * s;
        }
    })?;

    Ok(HermitianEigen { n, values: d, rows })
}

/// Eigen-decomposition of a real symmetric tridiagonal matrix with diagonal
/// `d` and off-diagonal `off` (`off.len() == d.len() - 1`).
///
/// Returns the eigenvalues and the eigenvectors as rows of an `n × n`
/// row-major array.
pub fn symmetric_tridiagonal_eigen(d: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = d.len();
    let mut dd = d.to_vec();
    let mut e = vec![0.0; n];
    e[..n.saturating_sub(1)].copy_from_slice(&off[..n.saturating_sub(1)]);
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    tridiagonal_ql(&mut dd, &mut e, |i, c, s| {
        let (lo, hi) = z.split_at_mut((i + 1) * n);
        let ri = &mut lo[i * n..];
        let rj = &mut hi[..n];
        for (a, b) in ri.iter_mut().zip(rj.iter_mut()) {
            let f = *b;
            *b = *a * s + f * c;
            *a = *a * c - f * s;
        }
    })?;
    Ok((dd, z))
}

/// QL iteration with implicit shifts on a real symmetric tridiagonal matrix.
///
/// `e[i]` couples `i` and `i + 1`; `e[n - 1]` is ignored. Each plane rotation
/// acting on indices `(i, i + 1)` is reported through `rotate(i, c, s)`.
fn tridiagonal_ql<R: FnMut(usize, f64, f64)>(d: &mut [f64], e: &mut [f64], mut rotate: R) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = libm::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = libm::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                rotate(i, c, s);
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
