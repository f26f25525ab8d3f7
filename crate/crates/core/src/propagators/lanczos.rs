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

//! Short-iterative Lanczos propagation.
//!
//! The state generates an `N`-dimensional Krylov space. `H` projected onto
//! it is tridiagonal, and the small exponential is done exactly.

use alloc::vec;
use alloc::vec::Vec;

use crate::eigen::symmetric_tridiagonal_eigen;
use crate::hamiltonian::InstantModel;
use crate::kernels::{axpy, dot, scale};
use crate::{c64, cis, Result, C64};

/// Default Krylov dimension.
pub const DEFAULT_ORDER: usize = 5;
/// A residual below this norm ends the Krylov space early.
pub const BREAKDOWN: f64 = 1e-14;

/// `psi <- exp(-i tau P H P) psi` on the Krylov space of dimension `order`.
pub fn kernel_lanczos(psi: &mut [C64], h: &InstantModel, tau: f64, order: usize, reorthogonalize: bool) -> Result<()> {
    let mut basis = Vec::new();
    lanczos_step(psi, h, tau, order, reorthogonalize, &mut basis)
}

pub(crate) fn lanczos_step(
    psi: &mut [C64],
    h: &InstantModel,
    tau: f64,
    order: usize,
    reorthogonalize: bool,
    basis: &mut Vec<Vec<C64>>,
) -> Result<()> {
    let order = order.max(1);
    let dim = psi.len();
    let nrm = libm::sqrt(dot(psi, psi).re);
    if nrm == 0.0 || tau == 0.0 {
        return Ok(());
    }
    while basis.len() < order + 1 {
        basis.push(vec![c64(0.0, 0.0); dim]);
    }
    for v in basis.iter_mut() {
        v.resize(dim, c64(0.0, 0.0));
    }
    basis[0].copy_from_slice(psi);
    scale(c64(1.0 / nrm, 0.0), &mut basis[0]);
    let mut alphas: Vec<f64> = Vec::with_capacity(order);
    let mut betas: Vec<f64> = Vec::with_capacity(order);
    for n in 0..order {
        // The spare vector at index `order` holds H v_n until it becomes v_{n+1}.
        let (done, rest) = basis.split_at_mut(n + 1);
        let w = &mut rest[0];
        h.apply(&done[n], w)?;
        let alpha = dot(&done[n], w).re;
        axpy(c64(-alpha, 0.0), &done[n], w);
        if n > 0 {
            axpy(c64(-betas[n - 1], 0.0), &done[n - 1], w);
        }
        if reorthogonalize {
            for v in done.iter() {
                let p = dot(v, w);
                axpy(-p, v, w);
            }
        }
        alphas.push(alpha);
        if n + 1 == order {
            break;
        }
        let beta = libm::sqrt(dot(w, w).re);
        if beta < BREAKDOWN {
            break;
        }
        scale(c64(1.0 / beta, 0.0), w);
        betas.push(beta);
    }
    let m = alphas.len();
    let (values, z) = symmetric_tridiagonal_eigen(&alphas, &betas[..m - 1])?;
    // Coefficients of exp(-i tau T) e_0 in the Krylov basis.
    let mut coef = vec![c64(0.0, 0.0); m];
    for (i, &lam) in values.iter().enumerate() {
        let zi = &z[i * m..(i + 1) * m];
        let f = cis(-tau * lam) * zi[0] * nrm;
        for (c, &zn) in coef.iter_mut().zip(zi) {
            *c += f * zn;
        }
    }
    scale(c64(0.0, 0.0), psi);
    for (c, v) in coef.iter().zip(basis.iter()) {
        axpy(*c, v, psi);
    }
    Ok(())
}
