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

//! Chebyshev expansion of `exp(-i tau H)`.
//!
//! With `Hn = H / b` for the norm bound `b` and `z = tau b`,
//!
//! ```text
//! exp(-i tau H) = J_0(z) + 2 sum_{k>=1} (-1)^k J_k(z) T_k
//! T_0 = 1,  T_1 = i Hn,  T_{k+1} = 2 i Hn T_k + T_{k-1}
//! ```
//!
//! Only two work vectors besides the state are needed.

use alloc::vec::Vec;

use super::bessel::chebyshev_order;
use crate::hamiltonian::InstantModel;
use crate::kernels::{axpy, scale};
use crate::{c64, Result, C64};

/// Default truncation threshold on `|J_k|`.
pub const DEFAULT_KAPPA: f64 = 1e-17;
/// Default cap on the number of terms.
pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

/// `psi <- exp(-i tau H) psi` with the Chebyshev sum truncated where
/// `|J_k(tau b)| < kappa`.
pub fn kernel_chebyshev(psi: &mut [C64], h: &InstantModel, tau: f64, kappa: f64) -> Result<()> {
    let mut a = Vec::new();
    let mut b = Vec::new();
    chebyshev_step(psi, h, tau, kappa, DEFAULT_MAX_TERMS, &mut a, &mut b)
}

pub(crate) fn chebyshev_step(
    psi: &mut [C64],
    h: &InstantModel,
    tau: f64,
    kappa: f64,
    max_terms: usize,
    prev: &mut Vec<C64>,
    cur: &mut Vec<C64>,
) -> Result<()> {
    let bound = h.norm_bound();
    if bound == 0.0 || tau == 0.0 {
        return Ok(());
    }
    // A negative time step is the same as evolving -H forward.
    let (z, sign) = if tau >= 0.0 { (tau * bound, 1.0) } else { (-tau * bound, -1.0) };
    let (order, coef) = chebyshev_order(z, kappa, max_terms)?;
    prev.clear();
    prev.extend_from_slice(psi);
    cur.resize(psi.len(), c64(0.0, 0.0));
    let step = c64(0.0, sign / bound);
    if order >= 1 {
        h.apply_axpby(prev, cur, step, c64(0.0, 0.0))?;
    }
    scale(c64(coef[0], 0.0), psi);
    if order >= 1 {
        axpy(c64(-2.0 * coef[1], 0.0), cur, psi);
    }
    for k in 1..order {
        // prev <- 2 i Hn cur + prev, which is T_{k+1}
        h.apply_axpby(cur, prev, step * 2.0, c64(1.0, 0.0))?;
        core::mem::swap(prev, cur);
        let sgn = if (k + 1) % 2 == 0 { 2.0 } else { -2.0 };
        axpy(c64(sgn * coef[k + 1], 0.0), cur, psi);
    }
    Ok(())
}
