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

//! Exact propagation by full diagonalization, `U = V exp(-i tau L) V^dagger`.

use alloc::vec;
use alloc::vec::Vec;

use crate::dense::DenseMatrix;
use crate::eigen::{hermitian_eigen, HermitianEigen};
use crate::hamiltonian::InstantModel;
use crate::{c64, Error, Result, C64};

/// Largest number of spins for which a dense matrix is built by default.
pub const DEFAULT_MAX_SPINS: usize = 13;

/// The dense matrix of `H`, one column per basis vector.
pub fn dense_matrix(h: &InstantModel) -> Result<DenseMatrix> {
    let dim = h.dim();
    let mut cols = Vec::with_capacity(dim);
    let mut e = vec![c64(0.0, 0.0); dim];
    for i in 0..dim {
        e[i] = c64(1.0, 0.0);
        let mut col = vec![c64(0.0, 0.0); dim];
        h.apply(&e, &mut col)?;
        e[i] = c64(0.0, 0.0);
        cols.push(col);
    }
    Ok(DenseMatrix::from_columns(&cols))
}

/// Eigen-decomposition of `H`, refusing more than `max_spins` spins.
pub fn diagonalize(h: &InstantModel, max_spins: usize) -> Result<HermitianEigen> {
    if h.num_spins > max_spins {
        return Err(Error::DimensionCap {
            num_qubits: h.num_spins,
            cap: max_spins,
        });
    }
    hermitian_eigen(&dense_matrix(h)?)
}

/// `psi <- exp(-i tau H) psi` by diagonalizing `H`.
pub fn kernel_diag(psi: &mut [C64], h: &InstantModel, tau: f64, max_spins: usize) -> Result<()> {
    diagonalize(h, max_spins)?.apply_exp(tau, psi);
    Ok(())
}
