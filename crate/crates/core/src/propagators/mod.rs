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

//! Time evolution `|psi(t + tau)> = U(t + tau, t) |psi(t)>`.
//!
//! A time-dependent Hamiltonian is treated as piecewise constant: the
//! interval is cut into substeps of length `dt` (the last one shorter) and
//! each substep uses `H` at its midpoint. Every backend then propagates one
//! substep with a constant Hamiltonian.
//!
//! Time steps in [`PropagatorConfig`] are given divided by `2 pi`, like all
//! durations in program files. The `tau` and `t0` arguments of the
//! functions here are plain times.

pub mod bessel;
mod chebyshev;
mod diag;
mod lanczos;
mod suzuki;

use alloc::vec::Vec;

pub use bessel::{bessel_coeffs, chebyshev_order};
pub use chebyshev::{kernel_chebyshev, DEFAULT_KAPPA, DEFAULT_MAX_TERMS};
pub use diag::{dense_matrix, diagonalize, kernel_diag, DEFAULT_MAX_SPINS};
pub use lanczos::{kernel_lanczos, BREAKDOWN, DEFAULT_ORDER};
pub use suzuki::{fourth_order_weight, kernel_st, pair_exponential, single_spin_exponential, Split, SuzukiWorkspace};

use crate::eigen::HermitianEigen;
use crate::hamiltonian::{diag_terms, parity_term, InstantModel, Microinstruction, SpinModel};
use crate::state::StateVector;
use crate::{cis, Error, Result, C64, TWO_PI};

/// Propagation algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Diag,
    Chebyshev,
    Lanczos,
    St2Pair,
    St4Pair,
    St2Xyz,
    St4Xyz,
}

impl Backend {
    pub const ALL: [Backend; 7] = [
        Backend::Diag,
        Backend::Chebyshev,
        Backend::Lanczos,
        Backend::St2Pair,
        Backend::St4Pair,
        Backend::St2Xyz,
        Backend::St4Xyz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Diag => "diag",
            Backend::Chebyshev => "chebyshev",
            Backend::Lanczos => "lanczos",
            Backend::St2Pair => "st2-pair",
            Backend::St4Pair => "st4-pair",
            Backend::St2Xyz => "st2-xyz",
            Backend::St4Xyz => "st4-xyz",
        }
    }

    pub fn from_name(s: &str) -> Option<Backend> {
        Backend::ALL.into_iter().find(|b| b.name().eq_ignore_ascii_case(s))
    }

    /// Order and split of the Suzuki-Trotter backends.
    pub fn suzuki(self) -> Option<(usize, Split)> {
        match self {
            Backend::St2Pair => Some((2, Split::Pair)),
            Backend::St4Pair => Some((4, Split::Pair)),
            Backend::St2Xyz => Some((2, Split::Xyz)),
            Backend::St4Xyz => Some((4, Split::Xyz)),
            _ => None,
        }
    }
}

/// Backend choice and its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorConfig {
    pub backend: Backend,
    /// Substep length divided by `2 pi`.
    pub dt_over_2pi: f64,
    pub lanczos_order: usize,
    pub lanczos_reorthogonalize: bool,
    pub cheb_kappa: f64,
    pub cheb_max_terms: usize,
    pub diag_max_spins: usize,
}

impl Default for PropagatorConfig {
    fn default() -> Self {
        PropagatorConfig {
            backend: Backend::St4Pair,
            dt_over_2pi: 0.01,
            lanczos_order: DEFAULT_ORDER,
            lanczos_reorthogonalize: false,
            cheb_kappa: DEFAULT_KAPPA,
            cheb_max_terms: DEFAULT_MAX_TERMS,
            diag_max_spins: DEFAULT_MAX_SPINS,
        }
    }
}

impl PropagatorConfig {
    pub fn with_backend(backend: Backend) -> Self {
        PropagatorConfig {
            backend,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt_over_2pi > 0.0) || !self.dt_over_2pi.is_finite() {
            return Err(Error::Domain("time step must be positive"));
        }
        if self.lanczos_order < 2 {
            return Err(Error::Domain("Lanczos order must be at least 2"));
        }
        if !(self.cheb_kappa > 0.0 && self.cheb_kappa < 1.0) {
            return Err(Error::Domain("Chebyshev threshold must lie in (0, 1)"));
        }
        Ok(())
    }

    pub fn dt(&self) -> f64 {
        self.dt_over_2pi * TWO_PI
    }
}

/// A configured propagator with its scratch space and caches.
///
/// The diagonalization backend keeps the last eigen-decomposition, so a
/// static Hamiltonian is diagonalized once.
#[derive(Debug, Clone)]
pub struct Propagator {
    cfg: PropagatorConfig,
    inst: InstantModel,
    diag_cache: Option<(InstantModel, HermitianEigen)>,
    suzuki: SuzukiWorkspace,
    buf_a: Vec<C64>,
    buf_b: Vec<C64>,
    krylov: Vec<Vec<C64>>,
}

impl Propagator {
    pub fn new(cfg: PropagatorConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Propagator {
            cfg,
            inst: InstantModel {
                num_spins: 0,
                fields: Vec::new(),
                pairs: Vec::new(),
            },
            diag_cache: None,
            suzuki: SuzukiWorkspace::default(),
            buf_a: Vec::new(),
            buf_b: Vec::new(),
            krylov: Vec::new(),
        })
    }

    pub fn config(&self) -> &PropagatorConfig {
        &self.cfg
    }

    /// Evolves `state` from `t0` to `t0 + tau` under `model`.
    ///
    /// A static model that is diagonal in the computational basis is
    /// propagated in one exact step, whatever the backend.
    pub fn evolve(&mut self, state: &mut StateVector, model: &SpinModel, t0: f64, tau: f64) -> Result<()> {
        if model.num_spins() != state.num_qubits() {
            return Err(Error::SizeMismatch {
                left: state.num_qubits(),
                right: model.num_spins(),
            });
        }
        if !(tau >= 0.0) || !tau.is_finite() {
            return Err(Error::Domain("evolution time must be non-negative"));
        }
        if tau == 0.0 {
            return Ok(());
        }
        if model.is_static() && model.is_z_diagonal() {
            model.at_into(t0, &mut self.inst);
            exact_diagonal_step(state, &self.inst, tau);
            return Ok(());
        }
        let dt = self.cfg.dt();
        let n = libm::ceil(tau / dt - 1e-9).max(1.0) as usize;
        for k in 0..n {
            let start = k as f64 * dt;
            let h = if k + 1 == n { tau - start } else { dt };
            model.at_into(t0 + start + h / 2.0, &mut self.inst);
            self.step_current(state, h)?;
        }
        Ok(())
    }

    /// Runs one microinstruction on its local clock.
    pub fn run_micro(&mut self, state: &mut StateVector, micro: &Microinstruction) -> Result<()> {
        self.evolve(state, &micro.model, 0.0, micro.duration())
    }

    /// One backend step of length `tau` with the constant Hamiltonian `h`.
    pub fn step(&mut self, state: &mut StateVector, h: &InstantModel, tau: f64) -> Result<()> {
        self.inst.clone_from(h);
        self.step_current(state, tau)
    }

    fn step_current(&mut self, state: &mut StateVector, tau: f64) -> Result<()> {
        let h = &self.inst;
        if h.num_spins != state.num_qubits() {
            return Err(Error::SizeMismatch {
                left: state.num_qubits(),
                right: h.num_spins,
            });
        }
        if h.is_zero() {
            return Ok(());
        }
        match self.cfg.backend {
            Backend::Diag => {
                let hit = matches!(&self.diag_cache, Some((m, _)) if m == h);
                if !hit {
                    let eig = diagonalize(h, self.cfg.diag_max_spins)?;
                    self.diag_cache = Some((h.clone(), eig));
                }
                let (_, eig) = self.diag_cache.as_ref().expect("filled above");
                eig.apply_exp(tau, state.amplitudes_mut());
                Ok(())
            }
            Backend::Chebyshev => chebyshev::chebyshev_step(
                state.amplitudes_mut(),
                h,
                tau,
                self.cfg.cheb_kappa,
                self.cfg.cheb_max_terms,
                &mut self.buf_a,
                &mut self.buf_b,
            ),
            Backend::Lanczos => lanczos::lanczos_step(
                state.amplitudes_mut(),
                h,
                tau,
                self.cfg.lanczos_order,
                self.cfg.lanczos_reorthogonalize,
                &mut self.krylov,
            ),
            b => {
                let (order, split) = b.suzuki().expect("Suzuki backend");
                suzuki::st_step(state, h, tau, order, split, &mut self.suzuki)
            }
        }
    }
}

/// `psi_i <- exp(-i tau <i|H|i>) psi_i` for a diagonal `H`.
fn exact_diagonal_step(state: &mut StateVector, h: &InstantModel, tau: f64) {
    let terms = diag_terms(h);
    state.apply_diagonal(|i| {
        let e = terms.iter().fold(0.0, |e, &(m, c)| e + parity_term(i, m, c));
        cis(-tau * e)
    });
}

/// Evolves `state` from `t0` to `t0 + tau` with a fresh propagator.
pub fn evolve(state: &mut StateVector, model: &SpinModel, t0: f64, tau: f64, cfg: &PropagatorConfig) -> Result<()> {
    Propagator::new(*cfg)?.evolve(state, model, t0, tau)
}
