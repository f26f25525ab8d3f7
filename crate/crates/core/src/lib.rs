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

//! State-vector simulation of spin-1/2 quantum computers.
//!
//! The crate covers two ways of running a quantum program. Ideal gate-level
//! programs act on the state through exact unitaries. Physical programs are
//! sequences of [`Microinstruction`]s, each a piece of a time-dependent spin
//! Hamiltonian that is integrated with one of the propagators in
//! [`propagators`].
//!
//! Qubit indices are 1-based at the API surface. Qubit `j` is bit `j - 1` of
//! the amplitude index, so qubit 1 is the least significant bit. The basis
//! state `|0>` of a qubit is spin up.
//!
//! The crate is `no_std` and needs only `alloc`. The `parallel` feature pulls
//! in `std` and splits the amplitude kernels over a rayon thread pool.

#![no_std]

extern crate alloc;

#[cfg(any(test, feature = "parallel"))]
extern crate std;

pub mod algorithms;
pub mod dense;
pub mod eigen;
mod error;
pub mod gates;
pub mod hamiltonian;
mod kernels;
pub mod propagators;
pub mod pulse;
pub mod rng;
pub mod state;

pub use error::{Error, Result};
pub use gates::{GateKind, GateOp, GateProgram};
pub use hamiltonian::{FieldTerm, Microinstruction, SpinModel};
pub use propagators::{Backend, PropagatorConfig};
pub use state::{Axis, QubitExpectation, StateVector};

/// Complex amplitude type used everywhere.
pub type C64 = num_complex::Complex64;

/// 2×2 complex matrix, row-major.
pub type Mat2 = [[C64; 2]; 2];

/// 4×4 complex matrix, row-major. For qubits `(j, k)` the row/column index
/// is `2 * bit_k + bit_j`.
pub type Mat4 = [[C64; 4]; 4];

pub(crate) const TWO_PI: f64 = 2.0 * core::f64::consts::PI;

#[inline]
pub(crate) fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `e^{i phi}`
#[inline]
pub fn cis(phi: f64) -> C64 {
    C64::new(libm::cos(phi), libm::sin(phi))
}
