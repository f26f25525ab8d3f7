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

use core::fmt;

/// Errors reported by the simulator.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A 1-based qubit index outside `1..=num_qubits`.
    QubitOutOfRange { qubit: usize, num_qubits: usize },
    /// A basis index outside `0..2^L`.
    IndexOutOfRange { index: usize, dim: usize },
    /// Two operands of a two-qubit operation name the same qubit.
    SameQubit(usize),
    /// Operands of different sizes.
    SizeMismatch { left: usize, right: usize },
    /// Amplitude array length is not a power of two, or zero qubits requested.
    BadDimension(usize),
    /// A user-supplied matrix failed the unitarity check.
    NotUnitary { deviation: f64 },
    /// A parameter outside its documented domain.
    Domain(&'static str),
    /// A dense method was asked to materialize a matrix above its size cap.
    DimensionCap { num_qubits: usize, cap: usize },
    /// The Chebyshev expansion needs more terms than allowed.
    TermCap { needed: usize, cap: usize },
    /// The eigensolver did not converge.
    NoConvergence,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::QubitOutOfRange { qubit, num_qubits } => {
                write!(f, "qubit {} out of range 1..={}", qubit, num_qubits)
            }
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {} out of range 0..{}", index, dim)
            }
            Error::SameQubit(q) => write!(f, "operation uses qubit {} twice", q),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {} vs {} qubits", left, right)
            }
            Error::BadDimension(n) => write!(f, "invalid state dimension {}", n),
            Error::NotUnitary { deviation } => {
                write!(f, "matrix is not unitary (deviation {:e})", deviation)
            }
            Error::Domain(msg) => write!(f, "domain error: {}", msg),
            Error::DimensionCap { num_qubits, cap } => write!(
                f,
                "{} qubits exceeds the dense-matrix cap of {} qubits",
                num_qubits, cap
            ),
            Error::TermCap { needed, cap } => {
                write!(f, "expansion needs {} terms, cap is {}", needed, cap)
            }
            Error::NoConvergence => write!(f, "eigensolver did not converge"),
        }
    }
}

#[cfg(feature = "parallel")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
