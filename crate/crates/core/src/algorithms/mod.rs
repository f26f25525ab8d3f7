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


//! Gate-level quantum algorithms: the quantum Fourier transform, period
//! finding, Grover search on four items, the order of a permutation, Shor's
//! algorithm for 15 and a three-input adder.

mod adder;
mod grover;
mod order;

pub use adder::adder3_program;
pub use grover::{grover_program, inversion_about_mean};
pub use order::{
    extract_period, permutation_cycle_length, permutation_order_program, shor15_factors, shor15_program, ShorResult,
};

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::gates::{run, GateKind, GateProgram};
use crate::state::StateVector;
use crate::{c64, Error, Result};

/// Quantum Fourier transform on `qubits`, where `qubits[0]` holds the least
/// significant bit of the register.
///
/// With `include_swaps` the program maps `|j>` to
/// `sum_k e^{2 pi i j k / N} |k> / sqrt(N)`. Without the swaps the output
/// register is bit-reversed: `qubits[0]` holds the most significant bit of `k`.
pub fn qft_program(num_qubits: usize, qubits: &[usize], include_swaps: bool) -> Result<GateProgram> {
    if qubits.is_empty() {
        return Err(Error::Domain("QFT needs at least one qubit"));
    }
    let mut p = GateProgram::new(num_qubits);
    let n = qubits.len();
    for t in (0..n).rev() {
        p.push(GateKind::Hadamard, &[qubits[t]])?;
        for c in (0..t).rev() {
            let angle = PI / (1u64 << (t - c)) as f64;
            p.push(GateKind::CtrlPhase(angle), &[qubits[c], qubits[t]])?;
        }
    }
    if include_swaps {
        for i in 0..n / 2 {
            p.push(GateKind::Swap, &[qubits[i], qubits[n - 1 - i]])?;
        }
    }
    Ok(p)
}

/// Outcome probabilities of a register and the `Q^z` of its qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodSpectrum {
    /// `p_q` for `q = 0..N`.
    pub probabilities: Vec<f64>,
    /// `Q^z` of register bit `b` (bit 0 first).
    pub qubit_expectations: Vec<f64>,
}

impl PeriodSpectrum {
    /// Spectrum of the register on `qubits` (`qubits[0]` = bit 0 of `q`).
    /// With `bit_reversed` the register is read in reverse qubit order, which
    /// undoes a QFT run without swaps.
    pub fn from_register(state: &StateVector, qubits: &[usize], bit_reversed: bool) -> Result<Self> {
        let n = state.num_qubits();
        let mut bits = Vec::with_capacity(qubits.len());
        for &q in qubits {
            bits.push(crate::state::bit_of(q, n)?);
        }
        if bit_reversed {
            bits.reverse();
        }
        let mut probabilities = vec![0.0; 1 << bits.len()];
        for (i, a) in state.amplitudes().iter().enumerate() {
            let q = bits.iter().enumerate().fold(0, |q, (b, &bit)| q | (((i >> bit) & 1) << b));
            probabilities[q] += a.norm_sqr();
        }
        Ok(Self::from_probabilities(probabilities))
    }

    pub fn from_probabilities(probabilities: Vec<f64>) -> Self {
        let width = probabilities.len().trailing_zeros() as usize;
        let qubit_expectations = (0..width)
            .map(|b| probabilities.iter().enumerate().filter(|(q, _)| q >> b & 1 == 1).map(|(_, p)| p).sum())
            .collect();
        PeriodSpectrum {
            probabilities,
            qubit_expectations,
        }
    }

    /// Largest absolute difference of the probabilities.
    pub fn max_diff(&self, other: &PeriodSpectrum) -> f64 {
        if self.probabilities.len() != other.probabilities.len() {
            return f64::INFINITY;
        }
        self.probabilities
            .iter()
            .zip(&other.probabilities)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Closed form of the probability to observe `q` after the QFT of a function
/// with period `m` sampled at `n` points:
/// `M/N^2 F(L) + (N - ML)/N^2 (F(L+1) - F(L))`, `F(L) = sin^2(x L) / sin^2 x`,
/// `x = pi q M / N`, `L = floor(N / M)`.
pub fn period_probability(q: usize, m: usize, n: usize) -> f64 {
    let (mf, nf) = (m as f64, n as f64);
    let l = (n / m) as f64;
    let rest = nf - mf * l;
    if (q * m) % n == 0 {
        // sin x = 0: F(L) = L^2 and F(L+1) - F(L) = 2L + 1.
        return (mf * l * l + rest * (2.0 * l + 1.0)) / (nf * nf);
    }
    let x = PI * (q * m % (2 * n)) as f64 / nf;
    let s = libm::sin(x);
    let f = libm::sin(x * l) / s;
    (mf * f * f + rest * libm::sin(x * (2.0 * l + 1.0)) / s) / (nf * nf)
}

/// [`period_probability`] for all `q`.
pub fn period_closed_form(m: usize, n: usize) -> Result<PeriodSpectrum> {
    check_period(m, n)?;
    Ok(PeriodSpectrum::from_probabilities((0..n).map(|q| period_probability(q, m, n)).collect()))
}

fn check_period(m: usize, n: usize) -> Result<()> {
    if n < 2 || !n.is_power_of_two() || n > 1 << 12 {
        return Err(Error::Domain("N must be a power of two between 2 and 4096"));
    }
    if m == 0 || m > n {
        return Err(Error::Domain("period must satisfy 1 <= M <= N"));
    }
    Ok(())
}

/// Simulates period finding for `f(n) = n mod m` on `N = n_points` values.
///
/// The argument register is qubits `1..=log2 N` and the function register
/// follows it. The state `sum_n |n>|f(n)> / sqrt(N)` is prepared directly,
/// the QFT without swaps runs on the argument register, and the register is
/// read out bit-reversed.
pub fn period_find(m: usize, n_points: usize) -> Result<PeriodSpectrum> {
    check_period(m, n_points)?;
    let width = n_points.trailing_zeros() as usize;
    let fwidth = (usize::BITS - (m - 1).leading_zeros()).max(1) as usize;
    let total = width + fwidth;
    let amp = 1.0 / libm::sqrt(n_points as f64);
    let mut amps = vec![c64(0.0, 0.0); 1 << total];
    for x in 0..n_points {
        amps[x | (x % m) << width] = c64(amp, 0.0);
    }
    let mut state = StateVector::from_amplitudes(amps)?;
    let reg: Vec<usize> = (1..=width).collect();
    run(&mut state, &qft_program(total, &reg, false)?)?;
    PeriodSpectrum::from_register(&state, &reg, true)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
