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


//! Order finding with a controlled power of a classical reversible map:
//! the order of a permutation of four items and Shor's algorithm for 15.
//!
//! Both programs put the exponent register on qubits 1 to 3 and end with a
//! QFT without swaps, so the register is read out bit-reversed (see
//! [`PeriodSpectrum::from_register`]).

use alloc::vec::Vec;

use super::{gcd, period_closed_form, qft_program, PeriodSpectrum};
use crate::gates::{GateKind, GateProgram};
use crate::{Error, Result};

const EXPONENT_QUBITS: [usize; 3] = [1, 2, 3];

/// A data-register gate: `Not(a)` or `Cnot(control, target)`, on data bit
/// indices.
#[derive(Debug, Clone, Copy, PartialEq)]
enum DataGate {
    Not(usize),
    Cnot(usize, usize),
}

/// Gates swapping items `a` and `b` of a two-bit register. Bit 0 is the
/// lower data qubit.
fn transposition(a: usize, b: usize) -> Vec<DataGate> {
    use DataGate::*;
    // C_jk flips bit j-1 under control of bit k-1; N_j flips bit j-1.
    let (c21, c12) = (Cnot(0, 1), Cnot(1, 0));
    match (a.min(b), a.max(b)) {
        (1, 3) => alloc::vec![c21],
        (2, 3) => alloc::vec![c12],
        (1, 2) => alloc::vec![c12, c21, c12],
        (0, 2) => alloc::vec![c21, Not(1)],
        (0, 1) => alloc::vec![c12, Not(0)],
        (0, 3) => alloc::vec![c12, c21, Not(1), c12],
        _ => Vec::new(),
    }
}

fn check_permutation(perm: &[usize; 4]) -> Result<()> {
    let mut seen = [false; 4];
    for &p in perm {
        if p > 3 || seen[p] {
            return Err(Error::Domain("not a permutation of 0..=3"));
        }
        seen[p] = true;
    }
    Ok(())
}

/// `perm` applied `k` times.
fn power(perm: &[usize; 4], k: usize) -> [usize; 4] {
    let mut out = [0, 1, 2, 3];
    for _ in 0..k {
        out = out.map(|x| perm[x]);
    }
    out
}

/// Transpositions, in application order, composing to `perm`.
fn transpositions(perm: &[usize; 4]) -> Vec<(usize, usize)> {
    // perm = t . rest with t = (a perm(a)); rest has one more fixed point.
    let mut rest = *perm;
    let mut last_first = Vec::new();
    while let Some(a) = (0..4).find(|&x| rest[x] != x) {
        let b = rest[a];
        last_first.push((a, b));
        rest = rest.map(|x| if x == a { b } else if x == b { a } else { x });
    }
    last_first.reverse();
    last_first
}

/// Smallest `r >= 1` with `perm^r(y) = y`.
pub fn permutation_cycle_length(perm: &[usize; 4], y: usize) -> Result<usize> {
    check_permutation(perm)?;
    if y > 3 {
        return Err(Error::Domain("y must be 0..=3"));
    }
    let mut r = 1;
    let mut x = perm[y];
    while x != y {
        x = perm[x];
        r += 1;
    }
    Ok(r)
}

/// Five-qubit order finding for `perm` acting on `y`.
///
/// Qubits 1 to 3 hold the exponent `n`, qubits 4 and 5 hold `y` (qubit 4 is
/// the low bit). The program prepares `|uuu>|y>`, applies `perm^n` to the
/// data register, and Fourier transforms the exponent register. Each
/// transposition of `perm^(2^b)` is lifted to Toffoli and CNOT gates
/// controlled by exponent qubit `b + 1`.
pub fn permutation_order_program(perm: &[usize; 4], y: usize) -> Result<GateProgram> {
    check_permutation(perm)?;
    if y > 3 {
        return Err(Error::Domain("y must be 0..=3"));
    }
    let data = [4, 5];
    let mut p = GateProgram::new(5);
    for b in 0..2 {
        if y >> b & 1 == 1 {
            p.push(GateKind::Not, &[data[b]])?;
        }
    }
    for &q in &EXPONENT_QUBITS {
        p.push(GateKind::Hadamard, &[q])?;
    }
    for (b, &ctrl) in EXPONENT_QUBITS.iter().enumerate() {
        for (x, z) in transpositions(&power(perm, 1 << b)) {
            for g in transposition(x, z) {
                match g {
                    DataGate::Not(t) => p.push(GateKind::Cnot, &[ctrl, data[t]])?,
                    DataGate::Cnot(c, t) => p.push(GateKind::Toffoli, &[ctrl, data[c], data[t]])?,
                };
            }
        }
    }
    p.append(&qft_program(5, &EXPONENT_QUBITS, false)?)?;
    Ok(p)
}

fn check_base(a: u64) -> Result<()> {
    if a < 2 || a >= 15 || gcd(a, 15) != 1 {
        return Err(Error::Domain("a must be coprime to 15 with 1 < a < 15"));
    }
    Ok(())
}

/// Seven-qubit Shor program for 15 with base `a`.
///
/// Qubits 1 to 3 hold the exponent `j` and qubits 4 to 7 hold `f`, low bit
/// first. Starting from `f = 1`, exponent bit 0 multiplies `f` by `a` with
/// CNOTs mapping 1 to `a`, and exponent bit 1 multiplies by `a^2 mod 15`,
/// which is 1 or 4; multiplying by 4 mod 15 rotates the four bits by two
/// places, done with two controlled swaps. `a^4 = 1 mod 15`, so bit 2 needs
/// no gates.
pub fn shor15_program(a: u64) -> Result<GateProgram> {
    check_base(a)?;
    let f = [4, 5, 6, 7];
    let mut p = GateProgram::new(7);
    p.push(GateKind::Not, &[f[0]])?;
    for &q in &EXPONENT_QUBITS {
        p.push(GateKind::Hadamard, &[q])?;
    }
    let flips = 1 ^ a;
    for (b, &q) in f.iter().enumerate() {
        if flips >> b & 1 == 1 {
            p.push(GateKind::Cnot, &[EXPONENT_QUBITS[0], q])?;
        }
    }
    if a * a % 15 == 4 {
        let c = EXPONENT_QUBITS[1];
        for (x, y) in [(f[0], f[2]), (f[1], f[3])] {
            p.push(GateKind::Cnot, &[y, x])?;
            p.push(GateKind::Toffoli, &[c, x, y])?;
            p.push(GateKind::Cnot, &[y, x])?;
        }
    }
    p.append(&qft_program(7, &EXPONENT_QUBITS, false)?)?;
    Ok(p)
}

/// The smallest period whose closed-form spectrum matches `spectrum` within
/// `tol`.
pub fn extract_period(spectrum: &PeriodSpectrum, tol: f64) -> Option<usize> {
    let n = spectrum.probabilities.len();
    (1..=n).find(|&m| period_closed_form(m, n).map_or(false, |s| s.max_diff(spectrum) <= tol))
}

/// Period and factors found by [`shor15_factors`].
#[derive(Debug, Clone, PartialEq)]
pub struct ShorResult {
    pub period: usize,
    /// `gcd(15, a^(M/2) - 1)` and `gcd(15, a^(M/2) + 1)`.
    pub gcds: [u64; 2],
}

/// Classical step of Shor's algorithm: the period from the QFT register and
/// the two gcds. Fails when the period is odd. When `a^(M/2) = -1 mod 15`
/// (base 14) the gcds are the trivial 1 and 15.
pub fn shor15_factors(a: u64, spectrum: &PeriodSpectrum) -> Result<ShorResult> {
    check_base(a)?;
    let m = extract_period(spectrum, 1e-9).ok_or(Error::Domain("spectrum matches no period"))?;
    if m % 2 == 1 {
        return Err(Error::Domain("odd period"));
    }
    let half = (0..m / 2).fold(1u64, |x, _| x * a % 15);
    Ok(ShorResult {
        period: m,
        gcds: [gcd(15, (half + 14) % 15), gcd(15, half + 1)],
    })
}
