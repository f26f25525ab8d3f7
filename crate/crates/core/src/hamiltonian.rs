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

//! Spin-1/2 Hamiltonians with time-dependent fields.
//!
//! The generic model is
//!
//! ```text
//! H(t) = - sum_{j<k, a} J^a_{jk} S^a_j S^a_k - sum_{j, a} h^a_j(t) S^a_j
//! h^a_j(t) = hs + ha sin(2 pi f t + phi)
//! ```
//!
//! with `hbar = 1`. A [`SpinModel`] holds the parameters; [`InstantModel`]
//! is the model with the fields evaluated at one instant, which is what the
//! propagators work with.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;

use crate::kernels::for_each_indexed;
use crate::rng::{seeded, uniform, uniform_open};
use crate::state::{bit_of, Axis, StateVector};
use crate::{c64, cis, Error, Result, C64, TWO_PI};

/// `static + amplitude * sin(omega t + phase)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FieldTerm {
    pub static_value: f64,
    pub amplitude: f64,
    /// Angular frequency.
    pub omega: f64,
    pub phase: f64,
}

impl FieldTerm {
    pub fn constant(v: f64) -> Self {
        FieldTerm {
            static_value: v,
            ..Default::default()
        }
    }

    /// `amplitude * sin(omega t + phase)` with angular frequency `omega`.
    pub fn sinusoid(amplitude: f64, omega: f64, phase: f64) -> Self {
        FieldTerm {
            static_value: 0.0,
            amplitude,
            omega,
            phase,
        }
    }

    pub fn value(&self, t: f64) -> f64 {
        if self.amplitude == 0.0 {
            self.static_value
        } else {
            self.static_value + self.amplitude * libm::sin(self.omega * t + self.phase)
        }
    }

    /// `|static| + |amplitude|`, a bound on `|value(t)|` for all `t`.
    pub fn bound(&self) -> f64 {
        self.static_value.abs() + self.amplitude.abs()
    }

    /// True when the value does not depend on time.
    pub fn is_static(&self) -> bool {
        self.amplitude == 0.0 || self.omega == 0.0
    }

    pub fn is_zero(&self) -> bool {
        self.static_value == 0.0 && self.amplitude == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.static_value.is_finite() && self.amplitude.is_finite() && self.omega.is_finite() && self.phase.is_finite()
    }

    fn scaled(&self, s: f64) -> Self {
        FieldTerm {
            static_value: self.static_value * s,
            amplitude: self.amplitude * s,
            ..*self
        }
    }
}

/// Couplings and fields of `L` spins.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinModel {
    num_spins: usize,
    /// `(j, k) -> [J^x, J^y, J^z]` with `j < k`.
    couplings: BTreeMap<(usize, usize), [f64; 3]>,
    /// `fields[j - 1][axis]`
    fields: Vec<[FieldTerm; 3]>,
}

impl SpinModel {
    /// The zero Hamiltonian on `num_spins` spins.
    pub fn new(num_spins: usize) -> Result<Self> {
        if num_spins == 0 || num_spins >= usize::BITS as usize {
            return Err(Error::BadDimension(num_spins));
        }
        Ok(SpinModel {
            num_spins,
            couplings: BTreeMap::new(),
            fields: vec![[FieldTerm::default(); 3]; num_spins],
        })
    }

    pub fn num_spins(&self) -> usize {
        self.num_spins
    }

    /// Sets `J^axis_{jk}`; the pair is stored as `(min, max)`.
    pub fn set_coupling(&mut self, j: usize, k: usize, axis: Axis, value: f64) -> Result<&mut Self> {
        bit_of(j, self.num_spins)?;
        bit_of(k, self.num_spins)?;
        if j == k {
            return Err(Error::SameQubit(j));
        }
        if !value.is_finite() {
            return Err(Error::Domain("coupling must be finite"));
        }
        let key = (j.min(k), j.max(k));
        let entry = self.couplings.entry(key).or_insert([0.0; 3]);
        entry[axis.index()] = value;
        if *entry == [0.0; 3] {
            self.couplings.remove(&key);
        }
        Ok(self)
    }

    /// Sets the same value on all three axes.
    pub fn set_heisenberg(&mut self, j: usize, k: usize, value: f64) -> Result<&mut Self> {
        for a in Axis::ALL {
            self.set_coupling(j, k, a, value)?;
        }
        Ok(self)
    }

    pub fn coupling(&self, j: usize, k: usize, axis: Axis) -> f64 {
        self.couplings
            .get(&(j.min(k), j.max(k)))
            .map_or(0.0, |c| c[axis.index()])
    }

    /// Nonzero couplings in ascending `(j, k)` order as `(j, k, [Jx, Jy, Jz])`.
    pub fn couplings(&self) -> impl Iterator<Item = (usize, usize, [f64; 3])> + '_ {
        self.couplings.iter().map(|(&(j, k), &c)| (j, k, c))
    }

    pub fn set_field(&mut self, j: usize, axis: Axis, term: FieldTerm) -> Result<&mut Self> {
        let b = bit_of(j, self.num_spins)?;
        if !term.is_finite() {
            return Err(Error::Domain("field parameters must be finite"));
        }
        self.fields[b][axis.index()] = term;
        Ok(self)
    }

    pub fn field(&self, j: usize, axis: Axis) -> FieldTerm {
        self.fields[j - 1][axis.index()]
    }

    /// True when no field depends on time.
    pub fn is_static(&self) -> bool {
        self.fields.iter().flatten().all(FieldTerm::is_static)
    }

    /// True when the Hamiltonian is diagonal in the computational basis at
    /// all times.
    pub fn is_z_diagonal(&self) -> bool {
        self.couplings.values().all(|c| c[0] == 0.0 && c[1] == 0.0)
            && self.fields.iter().all(|f| f[0].is_zero() && f[1].is_zero())
    }

    /// The model with every parameter multiplied by `s`; `s = -1` reverses
    /// time.
    pub fn scaled(&self, s: f64) -> SpinModel {
        SpinModel {
            num_spins: self.num_spins,
            couplings: self
                .couplings
                .iter()
                .map(|(&k, c)| (k, [c[0] * s, c[1] * s, c[2] * s]))
                .collect(),
            fields: self
                .fields
                .iter()
                .map(|f| [f[0].scaled(s), f[1].scaled(s), f[2].scaled(s)])
                .collect(),
        }
    }

    /// The Hamiltonian with the fields frozen at time `t`.
    pub fn at(&self, t: f64) -> InstantModel {
        InstantModel {
            num_spins: self.num_spins,
            fields: self
                .fields
                .iter()
                .map(|f| [f[0].value(t), f[1].value(t), f[2].value(t)])
                .collect(),
            pairs: self.couplings().collect(),
        }
    }

    /// Like [`SpinModel::at`] but reuses the buffers of `out`.
    pub fn at_into(&self, t: f64, out: &mut InstantModel) {
        out.num_spins = self.num_spins;
        out.fields.clear();
        out.fields
            .extend(self.fields.iter().map(|f| [f[0].value(t), f[1].value(t), f[2].value(t)]));
        out.pairs.clear();
        out.pairs.extend(self.couplings());
    }

    /// `H(t)|psi>` into a new state; `psi` is left alone.
    pub fn apply_h(&self, psi: &StateVector, t: f64) -> Result<StateVector> {
        let mut out = psi.clone();
        self.at(t).apply(psi.amplitudes(), out.amplitudes_mut())?;
        Ok(out)
    }

    /// `1/4 sum |J| + 1/2 sum (|hs| + |ha|)`, valid for every `t`.
    pub fn norm_bound(&self) -> f64 {
        let j: f64 = self.couplings.values().flatten().map(|v| v.abs()).sum();
        let h: f64 = self.fields.iter().flatten().map(FieldTerm::bound).sum();
        0.25 * j + 0.5 * h
    }
}

/// A Hamiltonian with numeric fields, valid at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct InstantModel {
    pub num_spins: usize,
    /// `fields[j - 1] = [h^x, h^y, h^z]`
    pub fields: Vec<[f64; 3]>,
    /// `(j, k, [J^x, J^y, J^z])` with `j < k`, ascending.
    pub pairs: Vec<(usize, usize, [f64; 3])>,
}

impl InstantModel {
    pub fn dim(&self) -> usize {
        1usize << self.num_spins
    }

    /// `1/4 sum |J| + 1/2 sum |h|`
    pub fn norm_bound(&self) -> f64 {
        let j: f64 = self.pairs.iter().flat_map(|p| p.2).map(f64::abs).sum();
        let h: f64 = self.fields.iter().flatten().map(|v| v.abs()).sum();
        0.25 * j + 0.5 * h
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.iter().all(|p| p.2 == [0.0; 3]) && self.fields.iter().all(|f| *f == [0.0; 3])
    }

    pub fn is_z_diagonal(&self) -> bool {
        self.pairs.iter().all(|p| p.2[0] == 0.0 && p.2[1] == 0.0)
            && self.fields.iter().all(|f| f[0] == 0.0 && f[1] == 0.0)
    }

    /// Diagonal element `<i|H|i>`.
    pub fn diagonal(&self, i: usize) -> f64 {
        diag_terms(self).iter().fold(0.0, |e, &(m, c)| e + parity_term(i, m, c))
    }

    /// `out = H psi`. Each output amplitude gathers its own terms, so the
    /// loop parallelizes over indices.
    pub fn apply(&self, psi: &[C64], out: &mut [C64]) -> Result<()> {
        self.apply_axpby(psi, out, c64(1.0, 0.0), c64(0.0, 0.0))
    }

    /// `out = alpha H psi + beta out`. With `beta = 0` the old contents of
    /// `out` are not read.
    pub fn apply_axpby(&self, psi: &[C64], out: &mut [C64], alpha: C64, beta: C64) -> Result<()> {
        let dim = self.dim();
        if psi.len() != dim || out.len() != dim {
            return Err(Error::SizeMismatch {
                left: psi.len(),
                right: dim,
            });
        }
        let diag = diag_terms(self);
        let singles = single_flips(self);
        let doubles = double_flips(self);
        let keep = beta != c64(0.0, 0.0);
        for_each_indexed(out, |i, o| {
            let mut e = 0.0;
            for &(m, c) in &diag {
                e += parity_term(i, m, c);
            }
            let mut acc = psi[i] * e;
            for &(m, clear, set) in &singles {
                acc += if i & m == 0 { clear } else { set } * psi[i ^ m];
            }
            for &(mj, mk, eq, diff) in &doubles {
                let same = (i & mj == 0) == (i & mk == 0);
                acc += if same { eq } else { diff } * psi[i ^ mj ^ mk];
            }
            *o = if keep { alpha * acc + beta * *o } else { alpha * acc };
        });
        Ok(())
    }
}

/// Diagonal contributions as `(mask, c)`; each adds
/// `c (-1)^{popcount(i & mask)}` to `<i|H|i>`.
pub(crate) fn diag_terms(m: &InstantModel) -> Vec<(usize, f64)> {
    let mut v = Vec::new();
    for (b, f) in m.fields.iter().enumerate() {
        if f[2] != 0.0 {
            v.push((1usize << b, -0.5 * f[2]));
        }
    }
    for &(j, k, c) in &m.pairs {
        if c[2] != 0.0 {
            v.push(((1usize << (j - 1)) | (1usize << (k - 1)), -0.25 * c[2]));
        }
    }
    v
}

#[inline]
pub(crate) fn parity_term(i: usize, m: usize, c: f64) -> f64 {
    if (i & m).count_ones() % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `(mask, coefficient if bit clear, coefficient if bit set)`
fn single_flips(m: &InstantModel) -> Vec<(usize, C64, C64)> {
    m.fields
        .iter()
        .enumerate()
        .filter(|(_, f)| f[0] != 0.0 || f[1] != 0.0)
        .map(|(b, f)| (1usize << b, c64(-0.5 * f[0], 0.5 * f[1]), c64(-0.5 * f[0], -0.5 * f[1])))
        .collect()
}

/// `(mask_j, mask_k, coefficient for equal bits, for different bits)`
fn double_flips(m: &InstantModel) -> Vec<(usize, usize, C64, C64)> {
    m.pairs
        .iter()
        .filter(|p| p.2[0] != 0.0 || p.2[1] != 0.0)
        .map(|&(j, k, c)| {
            (
                1usize << (j - 1),
                1usize << (k - 1),
                c64(-0.25 * (c[0] - c[1]), 0.0),
                c64(-0.25 * (c[0] + c[1]), 0.0),
            )
        })
        .collect()
}

/// One piecewise-constant segment of a physical program. The fields of
/// `model` are evaluated on a local clock that starts at 0 when the
/// segment starts.
#[derive(Debug, Clone, PartialEq)]
pub struct Microinstruction {
    pub label: String,
    /// Duration divided by `2 pi`.
    pub duration_over_2pi: f64,
    pub model: SpinModel,
}

impl Microinstruction {
    pub fn new(label: impl Into<String>, duration_over_2pi: f64, model: SpinModel) -> Result<Self> {
        if !(duration_over_2pi > 0.0) || !duration_over_2pi.is_finite() {
            return Err(Error::Domain("microinstruction duration must be positive"));
        }
        Ok(Microinstruction {
            label: label.into(),
            duration_over_2pi,
            model,
        })
    }

    pub fn duration(&self) -> f64 {
        self.duration_over_2pi * TWO_PI
    }
}

/// Ising-type model: `zz` couplings `(j, k, J)` and fields `(j, [hx, hy, hz])`.
pub fn build_ising(num_spins: usize, couplings: &[(usize, usize, f64)], fields: &[(usize, [f64; 3])]) -> Result<SpinModel> {
    let mut m = SpinModel::new(num_spins)?;
    for &(j, k, v) in couplings {
        m.set_coupling(j, k, Axis::Z, v)?;
    }
    for &(j, h) in fields {
        for a in Axis::ALL {
            m.set_field(j, a, FieldTerm::constant(h[a.index()]))?;
        }
    }
    Ok(m)
}

/// Zz coupling of the two-spin NMR molecule.
pub const CHLOROFORM_J: f64 = -0.43e-6;
/// Static fields of spins 1 and 2 in units of the spin-1 field.
pub const CHLOROFORM_H: [f64; 2] = [1.0, 0.25];

/// The two-spin NMR model with static fields only.
pub fn build_chloroform() -> SpinModel {
    let mut m = SpinModel::new(2).expect("two spins");
    m.set_coupling(1, 2, Axis::Z, CHLOROFORM_J).expect("valid");
    m.set_field(1, Axis::Z, FieldTerm::constant(CHLOROFORM_H[0])).expect("valid");
    m.set_field(2, Axis::Z, FieldTerm::constant(CHLOROFORM_H[1])).expect("valid");
    m
}

/// Two central spins with exchange `j0` coupled to `L - 2` bath spins with
/// random exchange `J_n` uniform in `(0, jmax)`.
///
/// `J0 (S1 + S2)^2 + sum_n J_n I_n.(S1 + S2)` is written in the generic
/// form, dropping the constant `3 J0 / 2`.
pub fn build_spin_bath(num_spins: usize, j0: f64, jmax: f64, seed: u64) -> Result<SpinModel> {
    if num_spins < 3 {
        return Err(Error::BadDimension(num_spins));
    }
    let mut rng = seeded(seed);
    let mut m = SpinModel::new(num_spins)?;
    m.set_heisenberg(1, 2, -2.0 * j0)?;
    for n in 3..=num_spins {
        let jn = uniform_open(&mut rng, 0.0, jmax);
        m.set_heisenberg(1, n, -jn)?;
        m.set_heisenberg(2, n, -jn)?;
    }
    Ok(m)
}

fn random_spinor(rng: &mut ChaCha8Rng) -> [C64; 2] {
    let cos_theta = 2.0 * uniform(rng) - 1.0;
    let phi = TWO_PI * uniform(rng);
    let half = libm::acos(cos_theta.clamp(-1.0, 1.0)) / 2.0;
    [c64(libm::cos(half), 0.0), cis(phi) * libm::sin(half)]
}

/// Spin 1 up, spin 2 down, every bath spin a uniformly random pure state.
pub fn random_bath_state(num_spins: usize, seed: u64) -> Result<StateVector> {
    if num_spins < 3 {
        return Err(Error::BadDimension(num_spins));
    }
    let mut rng = seeded(seed);
    // A separate stream keeps the state independent of the couplings drawn
    // by build_spin_bath with the same seed.
    rng.set_stream(1);
    let one = c64(1.0, 0.0);
    let zero = c64(0.0, 0.0);
    let mut spins = vec![[one, zero], [zero, one]];
    for _ in 2..num_spins {
        spins.push(random_spinor(&mut rng));
    }
    let mut s = StateVector::product(&spins)?;
    s.normalize();
    Ok(s)
}

fn expect_len<T>(v: &[T], n: usize) -> Result<()> {
    if v.len() != n {
        Err(Error::SizeMismatch { left: v.len(), right: n })
    } else {
        Ok(())
    }
}

/// Linear quantum-dot array on an open chain:
/// `-sum E_j S^z_j S^z_{j+1} - sum h^x_j(t) S^x_j + E0 sum P_j(t) S^z_j`
/// with `E_j = E0` for odd `j` and `2 E0` for even `j`.
pub fn build_quantum_dot(num_spins: usize, e0: f64, hx: &[FieldTerm], p: &[FieldTerm]) -> Result<SpinModel> {
    expect_len(hx, num_spins)?;
    expect_len(p, num_spins)?;
    let mut m = SpinModel::new(num_spins)?;
    for j in 1..num_spins {
        let ej = if j % 2 == 1 { e0 } else { 2.0 * e0 };
        m.set_coupling(j, j + 1, Axis::Z, ej)?;
    }
    for j in 1..=num_spins {
        m.set_field(j, Axis::X, hx[j - 1])?;
        m.set_field(j, Axis::Z, p[j - 1].scaled(-e0))?;
    }
    Ok(m)
}

/// Josephson-junction qubits on an open chain:
/// `-2 E_I sum S^y_j S^y_{j+1} - E_J sum S^x_j - sum h^z_j(t) S^z_j`.
/// A time-dependent `E_I` is a sequence of microinstructions with different
/// `ei`.
pub fn build_josephson(num_spins: usize, ej: f64, ei: f64, hz: &[FieldTerm]) -> Result<SpinModel> {
    expect_len(hz, num_spins)?;
    let mut m = SpinModel::new(num_spins)?;
    for j in 1..num_spins {
        m.set_coupling(j, j + 1, Axis::Y, 2.0 * ei)?;
    }
    for j in 1..=num_spins {
        m.set_field(j, Axis::X, FieldTerm::constant(ej))?;
        m.set_field(j, Axis::Z, hz[j - 1])?;
    }
    Ok(m)
}
