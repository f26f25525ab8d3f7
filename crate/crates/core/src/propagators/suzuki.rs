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

//! Suzuki-Trotter product formulas.
//!
//! `H` is split into factors whose exponentials are known in closed form.
//! The pair split uses one 2×2 factor per spin field and one 4×4 factor per
//! coupled pair. The XYZ split uses the spin fields, then all zz couplings
//! as one diagonal phase, then the xx and yy couplings as the same diagonal
//! form after rotating every spin so that x (or y) becomes z.
//!
//! The second-order brick sweeps the factors forward with `t/2` and back
//! with `t/2`; the fourth-order formula chains five bricks.

use alloc::vec::Vec;

use crate::hamiltonian::{parity_term, InstantModel};
use crate::state::{Axis, StateVector};
use crate::gates::GateKind;
use crate::{c64, cis, Mat2, Mat4, Result, C64};

/// How `H` is cut into exactly solvable factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    Pair,
    Xyz,
}

/// `exp(i t h.S)`; the factor for a field term `-h.S` of `H`.
pub fn single_spin_exponential(h: [f64; 3], t: f64) -> Mat2 {
    let norm = libm::sqrt(h[0] * h[0] + h[1] * h[1] + h[2] * h[2]);
    if norm == 0.0 {
        return [[c64(1.0, 0.0), c64(0.0, 0.0)], [c64(0.0, 0.0), c64(1.0, 0.0)]];
    }
    let (c, s) = (libm::cos(t * norm / 2.0), libm::sin(t * norm / 2.0));
    let (x, y, z) = (h[0] / norm * s, h[1] / norm * s, h[2] / norm * s);
    [[c64(c, z), c64(y, x)], [c64(-y, x), c64(c, -z)]]
}

/// `exp(i t (Jx SxSx + Jy SySy + Jz SzSz))` in `(bit_k bit_j)` order; the
/// factor for a coupling term of `H`.
pub fn pair_exponential(j: [f64; 3], t: f64) -> Mat4 {
    let a = j[2] / 4.0;
    let b = (j[0] - j[1]) / 4.0;
    let c = (j[0] + j[1]) / 4.0;
    let z = c64(0.0, 0.0);
    let ea = cis(a * t);
    let eb = cis(-a * t);
    let (cb, sb) = (libm::cos(b * t), libm::sin(b * t));
    let (cc, sc) = (libm::cos(c * t), libm::sin(c * t));
    let mut m = [[z; 4]; 4];
    // |00>, |11> block
    m[0][0] = ea * cb;
    m[3][3] = ea * cb;
    m[0][3] = ea * c64(0.0, sb);
    m[3][0] = ea * c64(0.0, sb);
    // |01>, |10> block
    m[1][1] = eb * cc;
    m[2][2] = eb * cc;
    m[1][2] = eb * c64(0.0, sc);
    m[2][1] = eb * c64(0.0, sc);
    m
}

/// `a = 1 / (4 - 4^{1/3})` of the fourth-order formula.
pub fn fourth_order_weight() -> f64 {
    1.0 / (4.0 - libm::cbrt(4.0))
}

/// Cached diagonal tables of the XYZ split.
#[derive(Debug, Default, Clone)]
pub struct SuzukiWorkspace {
    pairs: Vec<(usize, usize, [f64; 3])>,
    num_spins: usize,
    /// `sum_{pairs} J^a/4 (-1)^{parity}` per axis, or empty if no such term.
    energies: [Vec<f64>; 3],
    /// `(axis, t, exp(i t E_a))`
    phases: Vec<(usize, u64, Vec<C64>)>,
}

const MAX_PHASE_TABLES: usize = 8;

impl SuzukiWorkspace {
    fn refresh(&mut self, h: &InstantModel) {
        if self.num_spins == h.num_spins && self.pairs == h.pairs {
            return;
        }
        self.num_spins = h.num_spins;
        self.pairs.clone_from(&h.pairs);
        self.phases.clear();
        let dim = h.dim();
        for a in 0..3 {
            let terms: Vec<(usize, f64)> = h
                .pairs
                .iter()
                .filter(|p| p.2[a] != 0.0)
                .map(|&(j, k, c)| ((1usize << (j - 1)) | (1usize << (k - 1)), c[a] / 4.0))
                .collect();
            self.energies[a] = if terms.is_empty() {
                Vec::new()
            } else {
                (0..dim)
                    .map(|i| terms.iter().fold(0.0, |e, &(m, c)| e + parity_term(i, m, c)))
                    .collect()
            };
        }
    }

    fn phase_table(&mut self, axis: usize, t: f64) -> &[C64] {
        let key = t.to_bits();
        let pos = self.phases.iter().position(|(a, k, _)| *a == axis && *k == key);
        let idx = match pos {
            Some(i) => i,
            None => {
                if self.phases.len() >= MAX_PHASE_TABLES {
                    self.phases.remove(0);
                }
                let table = self.energies[axis].iter().map(|&e| cis(t * e)).collect();
                self.phases.push((axis, key, table));
                self.phases.len() - 1
            }
        };
        &self.phases[idx].2
    }
}

fn apply_fields(state: &mut StateVector, h: &InstantModel, t: f64, reverse: bool) -> Result<()> {
    let n = h.fields.len();
    for s in 0..n {
        let j = if reverse { n - 1 - s } else { s };
        let f = h.fields[j];
        if f != [0.0; 3] {
            state.apply_1q(j + 1, &single_spin_exponential(f, t))?;
        }
    }
    Ok(())
}

fn apply_pairs(state: &mut StateVector, h: &InstantModel, t: f64, reverse: bool) -> Result<()> {
    let n = h.pairs.len();
    for s in 0..n {
        let (j, k, c) = h.pairs[if reverse { n - 1 - s } else { s }];
        if c != [0.0; 3] {
            state.apply_2q(j, k, &pair_exponential(c, t))?;
        }
    }
    Ok(())
}

/// `exp(i t sum J^a S^a S^a)` for one axis, by rotating that axis onto z.
fn apply_axis(state: &mut StateVector, ws: &mut SuzukiWorkspace, axis: Axis, t: f64) -> Result<()> {
    let a = axis.index();
    if ws.energies[a].is_empty() {
        return Ok(());
    }
    // Ybar S^z Y = S^x, and Xbar S^z X = -S^y (the sign cancels in pairs).
    let (rot, back) = match axis {
        Axis::X => (GateKind::Y.matrix1(), GateKind::Ybar.matrix1()),
        Axis::Y => (GateKind::X.matrix1(), GateKind::Xbar.matrix1()),
        Axis::Z => (None, None),
    };
    let mut involved: u64 = 0;
    for &(j, k, c) in &ws.pairs {
        if c[a] != 0.0 {
            involved |= (1 << (j - 1)) | (1 << (k - 1));
        }
    }
    let spins = ws.num_spins;
    if let Some(r) = rot {
        for j in 1..=spins {
            if involved & (1 << (j - 1)) != 0 {
                state.apply_1q(j, &r)?;
            }
        }
    }
    let table = ws.phase_table(a, t);
    for (x, p) in state.amplitudes_mut().iter_mut().zip(table) {
        *x *= p;
    }
    if let Some(r) = back {
        for j in 1..=spins {
            if involved & (1 << (j - 1)) != 0 {
                state.apply_1q(j, &r)?;
            }
        }
    }
    Ok(())
}

fn half_sweep(
    state: &mut StateVector,
    h: &InstantModel,
    t: f64,
    split: Split,
    ws: &mut SuzukiWorkspace,
    reverse: bool,
) -> Result<()> {
    match split {
        Split::Pair => {
            if reverse {
                apply_pairs(state, h, t, true)?;
                apply_fields(state, h, t, true)
            } else {
                apply_fields(state, h, t, false)?;
                apply_pairs(state, h, t, false)
            }
        }
        Split::Xyz => {
            let order = if reverse { [Axis::Y, Axis::X, Axis::Z] } else { [Axis::Z, Axis::X, Axis::Y] };
            if !reverse {
                apply_fields(state, h, t, false)?;
            }
            for ax in order {
                apply_axis(state, ws, ax, t)?;
            }
            if reverse {
                apply_fields(state, h, t, true)?;
            }
            Ok(())
        }
    }
}

fn brick2(state: &mut StateVector, h: &InstantModel, t: f64, split: Split, ws: &mut SuzukiWorkspace) -> Result<()> {
    half_sweep(state, h, t / 2.0, split, ws, false)?;
    half_sweep(state, h, t / 2.0, split, ws, true)
}

/// One Suzuki-Trotter step `psi <- U_order(tau) psi` of order 2 or 4.
pub fn kernel_st(state: &mut StateVector, h: &InstantModel, tau: f64, order: usize, split: Split) -> Result<()> {
    let mut ws = SuzukiWorkspace::default();
    st_step(state, h, tau, order, split, &mut ws)
}

pub(crate) fn st_step(
    state: &mut StateVector,
    h: &InstantModel,
    tau: f64,
    order: usize,
    split: Split,
    ws: &mut SuzukiWorkspace,
) -> Result<()> {
    if split == Split::Xyz {
        ws.refresh(h);
    }
    match order {
        2 => brick2(state, h, tau, split, ws),
        4 => {
            let a = fourth_order_weight();
            brick2(state, h, a * tau, split, ws)?;
            brick2(state, h, a * tau, split, ws)?;
            brick2(state, h, (1.0 - 4.0 * a) * tau, split, ws)?;
            brick2(state, h, a * tau, split, ws)?;
            brick2(state, h, a * tau, split, ws)
        }
        _ => Err(crate::Error::Domain("Suzuki-Trotter order must be 2 or 4")),
    }
}
