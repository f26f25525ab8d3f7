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


//! Pulse design for the two-spin NMR machine.
//!
//! Single-spin rotations are rotating sinusoidal fields tuned to the Larmor
//! frequency of the target spin. Durations and amplitudes follow the 2πk
//! method: the pulse lasts long enough that the other spin makes a whole
//! number of turns about its effective field and comes back unchanged.
//! Times are in units of `1 / h_1^z`, with `h_1^z = 1`.
//!
//! Sequences are written as lists of [`NmrStep`] in application order. Each
//! step has a physical form ([`NmrStep::microinstruction`]) and an ideal
//! gate form ([`NmrStep::ideal_op`]).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::gates::{GateKind, GateOp, GateProgram};
use crate::hamiltonian::{build_chloroform, FieldTerm, Microinstruction, CHLOROFORM_H, CHLOROFORM_J};
use crate::state::Axis;
use crate::{Error, Result, TWO_PI};

/// `tau / 2 pi` of the free evolution `I'`, with `tau J = -pi` rounded to the
/// digits the machine needs.
pub const INTERACTION_DURATION_OVER_2PI: f64 = 1_162_790.6977;

/// Pulse parameters of the 2πk method with `gamma = N / M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoPiKParams {
    pub k: u64,
    pub n: u64,
    pub m: u64,
}

impl TwoPiKParams {
    pub fn new(k: u64, n: u64, m: u64) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::Domain("k and N must be positive"));
        }
        if n >= m {
            return Err(Error::Domain("2pi-k method needs 0 < N < M"));
        }
        Ok(TwoPiKParams { k, n, m })
    }

    /// Parameters for the NMR machine (`N = 1`, `M = 4`) labelled by
    /// `s = 2 k M N^2`.
    pub fn from_s(s: u64) -> Result<Self> {
        if s == 0 || s % 8 != 0 {
            return Err(Error::Domain("s must be a positive multiple of 8"));
        }
        TwoPiKParams::new(s / 8, 1, 4)
    }

    pub fn gamma(&self) -> f64 {
        self.n as f64 / self.m as f64
    }

    /// `s = 2 k M N^2`, the spin-1 pulse duration over `2 pi`.
    pub fn s(&self) -> u64 {
        2 * self.k * self.m * self.n * self.n
    }

    /// `2 k N M (M - N)`. The other spin is left alone when this is large.
    pub fn separation(&self) -> u64 {
        2 * self.k * self.n * self.m * (self.m - self.n)
    }

    /// The advisory check `2 k N M (M - N) >= 8`.
    pub fn well_separated(&self) -> bool {
        self.separation() >= 8
    }

    /// `k_1 = k M N^2` and `k_2 = k N M^2`, the numbers of Larmor half-turns
    /// (in units of `4 pi`) of the target spin during its own pulse.
    pub fn larmor_turns(&self) -> [u64; 2] {
        [self.k * self.m * self.n * self.n, self.k * self.n * self.m * self.m]
    }

    /// `n_1 = k N^2 (M - N)` and `n_2 = k M^2 (M - N)`, the whole turns of the
    /// other spin about its effective field.
    pub fn idle_turns(&self) -> [u64; 2] {
        let d = self.m - self.n;
        [self.k * self.n * self.n * d, self.k * self.m * self.m * d]
    }

    /// Pulse duration over `2 pi` for a pulse on `spin`.
    pub fn duration_over_2pi(&self, spin: usize) -> Result<f64> {
        match spin {
            1 => Ok(self.s() as f64),
            2 => Ok((2 * self.k * self.m * self.m * self.m) as f64),
            _ => Err(Error::QubitOutOfRange { qubit: spin, num_qubits: 2 }),
        }
    }

    /// `(1 - gamma)^2 k_1^2 + (gamma^2 / 4) (phi / 2 pi)^2 - n_1^2` for a
    /// spin-1 pulse, and the mirrored expression for spin 2. Both vanish
    /// when the pulse leaves the other spin exactly alone.
    pub fn condition_residual(&self, spin: usize, angle: f64) -> Result<f64> {
        let g = self.gamma();
        let [k1, k2] = self.larmor_turns();
        let [n1, n2] = self.idle_turns();
        let a = angle / TWO_PI;
        match spin {
            1 => Ok(sq((1.0 - g) * k1 as f64) + g * g / 4.0 * a * a - sq(n1 as f64)),
            2 => Ok(sq((1.0 - 1.0 / g) * k2 as f64) + a * a / (4.0 * g * g) - sq(n2 as f64)),
            _ => Err(Error::QubitOutOfRange { qubit: spin, num_qubits: 2 }),
        }
    }
}

fn sq(x: f64) -> f64 {
    x * x
}

/// One rotating-field pulse on the two-spin machine.
///
/// The field on spin `j` is `h^x = amp_x[j] sin(omega t + phase_x)` and
/// `h^y = amp_y[j] sin(omega t + phase_y)`, with `t` the local time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSpec {
    pub duration_over_2pi: f64,
    pub omega: f64,
    pub amp_x: [f64; 2],
    pub amp_y: [f64; 2],
    pub phase_x: f64,
    pub phase_y: f64,
}

impl PulseSpec {
    /// The chloroform model with this pulse's fields switched on.
    pub fn microinstruction(&self, label: impl Into<String>) -> Result<Microinstruction> {
        let mut model = build_chloroform();
        for j in 0..2 {
            model.set_field(j + 1, Axis::X, FieldTerm::sinusoid(self.amp_x[j], self.omega, self.phase_x))?;
            model.set_field(j + 1, Axis::Y, FieldTerm::sinusoid(self.amp_y[j], self.omega, self.phase_y))?;
        }
        Microinstruction::new(label, self.duration_over_2pi, model)
    }
}

/// Designs the pulse that rotates `target_spin` by `angle` about `axis`,
/// i.e. implements `exp(i angle S^axis)` on that spin.
///
/// Negative angles and angles beyond `2 pi` are allowed; the amplitude is
/// proportional to the angle. The rotating field of an x pulse has
/// `h^x = a cos(omega t)`, `h^y = -a sin(omega t)` and that of a y pulse
/// `h^x = a sin(omega t)`, `h^y = a cos(omega t)`.
pub fn design_pulse(params: &TwoPiKParams, target_spin: usize, axis: Axis, angle: f64) -> Result<PulseSpec> {
    if !angle.is_finite() {
        return Err(Error::Domain("pulse angle must be finite"));
    }
    let g = params.gamma();
    let h1 = CHLOROFORM_H[0];
    let dur = params.duration_over_2pi(target_spin)? / h1;
    let t = dur * TWO_PI;
    let (a1, omega) = match target_spin {
        1 => (angle / t, h1),
        _ => (angle / t / g, g * h1),
    };
    let a = [a1, g * a1];
    let (sign, phase_x, phase_y) = match axis {
        Axis::X => (-1.0, -FRAC_PI_2, 0.0),
        Axis::Y => (1.0, 0.0, FRAC_PI_2),
        Axis::Z => return Err(Error::Domain("pulses rotate about x or y")),
    };
    let amp = [sign * a[0], sign * a[1]];
    Ok(PulseSpec {
        duration_over_2pi: dur,
        omega,
        amp_x: amp,
        amp_y: amp,
        phase_x,
        phase_y,
    })
}

/// Exact spin-1 pulse duration of the 2πk method for `n_idle` whole turns
/// of the other spin: `t = sqrt(16 pi^2 n^2 - gamma^2 angle^2) / |h^z (1 - gamma)|`.
///
/// It solves `t |v| = 4 pi n` with `|v|^2 = (h^z (1 - gamma))^2 + (gamma angle / t)^2`.
pub fn pulse_duration_exact(n_idle: u64, field_z: f64, gamma: f64, angle: f64) -> Result<f64> {
    let detuning = (field_z * (1.0 - gamma)).abs();
    if n_idle == 0 || detuning == 0.0 || !angle.is_finite() {
        return Err(Error::Domain("need n > 0 and a nonzero detuning"));
    }
    let rad = sq(4.0 * PI * n_idle as f64) - sq(gamma * angle);
    if rad < 0.0 {
        return Err(Error::Domain("rotation angle too large for n"));
    }
    Ok(libm::sqrt(rad) / detuning)
}

/// `theta mod 4 pi` in `[0, 4 pi)`.
fn mod_4pi(theta: f64) -> f64 {
    let r = theta % (2.0 * TWO_PI);
    if r < 0.0 {
        r + 2.0 * TWO_PI
    } else {
        r
    }
}

/// `tau = -pi / J`.
fn interaction_time() -> f64 {
    -PI / CHLOROFORM_J
}

/// Angles `theta_j = tau (h_j^z - h) mod 4 pi`, `h = -J / 2`, of the single
/// primed rotations that turn `I'` into a controlled phase.
pub fn primed_angles() -> [f64; 2] {
    let h = -CHLOROFORM_J / 2.0;
    let tau = interaction_time();
    [mod_4pi(tau * (CHLOROFORM_H[0] - h)), mod_4pi(tau * (CHLOROFORM_H[1] - h))]
}

/// Angles `theta_j = tau h_j^z mod 4 pi` of the double primed rotations used
/// in the Grover step.
pub fn double_primed_angles() -> [f64; 2] {
    let tau = interaction_time();
    [mod_4pi(tau * CHLOROFORM_H[0]), mod_4pi(tau * CHLOROFORM_H[1])]
}

/// The free evolution `I' = exp(-i tau H)` under the static NMR model.
pub fn interaction_step() -> Microinstruction {
    Microinstruction::new("I'", INTERACTION_DURATION_OVER_2PI, build_chloroform()).expect("positive duration")
}

/// One step of an NMR program.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NmrStep {
    /// Pulse implementing `exp(i angle S^axis)` on `spin`.
    Rotate { spin: usize, axis: Axis, angle: f64 },
    /// Free evolution `I'`.
    Interaction,
}

impl NmrStep {
    pub fn x(spin: usize, angle: f64) -> Self {
        NmrStep::Rotate { spin, axis: Axis::X, angle }
    }

    pub fn y(spin: usize, angle: f64) -> Self {
        NmrStep::Rotate { spin, axis: Axis::Y, angle }
    }

    pub fn label(&self) -> String {
        match *self {
            NmrStep::Interaction => String::from("I'"),
            NmrStep::Rotate { spin, axis, angle } => {
                let a = if axis == Axis::X { "X" } else { "Y" };
                if angle == FRAC_PI_2 {
                    format!("{}{}", a, spin)
                } else if angle == -FRAC_PI_2 {
                    format!("{}BAR{}", a, spin)
                } else {
                    format!("{}{}({:.6})", a, spin, angle)
                }
            }
        }
    }

    /// The pulse or free evolution realizing this step.
    pub fn microinstruction(&self, params: &TwoPiKParams) -> Result<Microinstruction> {
        match *self {
            NmrStep::Interaction => Ok(interaction_step()),
            NmrStep::Rotate { spin, axis, angle } => design_pulse(params, spin, axis, angle)?.microinstruction(self.label()),
        }
    }

    /// The exact gates this step implements on an ideal machine.
    pub fn ideal_ops(&self) -> Vec<GateOp> {
        match *self {
            NmrStep::Interaction => {
                // exp(-i tau H) = exp(i tau J S1z S2z) exp(i tau h1 S1z) exp(i tau h2 S2z)
                let tau = INTERACTION_DURATION_OVER_2PI * TWO_PI;
                alloc::vec![
                    GateOp::new(GateKind::ZzPhase(-mod_4pi(tau * CHLOROFORM_J)), &[1, 2]),
                    GateOp::new(GateKind::Rotation(Axis::Z, mod_4pi(tau * CHLOROFORM_H[0])), &[1]),
                    GateOp::new(GateKind::Rotation(Axis::Z, mod_4pi(tau * CHLOROFORM_H[1])), &[2]),
                ]
            }
            NmrStep::Rotate { spin, axis, angle } => {
                let kind = match (axis, angle) {
                    (Axis::X, a) if a == FRAC_PI_2 => GateKind::X,
                    (Axis::X, a) if a == -FRAC_PI_2 => GateKind::Xbar,
                    (Axis::Y, a) if a == FRAC_PI_2 => GateKind::Y,
                    (Axis::Y, a) if a == -FRAC_PI_2 => GateKind::Ybar,
                    _ => GateKind::Rotation(axis, angle),
                };
                alloc::vec![GateOp::new(kind, &[spin])]
            }
        }
    }
}

/// Microinstructions for a step list.
pub fn microinstructions(steps: &[NmrStep], params: &TwoPiKParams) -> Result<Vec<Microinstruction>> {
    steps.iter().map(|s| s.microinstruction(params)).collect()
}

/// The two-qubit gate program a step list implements on an ideal machine.
pub fn ideal_program(steps: &[NmrStep]) -> GateProgram {
    let mut p = GateProgram::new(2);
    for s in steps {
        for op in s.ideal_ops() {
            p.push(op.kind, &op.targets).expect("two-qubit ops");
        }
    }
    p
}

/// CNOT with spin 1 as control and spin 2 as target, in one of three
/// logically equivalent orders.
pub fn cnot_steps(variant: usize) -> Result<Vec<NmrStep>> {
    let [t1, t2] = primed_angles();
    let p = FRAC_PI_2;
    let head = [NmrStep::y(2, p), NmrStep::Interaction, NmrStep::y(2, -p)];
    let tail = match variant {
        1 => [NmrStep::x(2, -t2), NmrStep::y(1, -p), NmrStep::x(1, -t1), NmrStep::y(1, p)],
        2 => [NmrStep::y(1, -p), NmrStep::x(2, -t2), NmrStep::x(1, -t1), NmrStep::y(1, p)],
        3 => [NmrStep::x(1, p), NmrStep::x(2, -t2), NmrStep::y(1, -t1), NmrStep::x(1, -p)],
        _ => return Err(Error::Domain("CNOT variant must be 1, 2 or 3")),
    };
    Ok(head.iter().chain(tail.iter()).copied().collect())
}

/// [`cnot_steps`] as pulses.
pub fn cnot_variant(variant: usize, params: &TwoPiKParams) -> Result<Vec<Microinstruction>> {
    microinstructions(&cnot_steps(variant)?, params)
}

/// The conditional phase shift `G` of the Grover search: free evolution
/// followed by double primed x rotations on both spins.
pub fn grover_g_steps() -> Vec<NmrStep> {
    let [t1, t2] = double_primed_angles();
    let p = FRAC_PI_2;
    alloc::vec![
        NmrStep::Interaction,
        NmrStep::y(1, -p),
        NmrStep::x(1, -t1),
        NmrStep::y(1, p),
        NmrStep::y(2, -p),
        NmrStep::x(2, -t2),
        NmrStep::y(2, p),
    ]
}

/// [`grover_g_steps`] as pulses.
pub fn grover_g_step(params: &TwoPiKParams) -> Result<Vec<Microinstruction>> {
    microinstructions(&grover_g_steps(), params)
}

/// Grover search for `item` on the NMR machine, starting from `|00>`.
///
/// The first Walsh-Hadamard-like block rotates spin 2 before spin 1.
pub fn grover_nmr_steps(item: usize) -> Result<Vec<NmrStep>> {
    if item > 3 {
        return Err(Error::Domain("item must be 0..=3"));
    }
    let p = FRAC_PI_2;
    let x1 = if item & 2 == 0 { p } else { -p };
    let x2 = if item & 1 == 0 { p } else { -p };
    let mut s = alloc::vec![
        NmrStep::y(2, -p),
        NmrStep::x(2, -p),
        NmrStep::x(2, -p),
        NmrStep::y(1, -p),
        NmrStep::x(1, -p),
        NmrStep::x(1, -p),
    ];
    s.extend(grover_g_steps());
    s.extend([NmrStep::y(2, -p), NmrStep::x(2, x2), NmrStep::y(1, -p), NmrStep::x(1, x1)]);
    s.extend(grover_g_steps());
    s.extend([NmrStep::y(2, -p), NmrStep::x(2, p), NmrStep::y(1, -p), NmrStep::x(1, p)]);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{rotation, run};
    use crate::propagators::{Propagator, PropagatorConfig};
    use crate::{c64, cis, StateVector};
    use proptest::prelude::*;

    /// `(label, spin, axis, angle)` for each printed row at `s = 8`, and the
    /// printed `tau/2pi, omega, h1x, h2x, phi_x, h1y, h2y, phi_y`.
    fn table_rows() -> [(&'static str, usize, Axis, f64, [f64; 8]); 9] {
        let [p1, p2] = primed_angles();
        let [d1, d2] = double_primed_angles();
        let h = FRAC_PI_2;
        [
            ("X1", 1, Axis::X, h, [8.0, 1.0, -0.03125, -0.0078125, -h, -0.03125, -0.0078125, 0.0]),
            ("X2", 2, Axis::X, h, [128.0, 0.25, -0.0078125, -0.0019531, -h, -0.0078125, -0.0019531, 0.0]),
            ("Y1", 1, Axis::Y, h, [8.0, 1.0, 0.03125, 0.0078125, 0.0, 0.03125, 0.0078125, h]),
            ("Y2", 2, Axis::Y, h, [128.0, 0.25, 0.0078125, 0.0019531, 0.0, 0.0078125, 0.0019531, h]),
            ("X1'", 1, Axis::X, -p1, [8.0, 1.0, 0.0559593, 0.0139898, -h, 0.0559593, 0.0139898, 0.0]),
            ("X2'", 2, Axis::X, -p2, [128.0, 0.25, 0.0445131, 0.0111283, -h, 0.0445131, 0.0111283, 0.0]),
            ("Y1'", 1, Axis::Y, -p1, [8.0, 1.0, -0.0559593, -0.0139898, 0.0, -0.0559593, -0.0139898, h]),
            ("X1''", 1, Axis::X, -d1, [8.0, 1.0, 0.0872093, 0.0218023, -h, 0.0872093, 0.0218023, 0.0]),
            // The printed h2 cell of this row reads 0.0130914; gamma * h1 is 0.0130814.
            ("X2''", 2, Axis::X, -d2, [128.0, 0.25, 0.0523256, 0.0130814, -h, 0.0523256, 0.0130814, 0.0]),
        ]
    }

    #[test]
    fn regenerates_pulse_table() {
        let params = TwoPiKParams::from_s(8).unwrap();
        for (label, spin, axis, angle, want) in table_rows() {
            let p = design_pulse(&params, spin, axis, angle).unwrap();
            let got = [p.duration_over_2pi, p.omega, p.amp_x[0], p.amp_x[1], p.phase_x, p.amp_y[0], p.amp_y[1], p.phase_y];
            for (g, w) in got.iter().zip(want) {
                let tol = (1e-6 * w.abs()).max(5e-8);
                assert!((g - w).abs() <= tol, "{label}: {g} vs {w}");
            }
        }
    }

    #[test]
    fn primed_angle_values() {
        let [p1, p2] = primed_angles();
        let [d1, d2] = double_primed_angles();
        assert!((p1 - 2.812821).abs() < 5e-6);
        assert!((p2 - 8.949886).abs() < 5e-6);
        assert!((d1 - 4.383618).abs() < 5e-6);
        assert!((d2 - 10.520682).abs() < 5e-6);
    }

    #[test]
    fn bad_params() {
        assert!(TwoPiKParams::new(1, 4, 4).is_err());
        assert!(TwoPiKParams::new(1, 5, 4).is_err());
        assert!(TwoPiKParams::new(0, 1, 4).is_err());
        assert!(TwoPiKParams::from_s(12).is_err());
        let p = TwoPiKParams::from_s(8).unwrap();
        assert!(design_pulse(&p, 3, Axis::X, 1.0).is_err());
        assert!(design_pulse(&p, 1, Axis::Z, 1.0).is_err());
        assert!(p.well_separated());
        assert_eq!(p.separation(), 24);
    }

    #[test]
    fn null_pulse() {
        let p = design_pulse(&TwoPiKParams::from_s(8).unwrap(), 1, Axis::Y, 0.0).unwrap();
        assert_eq!(p.amp_x, [0.0, 0.0]);
        assert_eq!(p.amp_y, [0.0, 0.0]);
    }

    #[test]
    fn exact_duration() {
        let t = pulse_duration_exact(1, 1.0, 0.25, 0.0).unwrap();
        assert!((t - 16.0 * PI / 3.0).abs() < 1e-12);
        let edge = pulse_duration_exact(1, 1.0, 0.25, 16.0 * PI).unwrap();
        assert!(edge.abs() < 1e-6);
        assert!(pulse_duration_exact(1, 1.0, 0.25, 16.0 * PI + 0.1).is_err());
        assert!(pulse_duration_exact(0, 1.0, 0.25, 0.0).is_err());
        // t |v| = 4 pi n with the gamma-scaled field on the idle spin.
        let (n, g, phi) = (3, 0.25, 1.3);
        let t = pulse_duration_exact(n, 1.0, g, phi).unwrap();
        let v = libm::sqrt(sq(1.0 - g) + sq(g * phi / t));
        assert!((t * v - 4.0 * PI * n as f64).abs() < 1e-10);
    }

    #[test]
    fn design_durations_near_exact() {
        // The designed duration is the exact one up to O(1/k^2).
        for k in [1, 4, 32] {
            let p = TwoPiKParams::new(k, 1, 4).unwrap();
            let t = p.duration_over_2pi(1).unwrap() * TWO_PI;
            let exact = pulse_duration_exact(p.idle_turns()[0], 1.0, p.gamma(), FRAC_PI_2).unwrap();
            assert!(((t - exact) / t).abs() < 1e-3 / (k * k) as f64);
        }
    }

    proptest! {
        #[test]
        fn residual_shrinks_with_k(k in 1u64..64, angle in 0.0f64..TWO_PI) {
            let p = TwoPiKParams::new(k, 1, 4).unwrap();
            for spin in [1, 2] {
                let r = p.condition_residual(spin, angle).unwrap();
                let n = p.idle_turns()[spin - 1] as f64;
                prop_assert!(r >= 0.0);
                prop_assert!(r / (n * n) <= 4.0 / (k * k) as f64);
            }
        }

        #[test]
        fn amplitude_ratio_is_gamma(s in 1u64..40, spin in 1usize..3, angle in -12.0f64..12.0) {
            let p = design_pulse(&TwoPiKParams::from_s(8 * s).unwrap(), spin, Axis::X, angle).unwrap();
            prop_assert!((p.amp_x[1] - 0.25 * p.amp_x[0]).abs() <= 1e-12 * p.amp_x[0].abs());
            prop_assert!((p.amp_y[1] - 0.25 * p.amp_y[0]).abs() <= 1e-12 * p.amp_y[0].abs());
        }
    }

    #[test]
    fn interaction_duration() {
        let m = interaction_step();
        assert_eq!(m.duration_over_2pi, 1162790.6977);
        assert!(m.model.is_static() && m.model.is_z_diagonal());
    }

    /// Twice the phase error of both spins during `I'` from rounding its
    /// duration to the printed digits. Ideal substitutions are exact up to
    /// this.
    fn rounding_phase() -> f64 {
        let exact = -1.0 / (2.0 * CHLOROFORM_J);
        2.0 * TWO_PI * (INTERACTION_DURATION_OVER_2PI - exact).abs() * (CHLOROFORM_H[0] + CHLOROFORM_H[1])
    }

    fn cnot12() -> crate::dense::DenseMatrix {
        let mut p = GateProgram::new(2);
        p.push(GateKind::Cnot, &[1, 2]).unwrap();
        p.unitary().unwrap()
    }

    #[test]
    fn ideal_cnot_variants() {
        let want = cnot12();
        for v in 1..=3 {
            let u = ideal_program(&cnot_steps(v).unwrap()).unitary().unwrap();
            let d = u.max_diff_up_to_phase(&want);
            assert!(d < rounding_phase(), "variant {v}: {d}");
            for i in 0..4 {
                let j = if i & 1 == 1 { i ^ 2 } else { i };
                assert!(u.get(j, i).norm_sqr() > 1.0 - 1e-7, "variant {v}, column {i}");
            }
        }
        assert!(cnot_steps(4).is_err());
    }

    #[test]
    fn ideal_g_step() {
        let g = ideal_program(&grover_g_steps()).unitary().unwrap();
        let m = cis(-PI / 4.0);
        let p = cis(PI / 4.0);
        let want = crate::dense::DenseMatrix::from_fn(4, |r, c| {
            if r != c {
                c64(0.0, 0.0)
            } else if r == 0 || r == 3 {
                m
            } else {
                p
            }
        });
        assert!(g.max_diff_up_to_phase(&want) < rounding_phase());
        // G^2 = -i Z (x) Z.
        let zz = crate::dense::DenseMatrix::from_fn(4, |r, c| match (r == c, r) {
            (false, _) => c64(0.0, 0.0),
            (true, 1) | (true, 2) => c64(-1.0, 0.0),
            _ => c64(1.0, 0.0),
        });
        assert!(g.mul(&g).max_diff_up_to_phase(&zz) < 2.0 * rounding_phase());
    }

    #[test]
    fn ideal_grover_finds_item() {
        for item in 0..4 {
            let mut psi = StateVector::basis_state(2, 0).unwrap();
            run(&mut psi, &ideal_program(&grover_nmr_steps(item).unwrap())).unwrap();
            assert!(psi.amplitudes()[item].norm_sqr() > 1.0 - 1e-7, "item {item}");
        }
        assert!(grover_nmr_steps(4).is_err());
    }

    fn pulse_then_ideal(spin: usize, axis: Axis, angle: f64, s: u64, psi0: &StateVector) -> (StateVector, StateVector) {
        let params = TwoPiKParams::from_s(s).unwrap();
        let micro = NmrStep::Rotate { spin, axis, angle }.microinstruction(&params).unwrap();
        let mut prop = Propagator::new(PropagatorConfig::default()).unwrap();
        let mut phys = psi0.clone();
        prop.run_micro(&mut phys, &micro).unwrap();
        let mut ideal = psi0.clone();
        ideal.apply_1q_unitary(spin, &rotation(axis, angle)).unwrap();
        (phys, ideal)
    }

    #[test]
    fn pulse_is_the_target_rotation() {
        let psi0 = StateVector::product(&[[c64(0.6, 0.0), c64(0.0, 0.8)], [c64(0.8, 0.0), c64(0.36, 0.48)]]).unwrap();
        for (spin, axis, angle) in [(1, Axis::X, FRAC_PI_2), (1, Axis::Y, -1.1), (2, Axis::Y, FRAC_PI_2)] {
            let (phys, ideal) = pulse_then_ideal(spin, axis, angle, 64, &psi0);
            let f = phys.fidelity(&ideal).unwrap();
            assert!(f >= 1.0 - 1e-4, "spin {spin} {axis:?}: fidelity {f}");
        }
    }

    #[test]
    fn pulse_leaves_other_spin_alone() {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            let psi0 = StateVector::basis_state(2, i).unwrap();
            let (phys, ideal) = pulse_then_ideal(1, Axis::X, FRAC_PI_2, 64, &psi0);
            let (a, b) = (phys.expectation(2).unwrap(), ideal.expectation(2).unwrap());
            worst = worst.max((a.qx - b.qx).abs()).max((a.qy - b.qy).abs()).max((a.qz - b.qz).abs());
        }
        assert!(worst <= 0.02, "{worst}");
    }
}
