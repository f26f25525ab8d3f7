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


use core::f64::consts::PI;

use super::qft_program;
use crate::gates::{GateKind, GateProgram};
use crate::{Error, Result};

const R1: [usize; 4] = [1, 2, 3, 4];
const R2: [usize; 4] = [5, 6, 7, 8];
const R3: [usize; 4] = [9, 10, 11, 12];

/// Adds `r1` and `r2` into `r3` modulo 16 on twelve qubits.
///
/// Register 1 is qubits 1 to 4, register 2 qubits 5 to 8, register 3 qubits
/// 9 to 12, each low bit first. The program loads the inputs with NOT gates,
/// Fourier transforms register 3, adds each input with controlled phase
/// shifts of `pi / 2^(j-m)` between input bit `m` and register-3 bit `j`,
/// and undoes the transform.
pub fn adder3_program(r1: u8, r2: u8, r3: u8) -> Result<GateProgram> {
    if r1 > 15 || r2 > 15 || r3 > 15 {
        return Err(Error::Domain("register values must be 0..=15"));
    }
    let mut p = GateProgram::new(12);
    for (value, reg) in [(r1, R1), (r2, R2), (r3, R3)] {
        for (b, &q) in reg.iter().enumerate() {
            if value >> b & 1 == 1 {
                p.push(GateKind::Not, &[q])?;
            }
        }
    }
    // Without swaps, register-3 bit j carries the phase 2 pi x / 2^(j+1).
    let qft = qft_program(12, &R3, false)?;
    p.append(&qft)?;
    for reg in [R2, R1] {
        for (j, &t) in R3.iter().enumerate() {
            for (m, &c) in reg.iter().enumerate().take(j + 1) {
                p.push(GateKind::CtrlPhase(PI / (1u32 << (j - m)) as f64), &[c, t])?;
            }
        }
    }
    p.append(&qft.inverse())?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::run;
    use crate::StateVector;
    use proptest::prelude::*;

    fn sum(r1: u8, r2: u8, r3: u8) -> (usize, f64) {
        let mut psi = StateVector::basis_state(12, 0).unwrap();
        run(&mut psi, &adder3_program(r1, r2, r3).unwrap()).unwrap();
        let (i, p) = psi
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(i, a)| (i, a.norm_sqr()))
            .fold((0, 0.0), |best, x| if x.1 > best.1 { x } else { best });
        (i, p)
    }

    #[test]
    fn examples() {
        for (r, want) in [((1, 2, 3), 6), ((1, 1, 1), 3), ((9, 9, 9), 11)] {
            let (i, p) = sum(r.0, r.1, r.2);
            assert!(p > 1.0 - 1e-10);
            assert_eq!(i >> 8, want);
            assert_eq!(i & 0xff, (r.0 | r.1 << 4) as usize);
        }
        assert!(adder3_program(16, 0, 0).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn adds_mod_16(r1 in 0u8..16, r2 in 0u8..16, r3 in 0u8..16) {
            let (i, p) = sum(r1, r2, r3);
            prop_assert!(p > 1.0 - 1e-10);
            prop_assert_eq!(i >> 8, ((r1 + r2 + r3) % 16) as usize);
        }
    }
}
