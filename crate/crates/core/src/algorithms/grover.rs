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

use crate::gates::{GateKind, GateProgram};
use crate::{Error, Result};

/// `G = exp(-i pi S1z S2z)`.
const G: GateKind = GateKind::ZzPhase(PI);

/// Grover search for `item` among four, as one optimized sequence of `X`,
/// `Y` and `G` on qubits 1 and 2. Applied to `|00>` it gives `|item>`.
pub fn grover_program(item: usize) -> Result<GateProgram> {
    if item > 3 {
        return Err(Error::Domain("item must be 0..=3"));
    }
    use GateKind::*;
    let x1 = if item & 2 == 0 { X } else { Xbar };
    let x2 = if item & 1 == 0 { X } else { Xbar };
    let mut p = GateProgram::new(2);
    for (kind, q) in [
        (Ybar, 1),
        (Xbar, 1),
        (Xbar, 1),
        (Ybar, 2),
        (Xbar, 2),
        (Xbar, 2),
    ] {
        p.push(kind, &[q])?;
    }
    p.push(G, &[1, 2])?;
    for (kind, q) in [(Ybar, 2), (x2, 2), (Ybar, 1), (x1, 1)] {
        p.push(kind, &[q])?;
    }
    p.push(G, &[1, 2])?;
    for (kind, q) in [(Ybar, 2), (X, 2), (Ybar, 1), (X, 1)] {
        p.push(kind, &[q])?;
    }
    p.push(GlobalPhase(PI), &[])?;
    Ok(p)
}

/// Inversion about the mean up to a global phase, `W1 W2 P W1 W2` with
/// `P = -Y1 Xbar1 Ybar1 Y2 Xbar2 Ybar2 G`.
pub fn inversion_about_mean() -> Result<GateProgram> {
    use GateKind::*;
    let mut p = GateProgram::new(2);
    p.push(Hadamard, &[1])?.push(Hadamard, &[2])?;
    p.push(G, &[1, 2])?;
    for (kind, q) in [(Ybar, 2), (Xbar, 2), (Y, 2), (Ybar, 1), (Xbar, 1), (Y, 1)] {
        p.push(kind, &[q])?;
    }
    p.push(GlobalPhase(PI), &[])?;
    p.push(Hadamard, &[1])?.push(Hadamard, &[2])?;
    Ok(p)
}
