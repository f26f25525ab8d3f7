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

//! Bessel functions of the first kind by Miller's downward recursion.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

const RESCALE_AT: f64 = 1e200;

/// `J_0(z), ..., J_max(z)` for `z >= 0`.
///
/// The recursion `J_{k-1} = (2k/z) J_k - J_{k+1}` is started well above
/// both `max` and `z` and normalized with `J_0 + 2 sum J_{2k} = 1`.
pub fn bessel_coeffs(z: f64, max: usize) -> Vec<f64> {
    let mut out = vec![0.0; max + 1];
    if z == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let z = z.abs();
    let top = (max as f64).max(z);
    let start = top as usize + libm::sqrt(160.0 * top) as usize + 10;
    let (mut above, mut cur) = (0.0f64, 1e-30f64);
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        if k <= max {
            out[k] = cur;
        }
        if k % 2 == 0 {
            norm += 2.0 * cur;
        }
        let below = (2.0 * k as f64 / z) * cur - above;
        above = cur;
        cur = below;
        if cur.abs() > RESCALE_AT {
            let s = 1.0 / RESCALE_AT;
            cur *= s;
            above *= s;
            norm *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    out[0] = cur;
    norm += cur;
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

/// Number of terms for the Chebyshev sum: the smallest `K` with
/// `|J_k(z)| < kappa` for `K < k <= K + 50`, together with `J_0..J_K`.
pub fn chebyshev_order(z: f64, kappa: f64, cap: usize) -> Result<(usize, Vec<f64>)> {
    const RUN: usize = 50;
    let mut scan = ((z as usize).max(8) * 2 + RUN + 16).min(cap);
    loop {
        let c = bessel_coeffs(z, scan);
        let mut run = 0;
        for k in 0..=scan {
            if c[k].abs() < kappa {
                run += 1;
                if run == RUN {
                    let first = k + 1 - RUN;
                    let order = first.saturating_sub(1);
                    let mut c = c;
                    c.truncate(order + 1);
                    return Ok((order, c));
                }
            } else {
                run = 0;
            }
        }
        if scan >= cap {
            return Err(Error::TermCap { needed: scan, cap });
        }
        scan = (scan * 2).min(cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Power series `J_k(z) = sum_m (-1)^m (z/2)^{2m+k} / (m! (m+k)!)`,
    /// with the largest term as a measure of its cancellation error.
    fn series(k: usize, z: f64) -> (f64, f64) {
        let mut term = 1.0;
        for i in 1..=k {
            term *= z / 2.0 / i as f64;
        }
        let mut sum = term;
        let mut big = term.abs();
        for m in 1..200 {
            term *= -(z * z / 4.0) / (m as f64 * (m + k) as f64);
            sum += term;
            big = big.max(term.abs());
            if term.abs() < 1e-300 {
                break;
            }
        }
        (sum, big)
    }

    #[test]
    fn j0_of_one() {
        let c = bessel_coeffs(1.0, 4);
        assert!((c[0] - 0.7651976865579666).abs() < 1e-15);
        assert!((c[0] - series(0, 1.0).0).abs() < 1e-15);
    }

    #[test]
    fn matches_series() {
        for &z in &[0.1, 0.5, 1.0, 3.0, 7.5, 12.0] {
            let c = bessel_coeffs(z, 30);
            for k in 0..=30 {
                let (s, big) = series(k, z);
                let tol = 1e-14 * s.abs() + 4.0 * f64::EPSILON * big;
                assert!((c[k] - s).abs() <= tol, "k={k} z={z}: {} vs {s}", c[k]);
            }
        }
    }

    #[test]
    fn zero_argument() {
        let c = bessel_coeffs(0.0, 5);
        assert_eq!(c, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn large_argument_tail() {
        let c = bessel_coeffs(2000.0, 2300);
        for k in 2101..=2300 {
            assert!(c[k].abs() < 1e-10, "J_{k}(2000) = {}", c[k]);
        }
        assert!(c[2000].abs() > 1e-3);
    }

    #[test]
    fn recurrence_holds() {
        for &z in &[0.7, 5.0, 40.0, 300.0] {
            let n = (z as usize) + 40;
            let c = bessel_coeffs(z, n);
            for k in 1..n {
                let lhs = c[k - 1] + c[k + 1];
                let rhs = 2.0 * k as f64 / z * c[k];
                let scale = c[k - 1].abs().max(c[k + 1].abs()).max(rhs.abs());
                if scale > 1e-280 {
                    assert!((lhs - rhs).abs() <= 1e-12 * scale + 1e-15, "z={z} k={k}");
                }
            }
        }
    }

    #[test]
    fn order_selection() {
        let (k, c) = chebyshev_order(0.0, 1e-17, 1000).unwrap();
        assert_eq!(k, 0);
        assert_eq!(c, [1.0]);
        let (k, c) = chebyshev_order(20.0, 1e-17, 100_000).unwrap();
        assert!(k > 20 && k < 80, "K = {k}");
        assert!(c[k].abs() >= 1e-17);
        assert!(chebyshev_order(5000.0, 1e-17, 1000).is_err());
    }
}
