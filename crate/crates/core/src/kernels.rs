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

//! Index-space iteration shared by the amplitude kernels.
//!
//! Every elementary operation touches either pairs of amplitudes that differ
//! in one bit or quadruples that differ in two bits. The helpers below walk
//! those groups in place. With the `parallel` feature large states are split
//! into disjoint blocks and handed to rayon.

use crate::C64;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many amplitudes the serial loop is always used.
#[cfg(feature = "parallel")]
const PAR_MIN: usize = 1 << 14;

#[cfg(feature = "parallel")]
const REDUCE_BLOCK: usize = 1 << 12;

/// Calls `f(a0, a1)` for every pair of amplitudes whose indices differ only
/// in `bit`, `a0` having the bit clear.
pub(crate) fn for_each_pair<F>(amps: &mut [C64], bit: usize, f: F)
where
    F: Fn(&mut C64, &mut C64) + Sync + Send,
{
    let stride = 1usize << bit;
    #[cfg(feature = "parallel")]
    if amps.len() >= PAR_MIN {
        if amps.len() / (2 * stride) >= 32 {
            amps.par_chunks_mut(2 * stride).for_each(|c| {
                let (lo, hi) = c.split_at_mut(stride);
                lo.iter_mut().zip(hi.iter_mut()).for_each(|(a, b)| f(a, b));
            });
        } else {
            for c in amps.chunks_mut(2 * stride) {
                let (lo, hi) = c.split_at_mut(stride);
                lo.par_iter_mut()
                    .zip(hi.par_iter_mut())
                    .for_each(|(a, b)| f(a, b));
            }
        }
        return;
    }
    for c in amps.chunks_mut(2 * stride) {
        let (lo, hi) = c.split_at_mut(stride);
        lo.iter_mut().zip(hi.iter_mut()).for_each(|(a, b)| f(a, b));
    }
}

/// Calls `f(a00, a01, a10, a11)` for every quadruple of amplitudes whose
/// indices differ only in bits `bj` and `bk`. The digit order is
/// `(bit_k bit_j)`, so `a01` has `bj` set and `a10` has `bk` set.
pub(crate) fn for_each_quad<F>(amps: &mut [C64], bj: usize, bk: usize, f: F)
where
    F: Fn(&mut C64, &mut C64, &mut C64, &mut C64) + Sync + Send,
{
    debug_assert_ne!(bj, bk);
    let (lo_bit, hi_bit) = if bj < bk { (bj, bk) } else { (bk, bj) };
    let j_is_low = bj < bk;
    let hs = 1usize << hi_bit;
    let ls = 1usize << lo_bit;
    let inner = |c: &mut [C64]| {
        let (a, b) = c.split_at_mut(hs);
        for (ca, cb) in a.chunks_mut(2 * ls).zip(b.chunks_mut(2 * ls)) {
            let (a0, a1) = ca.split_at_mut(ls);
            let (b0, b1) = cb.split_at_mut(ls);
            for (((x00, xl), xh), x11) in a0
                .iter_mut()
                .zip(a1.iter_mut())
                .zip(b0.iter_mut())
                .zip(b1.iter_mut())
            {
                if j_is_low {
                    f(x00, xl, xh, x11);
                } else {
                    f(x00, xh, xl, x11);
                }
            }
        }
    };
    #[cfg(feature = "parallel")]
    if amps.len() >= PAR_MIN {
        if amps.len() / (2 * hs) >= 32 {
            amps.par_chunks_mut(2 * hs).for_each(inner);
        } else {
            // Few outer blocks: split each block's inner chunks instead.
            for c in amps.chunks_mut(2 * hs) {
                let (a, b) = c.split_at_mut(hs);
                a.par_chunks_mut(2 * ls)
                    .zip(b.par_chunks_mut(2 * ls))
                    .for_each(|(ca, cb)| {
                        let (a0, a1) = ca.split_at_mut(ls);
                        let (b0, b1) = cb.split_at_mut(ls);
                        for (((x00, xl), xh), x11) in a0
                            .iter_mut()
                            .zip(a1.iter_mut())
                            .zip(b0.iter_mut())
                            .zip(b1.iter_mut())
                        {
                            if j_is_low {
                                f(x00, xl, xh, x11);
                            } else {
                                f(x00, xh, xl, x11);
                            }
                        }
                    });
            }
        }
        return;
    }
    for c in amps.chunks_mut(2 * hs) {
        inner(c);
    }
}

/// Calls `f(index, amp)` for every amplitude.
pub(crate) fn for_each_indexed<F>(amps: &mut [C64], f: F)
where
    F: Fn(usize, &mut C64) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if amps.len() >= PAR_MIN {
        amps.par_iter_mut().enumerate().for_each(|(i, a)| f(i, a));
        return;
    }
    amps.iter_mut().enumerate().for_each(|(i, a)| f(i, a));
}

/// `sum_i f(i, amps[i])` over all indices.
pub(crate) fn sum_indexed<F>(amps: &[C64], f: F) -> f64
where
    F: Fn(usize, &C64) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if amps.len() >= PAR_MIN {
        // Fixed blocks keep the summation order independent of scheduling.
        let parts: alloc::vec::Vec<f64> = amps
            .par_chunks(REDUCE_BLOCK)
            .enumerate()
            .map(|(b, c)| {
                let base = b * REDUCE_BLOCK;
                c.iter().enumerate().map(|(i, a)| f(base + i, a)).sum::<f64>()
            })
            .collect();
        return parts.iter().sum();
    }
    amps.iter().enumerate().map(|(i, a)| f(i, a)).sum()
}

/// Hermitian inner product `<a|b>`.
pub(crate) fn dot(a: &[C64], b: &[C64]) -> C64 {
    #[cfg(feature = "parallel")]
    if a.len() >= PAR_MIN {
        let parts: alloc::vec::Vec<C64> = a
            .par_chunks(REDUCE_BLOCK)
            .zip(b.par_chunks(REDUCE_BLOCK))
            .map(|(x, y)| x.iter().zip(y).fold(C64::new(0.0, 0.0), |s, (p, q)| s + p.conj() * q))
            .collect();
        return parts.iter().fold(C64::new(0.0, 0.0), |s, p| s + p);
    }
    a.iter()
        .zip(b.iter())
        .fold(C64::new(0.0, 0.0), |s, (x, y)| s + x.conj() * y)
}

/// `y += alpha * x`
pub(crate) fn axpy(alpha: C64, x: &[C64], y: &mut [C64]) {
    #[cfg(feature = "parallel")]
    if x.len() >= PAR_MIN {
        y.par_iter_mut().zip(x.par_iter()).for_each(|(b, a)| *b += alpha * a);
        return;
    }
    y.iter_mut().zip(x.iter()).for_each(|(b, a)| *b += alpha * a);
}

/// `x *= alpha`
pub(crate) fn scale(alpha: C64, x: &mut [C64]) {
    for_each_indexed(x, |_, a| *a *= alpha);
}
