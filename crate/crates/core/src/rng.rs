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

//! Seeded randomness for the stochastic model builders.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Default seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_011_126;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in `[0, 1)` with 53 random bits.
pub fn uniform<R: RngCore>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform in `(lo, hi)`; the lower end is excluded.
pub fn uniform_open<R: RngCore>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    loop {
        let u = uniform(rng);
        if u > 0.0 {
            return lo + (hi - lo) * u;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_in_range() {
        let mut a = seeded(7);
        let mut b = seeded(7);
        for _ in 0..1000 {
            let x = uniform(&mut a);
            assert_eq!(x, uniform(&mut b));
            assert!((0.0..1.0).contains(&x));
            let y = uniform_open(&mut a, 0.0, 0.4);
            assert!(y > 0.0 && y < 0.4);
            uniform_open(&mut b, 0.0, 0.4);
        }
    }

    #[test]
    fn mean_is_about_half() {
        let mut r = seeded(1);
        let m: f64 = (0..20000).map(|_| uniform(&mut r)).sum::<f64>() / 20000.0;
        assert!((m - 0.5).abs() < 0.01);
    }
}
