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


//! Backend comparison on the spin-bath model.
//!
//! Two central spins with exchange `J0 = 8` are coupled to `L - 2` bath
//! spins with random exchange in `(0, 0.4)`. Every backend propagates the
//! same random initial state for `m` steps of `dt/2pi = 0.01` and its final
//! state is compared with a reference run.

use std::fmt::Write as _;
use std::time::Instant;

use spinqc_core::hamiltonian::{build_spin_bath, random_bath_state};
use spinqc_core::propagators::Propagator;
use spinqc_core::{Backend, PropagatorConfig, StateVector};

pub const BATH_J0: f64 = 8.0;
pub const BATH_JMAX: f64 = 0.4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchPreset {
    pub name: &'static str,
    pub num_spins: usize,
    pub steps: usize,
    pub reference: Backend,
}

pub const PRESETS: [BenchPreset; 4] = [
    BenchPreset {
        name: "spin-bath-10",
        num_spins: 10,
        steps: 400,
        reference: Backend::Diag,
    },
    BenchPreset {
        name: "spin-bath-12",
        num_spins: 12,
        steps: 400,
        reference: Backend::Chebyshev,
    },
    BenchPreset {
        name: "spin-bath-18",
        num_spins: 18,
        steps: 40,
        reference: Backend::Chebyshev,
    },
    BenchPreset {
        name: "spin-bath-22",
        num_spins: 22,
        steps: 8,
        reference: Backend::Chebyshev,
    },
];

pub fn preset(name: &str) -> Option<BenchPreset> {
    PRESETS.iter().copied().find(|p| p.name.eq_ignore_ascii_case(name))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub seed: u64,
    /// Settings shared by all backends; `backend` is overwritten per run.
    pub propagator: PropagatorConfig,
    /// Backends to compare with the reference. The default leaves out
    /// diagonalization, which is used only as the reference where it fits.
    pub backends: Vec<Backend>,
    /// Runs whose estimated memory exceeds this are refused.
    pub mem_cap_bytes: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            seed: spinqc_core::rng::DEFAULT_SEED,
            propagator: PropagatorConfig::default(),
            backends: Backend::ALL.into_iter().filter(|&b| b != Backend::Diag).collect(),
            mem_cap_bytes: 4 << 30,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Reference,
    /// `|| psi_reference - psi_backend ||`
    Error(f64),
    Refused(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub backend: Backend,
    pub outcome: Outcome,
    /// Wall-clock seconds.
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub preset: BenchPreset,
    pub seed: u64,
    pub lanczos_order: usize,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn error(&self, b: Backend) -> Option<f64> {
        self.rows.iter().find(|r| r.backend == b).and_then(|r| match r.outcome {
            Outcome::Error(e) => Some(e),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BenchError {
    /// The reference run itself does not fit.
    MemoryCap { needed: u64, cap: u64 },
    Core(spinqc_core::Error),
}

impl std::fmt::Display for BenchError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BenchError::MemoryCap { needed, cap } => write!(
                f,
                "reference run needs about {} MiB, above the cap of {} MiB",
                needed >> 20,
                cap >> 20
            ),
            BenchError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BenchError {}

impl From<spinqc_core::Error> for BenchError {
    fn from(e: spinqc_core::Error) -> Self {
        BenchError::Core(e)
    }
}

/// Rough peak memory of one backend run on `num_spins` spins, including the
/// initial and reference states the harness keeps.
pub fn estimated_bytes(backend: Backend, num_spins: usize, lanczos_order: usize) -> u64 {
    let vec = 16u64.saturating_mul(1u64 << num_spins.min(62));
    let work = match backend {
        Backend::Diag => {
            let dense = vec.saturating_mul(1u64 << num_spins.min(62));
            return dense.saturating_mul(3).saturating_add(vec.saturating_mul(4));
        }
        Backend::Chebyshev => 3,
        Backend::Lanczos => lanczos_order as u64 + 2,
        _ => 2,
    };
    vec.saturating_mul(work + 3)
}

/// The spin-bath model and initial state for `seed`.
pub fn bath_problem(num_spins: usize, seed: u64) -> spinqc_core::Result<(spinqc_core::SpinModel, StateVector)> {
    Ok((
        build_spin_bath(num_spins, BATH_J0, BATH_JMAX, seed)?,
        random_bath_state(num_spins, seed)?,
    ))
}

/// Propagates the bath initial state for `steps` steps of
/// `cfg.dt_over_2pi`.
pub fn bath_final_state(num_spins: usize, seed: u64, steps: usize, cfg: &PropagatorConfig) -> spinqc_core::Result<StateVector> {
    let (model, mut psi) = bath_problem(num_spins, seed)?;
    Propagator::new(*cfg)?.evolve(&mut psi, &model, 0.0, steps as f64 * cfg.dt())?;
    Ok(psi)
}

pub fn run_bench(preset: BenchPreset, cfg: &BenchConfig) -> Result<BenchReport, BenchError> {
    let l = preset.num_spins;
    let order = cfg.propagator.lanczos_order;
    let fits = |b: Backend| {
        let need = estimated_bytes(b, l, order);
        let dense_ok = b != Backend::Diag || l <= cfg.propagator.diag_max_spins;
        (need <= cfg.mem_cap_bytes && dense_ok, need)
    };
    let (ok, need) = fits(preset.reference);
    if !ok {
        return Err(BenchError::MemoryCap {
            needed: need,
            cap: cfg.mem_cap_bytes,
        });
    }
    let run = |b: Backend| -> Result<(StateVector, f64), BenchError> {
        let pc = PropagatorConfig { backend: b, ..cfg.propagator };
        let t = Instant::now();
        let psi = bath_final_state(l, cfg.seed, preset.steps, &pc)?;
        Ok((psi, t.elapsed().as_secs_f64()))
    };
    let (reference, ref_secs) = run(preset.reference)?;
    let mut rows = Vec::new();
    for b in Backend::ALL {
        if b == preset.reference {
            rows.push(BenchRow {
                backend: b,
                outcome: Outcome::Reference,
                seconds: ref_secs,
            });
            continue;
        }
        if !cfg.backends.contains(&b) {
            continue;
        }
        let (ok, need) = fits(b);
        if !ok {
            rows.push(BenchRow {
                backend: b,
                outcome: Outcome::Refused(format!("needs about {} MiB", need >> 20)),
                seconds: 0.0,
            });
            continue;
        }
        let (psi, secs) = run(b)?;
        rows.push(BenchRow {
            backend: b,
            outcome: Outcome::Error(reference.distance(&psi)?),
            seconds: secs,
        });
    }
    Ok(BenchReport {
        preset,
        seed: cfg.seed,
        lanczos_order: order,
        rows,
    })
}

fn column_title(b: Backend) -> &'static str {
    match b {
        Backend::Diag => "Exact-Diag",
        Backend::Chebyshev => "Chebyshev",
        Backend::Lanczos => "Lanczos",
        Backend::St2Pair => "ST2-Pair",
        Backend::St4Pair => "ST4-Pair",
        Backend::St2Xyz => "ST2-XYZ",
        Backend::St4Xyz => "ST4-XYZ",
    }
}

/// Error and time rows, one column per backend. `*` marks the reference
/// and `-` a backend that was not run.
pub fn format_table(r: &BenchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {}  L={}  m={}  dt/2pi=0.01  seed={}  lanczos-order={}",
        r.preset.name, r.preset.num_spins, r.preset.steps, r.seed, r.lanczos_order
    );
    let _ = write!(out, "{:<14}", "");
    for b in Backend::ALL {
        let _ = write!(out, "{:>12}", column_title(b));
    }
    out.push('\n');
    let _ = write!(out, "{:<14}", "error");
    for b in Backend::ALL {
        let cell = match r.rows.iter().find(|x| x.backend == b).map(|x| &x.outcome) {
            Some(Outcome::Reference) => "*".to_string(),
            Some(Outcome::Error(e)) => format!("{e:.2E}"),
            Some(Outcome::Refused(_)) => "refused".to_string(),
            None => "-".to_string(),
        };
        let _ = write!(out, "{cell:>12}");
    }
    out.push('\n');
    let _ = write!(out, "{:<14}", "wall time [s]");
    for b in Backend::ALL {
        let cell = match r.rows.iter().find(|x| x.backend == b) {
            Some(x) if !matches!(x.outcome, Outcome::Refused(_)) => format!("{:.2}", x.seconds),
            _ => "-".to_string(),
        };
        let _ = write!(out, "{cell:>12}");
    }
    out.push('\n');
    for x in &r.rows {
        if let Outcome::Refused(why) = &x.outcome {
            let _ = writeln!(out, "# {} refused: {why}", x.backend.name());
        }
    }
    out
}

/// Envelope of `|<S_1^z(t)>|`: the maximum over consecutive windows of
/// `window` steps. Returns `(t/2pi at window end, max)` pairs.
pub fn bath_envelope(
    num_spins: usize,
    seed: u64,
    cfg: &PropagatorConfig,
    total_steps: usize,
    window: usize,
) -> spinqc_core::Result<Vec<(f64, f64)>> {
    let (model, mut psi) = bath_problem(num_spins, seed)?;
    let mut p = Propagator::new(*cfg)?;
    let dt = cfg.dt();
    let mut out = Vec::new();
    let mut env = 0.0f64;
    for k in 1..=total_steps {
        p.evolve(&mut psi, &model, 0.0, dt)?;
        let sz = 0.5 - psi.expectation(1)?.qz;
        env = env.max(sz.abs());
        if k % window == 0 {
            out.push((k as f64 * cfg.dt_over_2pi, env));
            env = 0.0;
        }
    }
    Ok(out)
}

/// Pearson correlation of `ln y` against `t`.
pub fn log_linear_correlation(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(&ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    sxy / (sxx * syy).sqrt()
}

/// Shape of an envelope: an early dip, a revival, then exponential decay.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeShape {
    /// Envelope of the first window.
    pub initial: f64,
    /// First local minimum below a quarter of `initial`, as `(t, value)`.
    pub dip: (f64, f64),
    /// Largest value after the dip.
    pub revival: (f64, f64),
    /// Log-linear correlation from the revival peak to the end.
    pub tail_correlation: f64,
}

/// Analyses an envelope from [`bath_envelope`]; `None` when it never drops
/// below a quarter of its initial value.
pub fn envelope_shape(env: &[(f64, f64)]) -> Option<EnvelopeShape> {
    let initial = env.first()?.1;
    let mut i = env.iter().position(|p| p.1 < initial / 4.0)?;
    while i + 1 < env.len() && env[i + 1].1 < env[i].1 {
        i += 1;
    }
    let dip = env[i];
    let (r, revival) = env[i..]
        .iter()
        .enumerate()
        .fold((0, dip), |best, (k, p)| if p.1 > best.1 .1 { (k, *p) } else { best });
    let tail = &env[i + r..];
    let tail_correlation = if tail.len() >= 3 {
        log_linear_correlation(tail)
    } else {
        f64::NAN
    };
    Some(EnvelopeShape {
        initial,
        dip,
        revival,
        tail_correlation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_match_names() {
        for p in PRESETS {
            assert_eq!(preset(p.name), Some(p));
        }
        assert!(preset("spin-bath-11").is_none());
    }

    #[test]
    fn memory_cap_refuses() {
        let p = preset("spin-bath-22").unwrap();
        let cfg = BenchConfig {
            mem_cap_bytes: 1 << 20,
            ..Default::default()
        };
        assert!(matches!(run_bench(p, &cfg), Err(BenchError::MemoryCap { .. })));
        assert!(estimated_bytes(Backend::Diag, 22, 5) > 1 << 40);
    }

    #[test]
    fn small_bench_is_deterministic() {
        let p = BenchPreset {
            name: "test",
            num_spins: 6,
            steps: 20,
            reference: Backend::Chebyshev,
        };
        let cfg = BenchConfig {
            backends: Backend::ALL.to_vec(),
            ..Default::default()
        };
        assert!(!BenchConfig::default().backends.contains(&Backend::Diag));
        let a = run_bench(p, &cfg).unwrap();
        let b = run_bench(p, &cfg).unwrap();
        for bk in Backend::ALL {
            assert_eq!(a.error(bk).map(f64::to_bits), b.error(bk).map(f64::to_bits));
        }
        assert!(a.error(Backend::Diag).unwrap() < 1e-10);
        assert!(a.error(Backend::St4Pair).unwrap() < a.error(Backend::St2Pair).unwrap());
        let t = format_table(&a);
        assert!(t.contains("Chebyshev") && t.contains('*'), "{t}");
    }

    #[test]
    fn correlation_of_exponential() {
        let pts: Vec<(f64, f64)> = (0..20).map(|i| (i as f64, (-0.3 * i as f64).exp())).collect();
        assert!((log_linear_correlation(&pts) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn shape_of_synthetic_envelope() {
        let mut env = vec![(0.1, 0.5), (0.2, 0.2), (0.3, 0.1), (0.4, 0.05), (0.5, 0.06), (0.6, 0.2)];
        for k in 0..10 {
            env.push((0.7 + 0.1 * k as f64, 0.19 * (-0.2 * k as f64).exp()));
        }
        let s = envelope_shape(&env).unwrap();
        assert_eq!(s.dip, (0.4, 0.05));
        assert_eq!(s.revival, (0.6, 0.2));
        assert!(s.tail_correlation < -0.9);
        assert!(envelope_shape(&[(0.1, 0.5), (0.2, 0.4)]).is_none());
    }
}
