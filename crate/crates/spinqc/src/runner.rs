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


//! Executes programs on the ideal machine or on a physical backend.

use std::fmt;
use std::time::Instant;

use spinqc_core::propagators::Propagator;
use spinqc_core::pulse::TwoPiKParams;
use spinqc_core::{Axis, Backend, PropagatorConfig, QubitExpectation, StateVector, C64};

use crate::program::{Assertion, Item, Program};

/// Where a program runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunBackend {
    /// Gates and NMR steps as exact unitaries.
    Ideal,
    /// Microinstructions integrated in time; gates stay exact.
    Physical(Backend),
}

impl RunBackend {
    pub fn name(self) -> &'static str {
        match self {
            RunBackend::Ideal => "ideal",
            RunBackend::Physical(b) => b.name(),
        }
    }

    pub fn from_name(s: &str) -> Option<RunBackend> {
        if s.eq_ignore_ascii_case("ideal") {
            Some(RunBackend::Ideal)
        } else {
            Backend::from_name(s).map(RunBackend::Physical)
        }
    }

    /// All names accepted by [`RunBackend::from_name`].
    pub fn names() -> Vec<&'static str> {
        let mut v = vec!["ideal"];
        v.extend(Backend::ALL.iter().map(|b| b.name()));
        v
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub backend: RunBackend,
    /// Integrator settings; its `backend` field is ignored in favour of
    /// [`RunConfig::backend`].
    pub propagator: PropagatorConfig,
    /// Overrides the program's `s` for `nmr` steps.
    pub s: Option<u64>,
    pub dump_amplitudes: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            backend: RunBackend::Ideal,
            propagator: PropagatorConfig::default(),
            s: None,
            dump_amplitudes: false,
        }
    }
}

impl RunConfig {
    pub fn physical(backend: Backend, dt_over_2pi: f64) -> Self {
        RunConfig {
            backend: RunBackend::Physical(backend),
            propagator: PropagatorConfig {
                backend,
                dt_over_2pi,
                ..Default::default()
            },
            ..Default::default()
        }
    }

    pub fn with_s(mut self, s: u64) -> Self {
        self.s = Some(s);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Checkpoint {
    pub label: String,
    /// One entry per qubit, qubit 1 first.
    pub expectations: Vec<QubitExpectation>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssertionOutcome {
    pub assertion: Assertion,
    pub actual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub num_qubits: usize,
    /// `(key, value)` pairs describing the run.
    pub config: Vec<(String, String)>,
    pub checkpoints: Vec<Checkpoint>,
    pub assertions: Vec<AssertionOutcome>,
    pub amplitudes: Option<Vec<C64>>,
    /// Wall-clock seconds per phase.
    pub timings: Vec<(String, f64)>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    /// The last checkpoint.
    pub fn last(&self) -> &Checkpoint {
        self.checkpoints.last().expect("a run always records a checkpoint")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunError {
    Core(spinqc_core::Error),
    Config(String),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Core(e) => write!(f, "{e}"),
            RunError::Config(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for RunError {}

impl From<spinqc_core::Error> for RunError {
    fn from(e: spinqc_core::Error) -> Self {
        RunError::Core(e)
    }
}

pub fn expectation_on(e: &QubitExpectation, axis: Axis) -> f64 {
    match axis {
        Axis::X => e.qx,
        Axis::Y => e.qy,
        Axis::Z => e.qz,
    }
}

/// Runs `program` and collects checkpoints, assertion results and timings.
///
/// With no `expect` in the program a single checkpoint named `final` is
/// recorded at the end.
pub fn run_program(program: &Program, cfg: &RunConfig) -> Result<RunReport, RunError> {
    let t_start = Instant::now();
    let mut config = vec![("backend".to_string(), cfg.backend.name().to_string())];

    let mut propagator = match cfg.backend {
        RunBackend::Ideal => {
            if program.has_micro() {
                return Err(RunError::Config(
                    "the ideal backend cannot run microinstructions; choose a physical backend".into(),
                ));
            }
            None
        }
        RunBackend::Physical(b) => {
            let pc = PropagatorConfig { backend: b, ..cfg.propagator };
            pc.validate()?;
            config.push(("dt/2pi".into(), format!("{}", pc.dt_over_2pi)));
            match b {
                Backend::Lanczos => config.push(("lanczos-order".into(), pc.lanczos_order.to_string())),
                Backend::Chebyshev => config.push(("cheb-kappa".into(), format!("{:e}", pc.cheb_kappa))),
                _ => {}
            }
            Some(Propagator::new(pc)?)
        }
    };

    let params = if program.has_nmr() && propagator.is_some() {
        let Some(s) = cfg.s.or(program.s) else {
            return Err(RunError::Config("nmr steps on a physical backend need `s` (file or --s)".into()));
        };
        config.push(("s".into(), s.to_string()));
        Some(TwoPiKParams::from_s(s)?)
    } else {
        None
    };

    for item in &program.items {
        if let Item::Micro(m) = item {
            if m.model.num_spins() != program.num_qubits {
                return Err(RunError::Config(format!(
                    "microinstruction `{}` has {} spins, program has {} qubits",
                    m.label,
                    m.model.num_spins(),
                    program.num_qubits
                )));
            }
        }
    }

    let mut state: StateVector = program.initial_state()?;
    let t_prepared = Instant::now();

    let mut checkpoints = Vec::new();
    let mut assertions = Vec::new();
    for item in &program.items {
        match item {
            Item::Gate(op) => op.apply(&mut state)?,
            Item::Nmr(step) => match (&mut propagator, &params) {
                (Some(p), Some(k)) => p.run_micro(&mut state, &step.microinstruction(k)?)?,
                _ => {
                    for op in step.ideal_ops() {
                        op.apply(&mut state)?;
                    }
                }
            },
            Item::Micro(m) => {
                let p = propagator.as_mut().expect("checked above");
                p.run_micro(&mut state, m)?;
            }
            Item::Expect(label) => checkpoints.push(Checkpoint {
                label: label.clone().unwrap_or_else(|| format!("expect{}", checkpoints.len() + 1)),
                expectations: state.expectations(),
            }),
            Item::Assert(a) => {
                let e = state.expectation(a.qubit)?;
                let actual = expectation_on(&e, a.axis);
                assertions.push(AssertionOutcome {
                    assertion: *a,
                    actual,
                    pass: (actual - a.value).abs() <= a.tol,
                });
            }
        }
    }
    if checkpoints.is_empty() {
        checkpoints.push(Checkpoint {
            label: "final".into(),
            expectations: state.expectations(),
        });
    }
    let t_done = Instant::now();

    Ok(RunReport {
        num_qubits: program.num_qubits,
        config,
        checkpoints,
        assertions,
        amplitudes: cfg.dump_amplitudes.then(|| state.into_amplitudes()),
        timings: vec![
            ("prepare".into(), (t_prepared - t_start).as_secs_f64()),
            ("simulate".into(), (t_done - t_prepared).as_secs_f64()),
        ],
    })
}
