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


//! Program files, runner, benchmarks and command-line front end for the
//! `spinqc_core` simulator.

pub mod bench;
pub mod corpus;
pub mod expr;
pub mod program;
pub mod report;
pub mod runner;
pub mod selftest;

pub use program::{parse_program, serialize, ParseError, Program};
pub use runner::{run_program, RunBackend, RunConfig};
