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


//! Program files.
//!
//! A program is line oriented and case-insensitive. `#` starts a comment.
//!
//! ```text
//! qubits 2
//! init 00                 # basis index, or exactly L binary digits (qubit L first)
//! s 32                    # default pulse label for `nmr` steps
//! gate W 1
//! gate CP 2 1 angle pi/2
//! nmr Y 2                 # symbolic NMR pulse, expanded at run time
//! nmr X 1 angle -2.81
//! nmr I'
//! micro X1 dur 8
//!   field 1 x static 0 sin amp -0.03125 freq 1 phase -pi/2
//!   coupling 1 2 z -0.43e-6
//! expect after-cnot
//! assert qz 1 0.0 tol 1e-9
//! ```
//!
//! An initial state can also be given amplitude by amplitude:
//!
//! ```text
//! init state
//!   amp 01 sqrt(1/2)
//!   amp 10 -sqrt(1/2) 0
//! ```
//!
//! Times are `t / 2 pi`, angles and phases are radians, `freq` is the
//! angular frequency of the sinusoid.

use std::fmt::{self, Write as _};

use spinqc_core::gates::GateKind;
use spinqc_core::pulse::NmrStep;
use spinqc_core::state::{unitarity_deviation, UNITARY_TOL};
use spinqc_core::{Axis, FieldTerm, GateOp, Mat2, Mat4, Microinstruction, SpinModel, StateVector, C64};

use crate::expr;

/// Largest register a program file may declare.
pub const MAX_QUBITS: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
pub enum Init {
    Basis(usize),
    /// Nonzero amplitudes by basis index; all others are zero.
    Amplitudes(Vec<(usize, C64)>),
}

/// A self-check on one expectation value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Assertion {
    pub axis: Axis,
    pub qubit: usize,
    pub value: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Gate(GateOp),
    /// NMR pulse or free evolution on the two-spin machine.
    Nmr(NmrStep),
    Micro(Microinstruction),
    /// Records the expectation values, optionally under a label.
    Expect(Option<String>),
    Assert(Assertion),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub num_qubits: usize,
    pub init: Init,
    /// Pulse label `s` used to expand `nmr` steps when the run does not
    /// override it.
    pub s: Option<u64>,
    pub items: Vec<Item>,
}

impl Program {
    pub fn new(num_qubits: usize) -> Self {
        Program {
            num_qubits,
            init: Init::Basis(0),
            s: None,
            items: Vec::new(),
        }
    }

    pub fn with_init(mut self, init: Init) -> Self {
        self.init = init;
        self
    }

    pub fn gate(&mut self, kind: GateKind, targets: &[usize]) -> &mut Self {
        self.items.push(Item::Gate(GateOp::new(kind, targets)));
        self
    }

    pub fn gates(&mut self, ops: &[GateOp]) -> &mut Self {
        self.items.extend(ops.iter().cloned().map(Item::Gate));
        self
    }

    pub fn nmr(&mut self, steps: &[NmrStep]) -> &mut Self {
        self.items.extend(steps.iter().copied().map(Item::Nmr));
        self
    }

    pub fn micros(&mut self, micros: impl IntoIterator<Item = Microinstruction>) -> &mut Self {
        self.items.extend(micros.into_iter().map(Item::Micro));
        self
    }

    pub fn expect(&mut self, label: Option<&str>) -> &mut Self {
        self.items.push(Item::Expect(label.map(String::from)));
        self
    }

    pub fn assert(&mut self, axis: Axis, qubit: usize, value: f64, tol: f64) -> &mut Self {
        self.items.push(Item::Assert(Assertion { axis, qubit, value, tol }));
        self
    }

    pub fn has_nmr(&self) -> bool {
        self.items.iter().any(|i| matches!(i, Item::Nmr(_)))
    }

    pub fn has_micro(&self) -> bool {
        self.items.iter().any(|i| matches!(i, Item::Micro(_)))
    }

    pub fn initial_state(&self) -> spinqc_core::Result<StateVector> {
        match &self.init {
            Init::Basis(i) => StateVector::basis_state(self.num_qubits, *i),
            Init::Amplitudes(list) => {
                let dim = 1usize << self.num_qubits;
                let mut amps = vec![C64::new(0.0, 0.0); dim];
                for &(i, a) in list {
                    if i >= dim {
                        return Err(spinqc_core::Error::IndexOutOfRange { index: i, dim });
                    }
                    amps[i] = a;
                }
                StateVector::from_amplitudes(amps)
            }
        }
    }

    /// The program as file text. [`parse_program`] gives back an equal
    /// program.
    pub fn to_text(&self) -> String {
        serialize(self)
    }
}

struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok { text: &line[s..i], col: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Tok { text: &line[s..], col: s + 1 });
    }
    out
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    toks: Vec<Tok<'a>>,
}

impl<'a> Line<'a> {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.no,
            column: col,
            message: msg.into(),
        })
    }

    fn end_col(&self) -> usize {
        self.text.trim_end().len() + 1
    }

    fn tok(&self, i: usize, what: &str) -> Result<&Tok<'a>, ParseError> {
        match self.toks.get(i) {
            Some(t) => Ok(t),
            None => self.err(self.end_col(), format!("{what} expected")),
        }
    }

    fn expr(&self, i: usize, what: &str) -> Result<f64, ParseError> {
        let t = self.tok(i, what)?;
        expr::eval(t.text).or_else(|(off, m)| self.err(t.col + off, format!("bad {what}: {m}")))
    }

    /// Evaluates everything from token `i` to the end of the line.
    fn expr_rest(&self, i: usize, what: &str) -> Result<f64, ParseError> {
        let t = self.tok(i, what)?;
        let rest = self.text[t.col - 1..].trim_end();
        expr::eval(rest).or_else(|(off, m)| self.err(t.col + off, format!("bad {what}: {m}")))
    }

    fn uint(&self, i: usize, what: &str) -> Result<usize, ParseError> {
        let t = self.tok(i, what)?;
        t.text
            .parse::<usize>()
            .or_else(|_| self.err(t.col, format!("{what} must be a non-negative integer, got `{}`", t.text)))
    }

    fn qubit(&self, i: usize, num_qubits: usize) -> Result<usize, ParseError> {
        let q = self.uint(i, "qubit")?;
        if q == 0 || q > num_qubits {
            return self.err(self.toks[i].col, format!("qubit {q} out of range 1..={num_qubits}"));
        }
        Ok(q)
    }

    fn keyword(&self, i: usize, kw: &str) -> Result<(), ParseError> {
        let t = self.tok(i, &format!("`{kw}`"))?;
        if t.text.eq_ignore_ascii_case(kw) {
            Ok(())
        } else {
            self.err(t.col, format!("expected `{kw}`, got `{}`", t.text))
        }
    }

    fn no_more(&self, i: usize) -> Result<(), ParseError> {
        match self.toks.get(i) {
            Some(t) => self.err(t.col, format!("unexpected `{}`", t.text)),
            None => Ok(()),
        }
    }

    fn axis(&self, i: usize) -> Result<Axis, ParseError> {
        let t = self.tok(i, "axis")?;
        match t.text.to_ascii_lowercase().as_str() {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            _ => self.err(t.col, format!("axis must be x, y or z, got `{}`", t.text)),
        }
    }
}

/// A basis index written in decimal, or as exactly `num_qubits` binary
/// digits with qubit `num_qubits` first. `|..>` marks a bit string
/// explicitly.
fn basis_index(line: &Line, i: usize, num_qubits: usize) -> Result<usize, ParseError> {
    let t = line.tok(i, "basis state")?;
    let dim = 1usize << num_qubits;
    let (bits, explicit) = match t.text.strip_prefix('|').and_then(|s| s.strip_suffix('>')) {
        Some(b) => (b, true),
        None => (t.text, false),
    };
    let is_bits = !bits.is_empty() && bits.bytes().all(|c| c == b'0' || c == b'1');
    if explicit || (is_bits && bits.len() == num_qubits && num_qubits > 1) {
        if !is_bits || bits.len() != num_qubits {
            return line.err(t.col, format!("bit string must have exactly {num_qubits} binary digits"));
        }
        return Ok(usize::from_str_radix(bits, 2).expect("binary digits"));
    }
    match t.text.parse::<usize>() {
        Ok(v) if v < dim => Ok(v),
        Ok(v) => line.err(t.col, format!("basis index {v} out of range 0..{dim}")),
        Err(_) => line.err(t.col, format!("bad basis state `{}`", t.text)),
    }
}

fn needs_angle(name: &str) -> bool {
    matches!(name, "R" | "CP" | "I" | "ZZ" | "RX" | "RY" | "RZ" | "PHASE")
}

fn gate_kind(name: &str, angle: f64) -> Option<GateKind> {
    use GateKind::*;
    Some(match name {
        "X" => X,
        "XBAR" => Xbar,
        "Y" => Y,
        "YBAR" => Ybar,
        "R" => Rphase(angle),
        "CP" => CtrlPhase(angle),
        "I" => IsingPhase(angle),
        "ZZ" => ZzPhase(angle),
        "RX" => Rotation(Axis::X, angle),
        "RY" => Rotation(Axis::Y, angle),
        "RZ" => Rotation(Axis::Z, angle),
        "PHASE" => GlobalPhase(angle),
        "CNOT" => Cnot,
        "W" | "H" => Hadamard,
        "SWAP" => Swap,
        "TOFFOLI" => Toffoli,
        "NOT" => Not,
        _ => return None,
    })
}

fn parse_gate(line: &Line, num_qubits: usize) -> Result<GateOp, ParseError> {
    let name_tok = line.tok(1, "gate name")?;
    let name = name_tok.text.to_ascii_uppercase();
    let custom = name == "U1" || name == "U2";
    if !custom && gate_kind(&name, 0.0).is_none() {
        return line.err(name_tok.col, format!("unknown gate `{}`", name_tok.text));
    }
    let mut i = 2;
    let mut targets = Vec::new();
    while let Some(t) = line.toks.get(i) {
        if t.text.eq_ignore_ascii_case("angle") || t.text.eq_ignore_ascii_case("matrix") {
            break;
        }
        let q = line.qubit(i, num_qubits)?;
        if targets.contains(&q) {
            return line.err(t.col, format!("qubit {q} named twice"));
        }
        targets.push(q);
        i += 1;
    }
    let kind = if custom {
        let n = if name == "U1" { 2 } else { 4 };
        line.keyword(i, "matrix")?;
        let mut vals = Vec::with_capacity(2 * n * n);
        for k in 0..2 * n * n {
            vals.push(line.expr(i + 1 + k, "matrix entry")?);
        }
        line.no_more(i + 1 + 2 * n * n)?;
        let entry = |r: usize, c: usize| C64::new(vals[2 * (r * n + c)], vals[2 * (r * n + c) + 1]);
        if n == 2 {
            let u: Mat2 = [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]];
            let d = unitarity_deviation(&u);
            if d > UNITARY_TOL {
                return line.err(line.toks[i].col, format!("matrix is not unitary (deviation {d:e})"));
            }
            GateKind::Custom1q(u)
        } else {
            let mut u: Mat4 = [[C64::new(0.0, 0.0); 4]; 4];
            for (r, row) in u.iter_mut().enumerate() {
                for (c, v) in row.iter_mut().enumerate() {
                    *v = entry(r, c);
                }
            }
            let d = unitarity_deviation(&u);
            if d > UNITARY_TOL {
                return line.err(line.toks[i].col, format!("matrix is not unitary (deviation {d:e})"));
            }
            GateKind::Custom2q(u)
        }
    } else if needs_angle(&name) {
        line.keyword(i, "angle")?;
        let a = line.expr_rest(i + 1, "angle")?;
        gate_kind(&name, a).expect("known gate")
    } else {
        line.no_more(i)?;
        gate_kind(&name, 0.0).expect("known gate")
    };
    if targets.len() != kind.arity() {
        return line.err(
            name_tok.col,
            format!("gate {name} needs {} target(s), got {}", kind.arity(), targets.len()),
        );
    }
    Ok(GateOp { kind, targets })
}

fn parse_nmr(line: &Line, num_qubits: usize) -> Result<NmrStep, ParseError> {
    let t = line.tok(1, "pulse name")?;
    if num_qubits != 2 {
        return line.err(t.col, "nmr steps need a 2-qubit program");
    }
    let name = t.text.to_ascii_uppercase();
    if name == "I'" {
        line.no_more(2)?;
        return Ok(NmrStep::Interaction);
    }
    let (axis, sign) = match name.as_str() {
        "X" => (Axis::X, 1.0),
        "XBAR" => (Axis::X, -1.0),
        "Y" => (Axis::Y, 1.0),
        "YBAR" => (Axis::Y, -1.0),
        _ => return line.err(t.col, format!("unknown nmr step `{}` (X, XBAR, Y, YBAR or I')", t.text)),
    };
    let spin = line.qubit(2, 2)?;
    let angle = if line.toks.len() > 3 {
        line.keyword(3, "angle")?;
        sign * line.expr_rest(4, "angle")?
    } else {
        sign * std::f64::consts::FRAC_PI_2
    };
    Ok(NmrStep::Rotate { spin, axis, angle })
}

fn parse_field(line: &Line, model: &mut SpinModel, num_qubits: usize) -> Result<(), ParseError> {
    let spin = line.qubit(1, num_qubits)?;
    let axis = line.axis(2)?;
    line.keyword(3, "static")?;
    let mut term = FieldTerm::constant(line.expr(4, "static value")?);
    if line.toks.len() > 5 {
        line.keyword(5, "sin")?;
        line.keyword(6, "amp")?;
        term.amplitude = line.expr(7, "amplitude")?;
        line.keyword(8, "freq")?;
        term.omega = line.expr(9, "frequency")?;
        line.keyword(10, "phase")?;
        term.phase = line.expr(11, "phase")?;
        line.no_more(12)?;
    }
    model
        .set_field(spin, axis, term)
        .map(|_| ())
        .or_else(|e| line.err(line.toks[0].col, e.to_string()))
}

fn parse_coupling(line: &Line, model: &mut SpinModel, num_qubits: usize) -> Result<(), ParseError> {
    let j = line.qubit(1, num_qubits)?;
    let k = line.qubit(2, num_qubits)?;
    if j == k {
        return line.err(line.toks[2].col, format!("coupling of qubit {j} to itself"));
    }
    let axis = line.axis(3)?;
    let v = line.expr(4, "coupling")?;
    line.no_more(5)?;
    model
        .set_coupling(j, k, axis, v)
        .map(|_| ())
        .or_else(|e| line.err(line.toks[0].col, e.to_string()))
}

enum Block {
    None,
    Micro,
    State,
}

/// Parses program text.
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut prog: Option<Program> = None;
    let mut init_seen = false;
    let mut block = Block::None;

    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let line = Line {
            no: idx + 1,
            text: body,
            toks: tokenize(body),
        };
        let Some(first) = line.toks.first() else { continue };
        let kw = first.text.to_ascii_lowercase();

        let Some(p) = prog.as_mut() else {
            if kw != "qubits" {
                return line.err(first.col, "program must start with `qubits <L>`");
            }
            let n = line.uint(1, "qubit count")?;
            if n == 0 || n > MAX_QUBITS {
                return line.err(line.toks[1].col, format!("qubit count must lie in 1..={MAX_QUBITS}"));
            }
            line.no_more(2)?;
            prog = Some(Program::new(n));
            continue;
        };
        let n = p.num_qubits;

        match kw.as_str() {
            "field" | "coupling" => {
                let Block::Micro = block else {
                    return line.err(first.col, format!("`{kw}` outside a micro block"));
                };
                let Some(Item::Micro(m)) = p.items.last_mut() else { unreachable!() };
                if kw == "field" {
                    parse_field(&line, &mut m.model, n)?;
                } else {
                    parse_coupling(&line, &mut m.model, n)?;
                }
                continue;
            }
            "amp" => {
                let Block::State = block else {
                    return line.err(first.col, "`amp` outside an `init state` block");
                };
                let i = basis_index(&line, 1, n)?;
                let re = line.expr(2, "real part")?;
                let im = if line.toks.len() > 3 { line.expr(3, "imaginary part")? } else { 0.0 };
                line.no_more(4)?;
                let Init::Amplitudes(list) = &mut p.init else { unreachable!() };
                if list.iter().any(|&(k, _)| k == i) {
                    return line.err(line.toks[1].col, format!("amplitude {i} given twice"));
                }
                list.push((i, C64::new(re, im)));
                continue;
            }
            _ => {}
        }
        if let Block::State = block {
            check_norm(p, &line)?;
        }
        block = Block::None;

        match kw.as_str() {
            "qubits" => return line.err(first.col, "`qubits` given twice"),
            "init" => {
                if init_seen || !p.items.is_empty() {
                    return line.err(first.col, "`init` must come once, before any operation");
                }
                init_seen = true;
                if line.tok(1, "basis state")?.text.eq_ignore_ascii_case("state") {
                    line.no_more(2)?;
                    p.init = Init::Amplitudes(Vec::new());
                    block = Block::State;
                } else {
                    p.init = Init::Basis(basis_index(&line, 1, n)?);
                    line.no_more(2)?;
                }
            }
            "s" => {
                if p.s.is_some() {
                    return line.err(first.col, "`s` given twice");
                }
                let s = line.uint(1, "s")?;
                if s == 0 || s % 8 != 0 {
                    return line.err(line.toks[1].col, "s must be a positive multiple of 8");
                }
                line.no_more(2)?;
                p.s = Some(s as u64);
            }
            "gate" => p.items.push(Item::Gate(parse_gate(&line, n)?)),
            "nmr" => p.items.push(Item::Nmr(parse_nmr(&line, n)?)),
            "micro" => {
                let label = line.tok(1, "label")?.text.to_string();
                line.keyword(2, "dur")?;
                let dur = line.expr(3, "duration")?;
                line.no_more(4)?;
                let model = SpinModel::new(n).expect("qubit count checked");
                let m = Microinstruction::new(label, dur, model).or_else(|e| line.err(line.toks[3].col, e.to_string()))?;
                p.items.push(Item::Micro(m));
                block = Block::Micro;
            }
            "expect" => {
                line.no_more(2)?;
                p.items.push(Item::Expect(line.toks.get(1).map(|t| t.text.to_string())));
            }
            "assert" => {
                let at = line.tok(1, "qx, qy or qz")?;
                let axis = match at.text.to_ascii_lowercase().as_str() {
                    "qx" => Axis::X,
                    "qy" => Axis::Y,
                    "qz" => Axis::Z,
                    _ => return line.err(at.col, format!("expected qx, qy or qz, got `{}`", at.text)),
                };
                let qubit = line.qubit(2, n)?;
                let value = line.expr(3, "expected value")?;
                line.keyword(4, "tol")?;
                let tol = line.expr(5, "tolerance")?;
                if tol < 0.0 {
                    return line.err(line.toks[5].col, "tolerance must be non-negative");
                }
                line.no_more(6)?;
                p.items.push(Item::Assert(Assertion { axis, qubit, value, tol }));
            }
            _ => return line.err(first.col, format!("unknown directive `{}`", first.text)),
        }
    }
    let Some(p) = prog else {
        return Err(ParseError {
            line: text.lines().count().max(1),
            column: 1,
            message: "empty program: `qubits <L>` expected".into(),
        });
    };
    if let Block::State = block {
        let last = Line {
            no: text.lines().count(),
            text: "",
            toks: Vec::new(),
        };
        check_norm(&p, &last)?;
    }
    Ok(p)
}

fn check_norm(p: &Program, line: &Line) -> Result<(), ParseError> {
    let Init::Amplitudes(list) = &p.init else { return Ok(()) };
    let norm: f64 = list.iter().map(|(_, a)| a.norm_sqr()).sum();
    if (norm - 1.0).abs() > 1e-10 {
        return line.err(1, format!("initial amplitudes have squared norm {norm}, not 1"));
    }
    Ok(())
}

fn num(v: f64) -> String {
    expr::format_angle(v)
}

fn bits(i: usize, n: usize) -> String {
    format!("{:0width$b}", i, width = n)
}

fn basis_text(i: usize, n: usize) -> String {
    if n > 1 {
        bits(i, n)
    } else {
        i.to_string()
    }
}

fn axis_name(a: Axis) -> &'static str {
    match a {
        Axis::X => "x",
        Axis::Y => "y",
        Axis::Z => "z",
    }
}

fn write_gate(out: &mut String, op: &GateOp) {
    let _ = write!(out, "gate {}", op.kind.name());
    for t in &op.targets {
        let _ = write!(out, " {t}");
    }
    match op.kind {
        GateKind::Custom1q(u) => {
            out.push_str(" matrix");
            for v in u.iter().flatten() {
                let _ = write!(out, " {:?} {:?}", v.re, v.im);
            }
        }
        GateKind::Custom2q(u) => {
            out.push_str(" matrix");
            for v in u.iter().flatten() {
                let _ = write!(out, " {:?} {:?}", v.re, v.im);
            }
        }
        k => {
            if let Some(a) = k.angle() {
                let _ = write!(out, " angle {}", num(a));
            }
        }
    }
    out.push('\n');
}

/// Program text that parses back to `p`.
pub fn serialize(p: &Program) -> String {
    let mut out = String::new();
    let n = p.num_qubits;
    let _ = writeln!(out, "qubits {n}");
    match &p.init {
        Init::Basis(i) => {
            let _ = writeln!(out, "init {}", basis_text(*i, n));
        }
        Init::Amplitudes(list) => {
            out.push_str("init state\n");
            for (i, a) in list {
                let _ = writeln!(out, "  amp {} {} {}", basis_text(*i, n), num(a.re), num(a.im));
            }
        }
    }
    if let Some(s) = p.s {
        let _ = writeln!(out, "s {s}");
    }
    for item in &p.items {
        match item {
            Item::Gate(op) => write_gate(&mut out, op),
            Item::Nmr(NmrStep::Interaction) => out.push_str("nmr I'\n"),
            Item::Nmr(NmrStep::Rotate { spin, axis, angle }) => {
                let a = if *axis == Axis::X { "X" } else { "Y" };
                if *angle == std::f64::consts::FRAC_PI_2 {
                    let _ = writeln!(out, "nmr {a} {spin}");
                } else if *angle == -std::f64::consts::FRAC_PI_2 {
                    let _ = writeln!(out, "nmr {a}BAR {spin}");
                } else {
                    let _ = writeln!(out, "nmr {a} {spin} angle {}", num(*angle));
                }
            }
            Item::Micro(m) => {
                let label: String = m
                    .label
                    .chars()
                    .map(|c| if c.is_whitespace() || c == '#' { '_' } else { c })
                    .collect();
                let label = if label.is_empty() { "-".to_string() } else { label };
                let _ = writeln!(out, "micro {label} dur {}", num(m.duration_over_2pi));
                for j in 1..=m.model.num_spins() {
                    for axis in [Axis::X, Axis::Y, Axis::Z] {
                        let f = m.model.field(j, axis);
                        if f == FieldTerm::default() {
                            continue;
                        }
                        let _ = write!(out, "  field {j} {} static {}", axis_name(axis), num(f.static_value));
                        if f.amplitude != 0.0 || f.omega != 0.0 || f.phase != 0.0 {
                            let _ = write!(out, " sin amp {} freq {} phase {}", num(f.amplitude), num(f.omega), num(f.phase));
                        }
                        out.push('\n');
                    }
                }
                for (j, k, c) in m.model.couplings() {
                    for axis in [Axis::X, Axis::Y, Axis::Z] {
                        let v = c[axis.index()];
                        if v != 0.0 {
                            let _ = writeln!(out, "  coupling {j} {k} {} {}", axis_name(axis), num(v));
                        }
                    }
                }
            }
            Item::Expect(None) => out.push_str("expect\n"),
            Item::Expect(Some(l)) => {
                let _ = writeln!(out, "expect {}", l.split_whitespace().collect::<Vec<_>>().join("_"));
            }
            Item::Assert(a) => {
                let _ = writeln!(
                    out,
                    "assert q{} {} {} tol {}",
                    axis_name(a.axis),
                    a.qubit,
                    num(a.value),
                    num(a.tol)
                );
            }
        }
    }
    out
}
