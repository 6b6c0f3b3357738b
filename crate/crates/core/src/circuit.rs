//! Circuit intermediate representation: an ordered gate list over a fixed
//! register, plus the structural operations the compiler builds on —
//! contiguous splitting, inversion, concatenation, random-target generation,
//! explicit unitary extraction, and a line-oriented text serialization.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind, ALL_KINDS, ONE_QUBIT_KINDS};
use crate::statevec::{check_support, StateVector};

/// Resource guard for explicit d x d unitary extraction.
pub const MAX_UNITARY_QUBITS: usize = 10;

/// An ordered list of gates on `n_qubits` wires. Gate list order is
/// execution order; as an operator the circuit is the right-to-left product
/// of its gates.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    label: String,
}

impl Circuit {
    pub fn new(n_qubits: usize, label: impl Into<String>) -> Circuit {
        Circuit {
            n_qubits,
            gates: Vec::new(),
            label: label.into(),
        }
    }

    /// Build from a gate list, validating every gate against the register.
    pub fn from_gates(n_qubits: usize, label: impl Into<String>, gates: Vec<Gate>) -> Result<Circuit> {
        let mut circuit = Circuit::new(n_qubits, label);
        for gate in gates {
            circuit.push(gate)?;
        }
        Ok(circuit)
    }

    /// Append a gate, validating qubit indices and angle finiteness.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        check_support(&gate, self.n_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Circuit {
        self.label = label.into();
        self
    }

    /// Contiguous partition into `n_parts` sub-circuits, preserving order.
    /// Sizes differ by at most one, with earlier parts taking the remainder;
    /// parts beyond the gate count come out empty.
    pub fn split(&self, n_parts: usize) -> Result<Vec<Circuit>> {
        if n_parts == 0 {
            return Err(Error::usage("cannot split a circuit into 0 parts".to_string()));
        }
        let base = self.gates.len() / n_parts;
        let remainder = self.gates.len() % n_parts;
        let mut parts = Vec::with_capacity(n_parts);
        let mut offset = 0;
        for k in 0..n_parts {
            let size = base + usize::from(k < remainder);
            parts.push(Circuit {
                n_qubits: self.n_qubits,
                gates: self.gates[offset..offset + size].to_vec(),
                label: format!("{}_{}", self.label, k + 1),
            });
            offset += size;
        }
        Ok(parts)
    }

    /// The adjoint circuit: gate order reversed, each gate replaced by its
    /// adjoint, so that running a circuit then its inverse is the identity.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::adjoint).collect(),
            label: format!("inv({})", self.label),
        }
    }

    /// Gates of `self` followed by gates of `other`.
    pub fn concat(&self, other: &Circuit) -> Result<Circuit> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::usage(format!(
                "cannot concatenate circuits on {} and {} qubits",
                self.n_qubits, other.n_qubits
            )));
        }
        let mut gates = Vec::with_capacity(self.gates.len() + other.gates.len());
        gates.extend_from_slice(&self.gates);
        gates.extend_from_slice(&other.gates);
        Ok(Circuit {
            n_qubits: self.n_qubits,
            gates,
            label: match (self.gates.is_empty(), other.gates.is_empty()) {
                (true, false) => other.label.clone(),
                (_, true) => self.label.clone(),
                _ => format!("{}+{}", self.label, other.label),
            },
        })
    }

    /// Explicit d x d unitary: column `j` is the circuit applied to basis
    /// state `j`. Guarded to at most [`MAX_UNITARY_QUBITS`] qubits.
    pub fn unitary_matrix(&self) -> Result<DMatrix<Complex64>> {
        if self.n_qubits > MAX_UNITARY_QUBITS {
            return Err(Error::config(format!(
                "unitary extraction limited to {MAX_UNITARY_QUBITS} qubits, got {}",
                self.n_qubits
            )));
        }
        let d = 1usize << self.n_qubits;
        let mut matrix = DMatrix::<Complex64>::zeros(d, d);
        for j in 0..d {
            let mut amps = vec![Complex64::ZERO; d];
            amps[j] = Complex64::ONE;
            for gate in &self.gates {
                crate::statevec::apply_gate_unchecked(&mut amps, self.n_qubits, gate);
            }
            for i in 0..d {
                matrix[(i, j)] = amps[i];
            }
        }
        Ok(matrix)
    }

    /// Serialize to the line format `KIND q0[,q1][,angle]`, one gate per
    /// line, preceded by a `QUBITS n` header. Angles are printed with 17
    /// significant digits so a reload is bit-exact.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "QUBITS {}", self.n_qubits);
        for gate in &self.gates {
            match *gate {
                Gate::Cnot { control, target } => {
                    let _ = writeln!(out, "CNOT {control},{target}");
                }
                Gate::Swap(a, b) => {
                    let _ = writeln!(out, "SWAP {a},{b}");
                }
                ref g => match (g.support(), g.angle()) {
                    (crate::gate::Support::One(q), Some(angle)) => {
                        let _ = writeln!(out, "{} {q},{angle:.16e}", g.kind().token());
                    }
                    (crate::gate::Support::One(q), None) => {
                        let _ = writeln!(out, "{} {q}", g.kind().token());
                    }
                    _ => unreachable!(),
                },
            }
        }
        out
    }

    /// Parse the [`Circuit::to_text`] format. Lines starting with `#` and
    /// blank lines are ignored. Parameter links are not part of the format;
    /// loaded rotations carry plain angles.
    pub fn from_text(text: &str) -> Result<Circuit> {
        let mut n_qubits: Option<usize> = None;
        let mut circuit: Option<Circuit> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut pieces = line.split_whitespace();
            let head = pieces.next().expect("non-empty line");
            if n_qubits.is_none() {
                if head != "QUBITS" {
                    return Err(Error::usage(format!(
                        "line {}: expected `QUBITS n` header, found `{line}`",
                        lineno + 1
                    )));
                }
                let n: usize = pieces
                    .next()
                    .ok_or_else(|| Error::usage("QUBITS header is missing a count".to_string()))?
                    .parse()
                    .map_err(|_| Error::usage("QUBITS header count is not an integer".to_string()))?;
                n_qubits = Some(n);
                circuit = Some(Circuit::new(n, "loaded"));
                continue;
            }
            let kind = GateKind::from_token(head).ok_or_else(|| {
                Error::usage(format!("line {}: unknown gate kind `{head}`", lineno + 1))
            })?;
            let args: Vec<&str> = pieces
                .next()
                .ok_or_else(|| Error::usage(format!("line {}: missing operands", lineno + 1)))?
                .split(',')
                .collect();
            let parse_qubit = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| {
                    Error::usage(format!("line {}: bad qubit index `{s}`", lineno + 1))
                })
            };
            let gate = match (kind, args.as_slice()) {
                (GateKind::H, [q]) => Gate::H(parse_qubit(q)?),
                (GateKind::X, [q]) => Gate::X(parse_qubit(q)?),
                (GateKind::Y, [q]) => Gate::Y(parse_qubit(q)?),
                (GateKind::Z, [q]) => Gate::Z(parse_qubit(q)?),
                (GateKind::Rx | GateKind::Ry | GateKind::Rz, [q, angle]) => {
                    let angle: f64 = angle.parse().map_err(|_| {
                        Error::usage(format!("line {}: bad angle `{angle}`", lineno + 1))
                    })?;
                    Gate::rotation(kind, parse_qubit(q)?, angle)
                }
                (GateKind::Cnot, [c, t]) => Gate::Cnot {
                    control: parse_qubit(c)?,
                    target: parse_qubit(t)?,
                },
                (GateKind::Swap, [a, b]) => Gate::Swap(parse_qubit(a)?, parse_qubit(b)?),
                _ => {
                    return Err(Error::usage(format!(
                        "line {}: wrong operand count for {head}",
                        lineno + 1
                    )))
                }
            };
            circuit
                .as_mut()
                .expect("header parsed before gates")
                .push(gate)?;
        }
        circuit.ok_or_else(|| Error::usage("circuit text has no QUBITS header".to_string()))
    }
}

/// Generate a random circuit of exactly `gate_count` gates. Each gate draws
/// its kind uniformly (restricted to one-qubit kinds on a single-qubit
/// register), its qubits uniformly without replacement, and its angle, for
/// rotations, uniformly on [-pi, pi).
pub fn random_circuit(n_qubits: usize, gate_count: usize, rng: &mut impl Rng) -> Result<Circuit> {
    if n_qubits == 0 {
        return Err(Error::usage("random circuit needs at least one qubit".to_string()));
    }
    let mut circuit = Circuit::new(n_qubits, "U");
    for _ in 0..gate_count {
        let kind = if n_qubits == 1 {
            ONE_QUBIT_KINDS[rng.random_range(0..ONE_QUBIT_KINDS.len())]
        } else {
            ALL_KINDS[rng.random_range(0..ALL_KINDS.len())]
        };
        let q0 = rng.random_range(0..n_qubits);
        let gate = match kind {
            GateKind::H => Gate::H(q0),
            GateKind::X => Gate::X(q0),
            GateKind::Y => Gate::Y(q0),
            GateKind::Z => Gate::Z(q0),
            GateKind::Rx | GateKind::Ry | GateKind::Rz => {
                let angle = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
                Gate::rotation(kind, q0, angle)
            }
            GateKind::Cnot | GateKind::Swap => {
                // second qubit uniform over the remaining indices
                let mut q1 = rng.random_range(0..n_qubits - 1);
                if q1 >= q0 {
                    q1 += 1;
                }
                if kind == GateKind::Cnot {
                    Gate::Cnot {
                        control: q0,
                        target: q1,
                    }
                } else {
                    Gate::Swap(q0, q1)
                }
            }
        };
        circuit.push(gate)?;
    }
    Ok(circuit)
}

/// Ideal state produced by running `circuit` on |0...0⟩.
pub fn output_state(circuit: &Circuit) -> Result<StateVector> {
    StateVector::from_circuit(circuit)
}
