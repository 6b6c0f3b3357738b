//! Gate set shared by the circuit representation and both simulators.
//!
//! Nine primitive gates: the discrete set {H, X, Y, Z, CNOT, SWAP} plus the
//! Pauli rotations {Rx, Ry, Rz}. Rotations may carry a `param_id` linking the
//! angle to a slot of a trainable parameter vector; all other gates are fixed.

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Discriminant for the nine supported gate kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    Rx,
    Ry,
    Rz,
    Cnot,
    Swap,
}

/// All gate kinds, in the order used by the random-circuit generator.
pub const ALL_KINDS: [GateKind; 9] = [
    GateKind::H,
    GateKind::X,
    GateKind::Y,
    GateKind::Z,
    GateKind::Rx,
    GateKind::Ry,
    GateKind::Rz,
    GateKind::Cnot,
    GateKind::Swap,
];

/// The subset of [`ALL_KINDS`] acting on a single qubit.
pub const ONE_QUBIT_KINDS: [GateKind; 7] = [
    GateKind::H,
    GateKind::X,
    GateKind::Y,
    GateKind::Z,
    GateKind::Rx,
    GateKind::Ry,
    GateKind::Rz,
];

impl GateKind {
    /// Number of qubits the gate acts on (1 or 2).
    pub fn arity(self) -> usize {
        match self {
            GateKind::Cnot | GateKind::Swap => 2,
            _ => 1,
        }
    }

    /// Whether the gate carries a rotation angle.
    pub fn is_rotation(self) -> bool {
        matches!(self, GateKind::Rx | GateKind::Ry | GateKind::Rz)
    }

    /// Canonical upper-case token used in the text serialization.
    pub fn token(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::Rx => "RX",
            GateKind::Ry => "RY",
            GateKind::Rz => "RZ",
            GateKind::Cnot => "CNOT",
            GateKind::Swap => "SWAP",
        }
    }

    pub fn from_token(s: &str) -> Option<GateKind> {
        match s {
            "H" => Some(GateKind::H),
            "X" => Some(GateKind::X),
            "Y" => Some(GateKind::Y),
            "Z" => Some(GateKind::Z),
            "RX" => Some(GateKind::Rx),
            "RY" => Some(GateKind::Ry),
            "RZ" => Some(GateKind::Rz),
            "CNOT" => Some(GateKind::Cnot),
            "SWAP" => Some(GateKind::Swap),
            _ => None,
        }
    }
}

/// Qubit support of a gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    One(usize),
    Two(usize, usize),
}

impl Support {
    pub fn contains(&self, qubit: usize) -> bool {
        match *self {
            Support::One(a) => a == qubit,
            Support::Two(a, b) => a == qubit || b == qubit,
        }
    }

    pub fn max_qubit(&self) -> usize {
        match *self {
            Support::One(a) => a,
            Support::Two(a, b) => a.max(b),
        }
    }
}

/// A single primitive gate instance.
///
/// `param_id` is set only on rotations produced by the ansatz builder; it
/// records which parameter-vector slot the angle was bound from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Rx {
        qubit: usize,
        angle: f64,
        param_id: Option<usize>,
    },
    Ry {
        qubit: usize,
        angle: f64,
        param_id: Option<usize>,
    },
    Rz {
        qubit: usize,
        angle: f64,
        param_id: Option<usize>,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    Swap(usize, usize),
}

impl Gate {
    /// Plain rotation constructor without a parameter link.
    pub fn rotation(kind: GateKind, qubit: usize, angle: f64) -> Gate {
        match kind {
            GateKind::Rx => Gate::Rx {
                qubit,
                angle,
                param_id: None,
            },
            GateKind::Ry => Gate::Ry {
                qubit,
                angle,
                param_id: None,
            },
            GateKind::Rz => Gate::Rz {
                qubit,
                angle,
                param_id: None,
            },
            _ => panic!("rotation() called with non-rotation kind {kind:?}"),
        }
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::H(_) => GateKind::H,
            Gate::X(_) => GateKind::X,
            Gate::Y(_) => GateKind::Y,
            Gate::Z(_) => GateKind::Z,
            Gate::Rx { .. } => GateKind::Rx,
            Gate::Ry { .. } => GateKind::Ry,
            Gate::Rz { .. } => GateKind::Rz,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Swap(_, _) => GateKind::Swap,
        }
    }

    pub fn support(&self) -> Support {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => Support::One(q),
            Gate::Rx { qubit, .. } | Gate::Ry { qubit, .. } | Gate::Rz { qubit, .. } => {
                Support::One(qubit)
            }
            Gate::Cnot { control, target } => Support::Two(control, target),
            Gate::Swap(a, b) => Support::Two(a, b),
        }
    }

    pub fn angle(&self) -> Option<f64> {
        match *self {
            Gate::Rx { angle, .. } | Gate::Ry { angle, .. } | Gate::Rz { angle, .. } => Some(angle),
            _ => None,
        }
    }

    pub fn param_id(&self) -> Option<usize> {
        match *self {
            Gate::Rx { param_id, .. } | Gate::Ry { param_id, .. } | Gate::Rz { param_id, .. } => {
                param_id
            }
            _ => None,
        }
    }

    /// The adjoint gate. H, X, Y, Z, CNOT and SWAP are self-adjoint; a
    /// rotation's adjoint negates its angle (the parameter link is kept).
    pub fn adjoint(&self) -> Gate {
        match *self {
            Gate::Rx {
                qubit,
                angle,
                param_id,
            } => Gate::Rx {
                qubit,
                angle: -angle,
                param_id,
            },
            Gate::Ry {
                qubit,
                angle,
                param_id,
            } => Gate::Ry {
                qubit,
                angle: -angle,
                param_id,
            },
            Gate::Rz {
                qubit,
                angle,
                param_id,
            } => Gate::Rz {
                qubit,
                angle: -angle,
                param_id,
            },
            g => g,
        }
    }

    /// 2x2 unitary of a one-qubit gate, row-major. Panics on CNOT/SWAP.
    pub fn matrix_1q(&self) -> [[Complex64; 2]; 2] {
        match *self {
            Gate::H(_) => {
                let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                [[s, s], [s, -s]]
            }
            Gate::X(_) => [[ZERO, ONE], [ONE, ZERO]],
            Gate::Y(_) => [
                [ZERO, Complex64::new(0.0, -1.0)],
                [Complex64::new(0.0, 1.0), ZERO],
            ],
            Gate::Z(_) => [[ONE, ZERO], [ZERO, -ONE]],
            Gate::Rx { angle, .. } => {
                let (c, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
                [
                    [Complex64::new(c, 0.0), Complex64::new(0.0, -s)],
                    [Complex64::new(0.0, -s), Complex64::new(c, 0.0)],
                ]
            }
            Gate::Ry { angle, .. } => {
                let (c, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
                [
                    [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
                    [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
                ]
            }
            Gate::Rz { angle, .. } => {
                let half = angle / 2.0;
                [
                    [Complex64::new(half.cos(), -half.sin()), ZERO],
                    [ZERO, Complex64::new(half.cos(), half.sin())],
                ]
            }
            _ => panic!("matrix_1q() called on a two-qubit gate"),
        }
    }
}

/// Pauli matrices used by the depolarizing channel.
pub fn pauli_x() -> [[Complex64; 2]; 2] {
    Gate::X(0).matrix_1q()
}

pub fn pauli_y() -> [[Complex64; 2]; 2] {
    Gate::Y(0).matrix_1q()
}

pub fn pauli_z() -> [[Complex64; 2]; 2] {
    Gate::Z(0).matrix_1q()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_negates_rotation_angles_only() {
        let g = Gate::Ry {
            qubit: 0,
            angle: 0.7,
            param_id: Some(3),
        };
        assert_eq!(
            g.adjoint(),
            Gate::Ry {
                qubit: 0,
                angle: -0.7,
                param_id: Some(3),
            }
        );
        let h = Gate::H(1);
        assert_eq!(h.adjoint(), h);
        let cx = Gate::Cnot {
            control: 0,
            target: 1,
        };
        assert_eq!(cx.adjoint(), cx);
    }

    #[test]
    fn kind_tokens_round_trip() {
        for kind in ALL_KINDS {
            assert_eq!(GateKind::from_token(kind.token()), Some(kind));
        }
        assert_eq!(GateKind::from_token("CX"), None);
    }

    #[test]
    fn one_qubit_matrices_are_unitary() {
        let gates = [
            Gate::H(0),
            Gate::X(0),
            Gate::Y(0),
            Gate::Z(0),
            Gate::rotation(GateKind::Rx, 0, 0.3),
            Gate::rotation(GateKind::Ry, 0, -1.2),
            Gate::rotation(GateKind::Rz, 0, 2.5),
        ];
        for g in gates {
            let m = g.matrix_1q();
            // columns orthonormal
            for a in 0..2 {
                for b in 0..2 {
                    let dot: Complex64 = (0..2).map(|k| m[k][a].conj() * m[k][b]).sum();
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - expected).norm() < 1e-12, "{g:?}");
                }
            }
        }
    }
}
