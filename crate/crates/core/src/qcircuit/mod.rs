//! {H, T, CNOT} circuits: bit-exact encoding, exact state-vector simulation
//! over Q(1/√2, i), and total deciders for the BQP / QCMA / QMA extremal
//! problems.
//!
//! Qubit 1 is the most significant bit of an amplitude index and is the
//! output qubit. A witness register of `m` qubits occupies the highest
//! indexed qubits; all other qubits start in `|0⟩`.

mod decide;
mod encoding;
mod sim;

use std::fmt;

pub use decide::{
    circuit_bqp, circuit_qcma, circuit_qma, classify_bqp, classify_qcma, classify_qma, operator_verdict,
    run_generator,
};
pub use encoding::{encode_circuit, encode_with_header, parse_circuit};
pub use sim::{acceptance_operator, basis_input, p_acc, simulate, StateVector};

/// Largest simulated register.
pub const QUBIT_CAP: usize = 20;
/// Largest witness register.
pub const WITNESS_CAP: usize = 4;

/// A gate with 1-based qubit operands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    T(usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    fn max_qubit(&self) -> usize {
        match *self {
            Gate::H(q) | Gate::T(q) => q,
            Gate::Cnot { control, target } => control.max(target),
        }
    }

    fn is_valid(&self) -> bool {
        match *self {
            Gate::H(q) | Gate::T(q) => q >= 1,
            Gate::Cnot { control, target } => control >= 1 && target >= 1 && control != target,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H q{q}"),
            Gate::T(q) => write!(f, "T q{q}"),
            Gate::Cnot { control, target } => write!(f, "CNOT {control}→{target}"),
        }
    }
}

/// A gate list with its register sizes.
///
/// The trivial circuit stands for every malformed encoding; it never
/// accepts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    gates: Vec<Gate>,
    witness_qubits: usize,
    total_qubits: usize,
    trivial: bool,
}

impl Circuit {
    /// Returns `None` if a gate has a zero operand or a CNOT acts on a
    /// single qubit.
    pub fn new(gates: Vec<Gate>, witness_qubits: usize) -> Option<Self> {
        if !gates.iter().all(Gate::is_valid) {
            return None;
        }
        let total = gates.iter().map(Gate::max_qubit).max().unwrap_or(0).max(witness_qubits).max(1);
        Some(Circuit {
            gates,
            witness_qubits,
            total_qubits: total,
            trivial: false,
        })
    }

    pub fn trivial(witness_qubits: usize) -> Self {
        Circuit {
            gates: Vec::new(),
            witness_qubits,
            total_qubits: witness_qubits.max(1),
            trivial: true,
        }
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn witness_qubits(&self) -> usize {
        self.witness_qubits
    }

    pub fn total_qubits(&self) -> usize {
        self.total_qubits
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trivial {
            return f.write_str("trivial circuit (never accepts)");
        }
        let gates: Vec<String> = self.gates.iter().map(Gate::to_string).collect();
        f.write_str(&gates.join("; "))
    }
}
