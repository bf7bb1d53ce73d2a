//! Gate-level intermediate representation of the output circuits.
//!
//! Gates are drawn from {H, T, CNOT, RZ(theta)} with 1-based qubit
//! operands. A circuit is just an ordered gate list; list order is
//! execution order. Conventions for the dense oracle:
//!
//! * H is the standard Hadamard,
//! * T = diag(1, e^{i pi/4}),
//! * RZ(theta) = exp(-i theta Z / 2),
//! * CNOT(c, t) flips the target where the control bit is 1.
//!
//! With these, the Pauli-exponential primitive reproduces
//! `exp(-i phi h)` exactly, with no global-phase residue.

mod schedule;
mod synth;
mod text;

pub use schedule::{schedule_layers, Schedule};
pub use synth::{assemble_circuit, pcircuit, CircuitMeta, CompiledCircuit, Synth};
pub use text::{emit_layered, emit_string, parse_circuit};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CircuitError {
    #[error("qubit operand {qubit} outside [1, {n}]")]
    OperandOutOfRange { qubit: u32, n: u32 },
    #[error("CNOT control and target coincide on qubit {qubit}")]
    CnotSameQubit { qubit: u32 },
    #[error("non-finite rotation angle")]
    BadAngle,
    #[error("cannot synthesize an empty Pauli term")]
    EmptyTerm,
    #[error("sequence refers to term {term} but the Hamiltonian has {m} terms")]
    InconsistentSequence { term: usize, m: usize },
    #[error("token {index}: {message}")]
    BadToken { index: usize, message: String },
    #[error("Solovay-Kitaev decomposition failed: {0}")]
    Decomposition(#[from] crate::solovay_kitaev::SkError),
}

/// One gate. Qubit operands are 1-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H(u32),
    T(u32),
    Cnot { control: u32, target: u32 },
    Rz { qubit: u32, angle: f64 },
}

impl Gate {
    /// Operands as (first, optional second).
    pub fn operands(&self) -> (u32, Option<u32>) {
        match *self {
            Gate::H(q) | Gate::T(q) | Gate::Rz { qubit: q, .. } => (q, None),
            Gate::Cnot { control, target } => (control, Some(target)),
        }
    }

    fn validate(&self, n: u32) -> Result<(), CircuitError> {
        let check = |q: u32| {
            if q == 0 || q > n {
                Err(CircuitError::OperandOutOfRange { qubit: q, n })
            } else {
                Ok(())
            }
        };
        match *self {
            Gate::H(q) | Gate::T(q) => check(q),
            Gate::Rz { qubit, angle } => {
                check(qubit)?;
                if angle.is_finite() {
                    Ok(())
                } else {
                    Err(CircuitError::BadAngle)
                }
            }
            Gate::Cnot { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    Err(CircuitError::CnotSameQubit { qubit: control })
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// An n-qubit circuit: gates in execution order.
#[derive(Debug, Clone, PartialEq)]
pub struct GateIr {
    pub n: u32,
    pub gates: Vec<Gate>,
}

impl GateIr {
    pub fn new(n: u32, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        for gate in &gates {
            gate.validate(n)?;
        }
        Ok(Self { n, gates })
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }
}

/// Which single-qubit gate set the output draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateSet {
    /// {H, T, CNOT}: rotations are Solovay-Kitaev expanded.
    Discrete,
    /// {H, RZ(theta), CNOT} plus T.
    Continuous,
}

/// Tally of gates by kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub h: usize,
    pub t: usize,
    pub rz: usize,
    pub cnot: usize,
}

impl GateCounts {
    pub fn total(&self) -> usize {
        self.h + self.t + self.rz + self.cnot
    }
}

pub fn gate_counts(ir: &GateIr) -> GateCounts {
    let mut counts = GateCounts::default();
    for gate in &ir.gates {
        match gate {
            Gate::H(_) => counts.h += 1,
            Gate::T(_) => counts.t += 1,
            Gate::Rz { .. } => counts.rz += 1,
            Gate::Cnot { .. } => counts.cnot += 1,
        }
    }
    counts
}
