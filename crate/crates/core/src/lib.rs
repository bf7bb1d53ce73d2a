//! Compiler from k-local qubit Hamiltonians to quantum gate circuits.
//!
//! The pipeline turns a weighted sum of Pauli strings into an explicit
//! sequence of {H, T, CNOT, RZ} gates approximating `exp(-iHt)` within a
//! requested spectral-norm tolerance:
//!
//! 1. [`commute::sort_hamiltonian`] groups mutually commuting terms so the
//!    resulting circuit parallelizes well,
//! 2. [`trotter::build_ts_step`] expands one symmetric product-formula step
//!    of the requested order into a sequence of term exponentials,
//! 3. [`circuit::assemble_circuit`] synthesizes each exponential into gates
//!    (with optional Solovay-Kitaev discretization of the rotations), and
//! 4. [`verify`] provides a dense-matrix oracle (n <= 8 qubits) plus the
//!    numerical experiments that measure how tight the error bounds are.

pub mod circuit;
pub mod commute;
pub mod hamiltonian;
pub mod rng;
pub mod solovay_kitaev;
pub mod trotter;
pub mod verify;

pub use circuit::{Gate, GateCounts, GateIr, GateSet, Schedule};
pub use commute::{commutes, disjoint, GroupMode, GroupPartition};
pub use hamiltonian::{HamiltonianSpec, PauliLetter, PauliTerm, TermEncoding};
pub use trotter::{ExponentialSeq, TsParams};
