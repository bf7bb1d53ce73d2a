//! Dense-matrix oracle and numerical experiments.
//!
//! Everything here works on explicit 2^n x 2^n complex matrices, so it is
//! capped at [`QUBIT_CAP`] qubits. The oracle path (exact exponentials,
//! unitaries of gate lists, spectral distances) is deliberately
//! independent of the synthesis code it checks: gates are applied from
//! their matrix definitions, term exponentials use the closed form for
//! involutory Pauli strings, and `exp(-iHt)` goes through a Hermitian
//! eigendecomposition.

pub mod linalg;

mod dense;
mod experiments;

pub use dense::{
    apply_gate, apply_term_exponential, circuit_unitary, exact_unitary, hamiltonian_matrix,
    sequence_unitary, spectral_distance, spectral_norm_hamiltonian, term_matrix,
    unitarity_defect,
};
pub use experiments::{
    extrapolate_exp_counts, norm_scaling_fit, ts_error_experiment, CellStats, ErrorReport,
    ExtrapolationRow, NormFit, SampleRecord,
};

use thiserror::Error;

/// Largest qubit count the dense engine accepts (256 x 256 matrices).
pub const QUBIT_CAP: u32 = 8;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{n} qubits exceeds the dense-verification cap of {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("dimension mismatch: {a}x{a} vs {b}x{b}")]
    DimensionMismatch { a: usize, b: usize },
    #[error("need at least {needed} distinct sizes, got {got}")]
    NotEnoughPoints { needed: usize, got: usize },
    #[error(transparent)]
    Hamiltonian(#[from] crate::hamiltonian::HamiltonianError),
}

pub(crate) fn check_cap(n: u32) -> Result<usize, VerifyError> {
    if n == 0 || n > QUBIT_CAP {
        Err(VerifyError::CapExceeded { n, cap: QUBIT_CAP })
    } else {
        Ok(1usize << n)
    }
}
