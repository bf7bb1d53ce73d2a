//! Pauli-term data model for k-local qubit Hamiltonians.
//!
//! A Hamiltonian is an ordered list of weighted Pauli strings
//!
//!   H = sum_j a_j * h_j,   h_j = tensor product of {I, X, Y, Z},
//!
//! stored sparsely as per-term (coefficient, support) pairs. Qubit indices
//! are 1-based throughout, matching the circuit output grammar (`H1`,
//! `CNOT1,4`, ...). Identity factors are never stored: a term's support
//! lists only the qubits it acts on non-trivially.

mod format;
mod generators;

pub use format::{parse_hamiltonian, serialize_hamiltonian};
pub use generators::{make_honeycomb, make_pairing, sample_random_twobody};

use std::ops::Range;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HamiltonianError {
    #[error("duplicate qubit index {qubit} within a term")]
    DuplicateQubit { qubit: u32 },
    #[error("qubit index {qubit} outside [1, {n}]")]
    QubitOutOfRange { qubit: u32, n: u32 },
    #[error("all-identity term is not allowed")]
    IdentityTerm,
    #[error("Hamiltonian has no terms")]
    Empty,
    #[error("term acts on {size} qubits, exceeding declared locality k={k}")]
    LocalityExceeded { size: usize, k: u32 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("group ranges do not partition the term list")]
    BadGroupBoundaries,
    #[error("{0}")]
    InvalidArgument(String),
}

/// Single-qubit Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn symbol(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

/// One weighted Pauli string `a * h`.
///
/// The support is sorted by qubit index and contains no identity entries.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTerm {
    coefficient: f64,
    support: Vec<(u32, PauliLetter)>,
}

impl PauliTerm {
    /// Build a term from (qubit, letter) pairs.
    ///
    /// Identity letters are dropped, the rest is sorted by qubit index.
    /// A qubit listed twice is an error even if the letters agree.
    pub fn new(
        coefficient: f64,
        ops: impl IntoIterator<Item = (u32, PauliLetter)>,
    ) -> Result<Self, HamiltonianError> {
        let mut support: Vec<(u32, PauliLetter)> = ops
            .into_iter()
            .filter(|&(_, letter)| letter != PauliLetter::I)
            .collect();
        support.sort_by_key(|&(q, _)| q);
        for pair in support.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(HamiltonianError::DuplicateQubit { qubit: pair[0].0 });
            }
        }
        Ok(Self {
            coefficient,
            support,
        })
    }

    /// Single-letter term, e.g. `a * Z_q`.
    pub fn single(coefficient: f64, qubit: u32, letter: PauliLetter) -> Self {
        Self::new(coefficient, [(qubit, letter)]).expect("single letter cannot collide")
    }

    /// Two-qubit term `a * v_p w_l`; panics if `p == l`.
    pub fn pair(coefficient: f64, p: u32, v: PauliLetter, l: u32, w: PauliLetter) -> Self {
        Self::new(coefficient, [(p, v), (l, w)]).expect("distinct qubits required")
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    /// Non-identity (qubit, letter) pairs, sorted by qubit.
    pub fn support(&self) -> &[(u32, PauliLetter)] {
        &self.support
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty()
    }

    /// Letter acting on `qubit` (identity when unlisted).
    pub fn letter_at(&self, qubit: u32) -> PauliLetter {
        self.support
            .binary_search_by_key(&qubit, |&(q, _)| q)
            .map(|i| self.support[i].1)
            .unwrap_or(PauliLetter::I)
    }

    /// Largest qubit index in the support, if any.
    pub fn max_qubit(&self) -> Option<u32> {
        self.support.last().map(|&(q, _)| q)
    }

    /// Position-list encoding of this term.
    pub fn encoding(&self) -> TermEncoding {
        let mut enc = TermEncoding::default();
        for &(q, letter) in &self.support {
            match letter {
                PauliLetter::X => enc.s_x.push(q),
                PauliLetter::Y => enc.s_y.push(q),
                PauliLetter::Z => enc.s_z.push(q),
                PauliLetter::I => unreachable!("support never stores identity"),
            }
        }
        enc
    }
}

/// Per-letter position lists `(S_X, S_Y, S_Z)`, each sorted ascending.
///
/// The letter counts `(l_X, l_Y, l_Z)` are the list lengths, so they can
/// never disagree with the positions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermEncoding {
    pub s_x: Vec<u32>,
    pub s_y: Vec<u32>,
    pub s_z: Vec<u32>,
}

impl TermEncoding {
    /// `(l_X, l_Y, l_Z)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.s_x.len(), self.s_y.len(), self.s_z.len())
    }

    /// Reassemble the support; inverse of [`PauliTerm::encoding`].
    pub fn to_term(&self, coefficient: f64) -> Result<PauliTerm, HamiltonianError> {
        let ops = self
            .s_x
            .iter()
            .map(|&q| (q, PauliLetter::X))
            .chain(self.s_y.iter().map(|&q| (q, PauliLetter::Y)))
            .chain(self.s_z.iter().map(|&q| (q, PauliLetter::Z)));
        PauliTerm::new(coefficient, ops)
    }
}

/// An n-qubit Hamiltonian: ordered terms plus optional group boundaries
/// produced by the sorting stage.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    n: u32,
    k: Option<u32>,
    terms: Vec<PauliTerm>,
    groups: Option<Vec<Range<usize>>>,
}

impl HamiltonianSpec {
    pub fn new(
        n: u32,
        k: Option<u32>,
        terms: Vec<PauliTerm>,
    ) -> Result<Self, HamiltonianError> {
        if terms.is_empty() {
            return Err(HamiltonianError::Empty);
        }
        for term in &terms {
            if term.is_identity() {
                return Err(HamiltonianError::IdentityTerm);
            }
            if let Some(&(q, _)) = term.support().last() {
                if q > n || q == 0 {
                    return Err(HamiltonianError::QubitOutOfRange { qubit: q, n });
                }
            }
            if let Some(k) = k {
                if term.weight() > k as usize {
                    return Err(HamiltonianError::LocalityExceeded {
                        size: term.weight(),
                        k,
                    });
                }
            }
        }
        Ok(Self {
            n,
            k,
            terms,
            groups: None,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// max_j |a_j|.
    pub fn max_abs_coefficient(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coefficient().abs())
            .fold(0.0, f64::max)
    }

    /// Contiguous group ranges over term indices, if the spec was sorted.
    pub fn groups(&self) -> Option<&[Range<usize>]> {
        self.groups.as_deref()
    }

    /// Attach group boundaries; ranges must tile `0..term_count()` in order.
    pub fn set_groups(&mut self, groups: Vec<Range<usize>>) -> Result<(), HamiltonianError> {
        let mut expected_start = 0;
        for range in &groups {
            if range.start != expected_start || range.end <= range.start {
                return Err(HamiltonianError::BadGroupBoundaries);
            }
            expected_start = range.end;
        }
        if expected_start != self.terms.len() {
            return Err(HamiltonianError::BadGroupBoundaries);
        }
        self.groups = Some(groups);
        Ok(())
    }

    /// Same terms in a new order; group boundaries are dropped.
    pub fn with_terms_reordered(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.terms.len());
        Self {
            n: self.n,
            k: self.k,
            terms: order.iter().map(|&i| self.terms[i].clone()).collect(),
            groups: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_sorts_and_drops_identity() {
        let t = PauliTerm::new(
            2.0,
            [(3, PauliLetter::Z), (1, PauliLetter::X), (2, PauliLetter::I)],
        )
        .unwrap();
        assert_eq!(t.support(), &[(1, PauliLetter::X), (3, PauliLetter::Z)]);
        assert_eq!(t.letter_at(2), PauliLetter::I);
        assert_eq!(t.max_qubit(), Some(3));
    }

    #[test]
    fn duplicate_qubit_rejected() {
        let err = PauliTerm::new(1.0, [(1, PauliLetter::X), (1, PauliLetter::X)]).unwrap_err();
        assert!(matches!(err, HamiltonianError::DuplicateQubit { qubit: 1 }));
    }

    #[test]
    fn encoding_round_trips() {
        let t = PauliTerm::new(
            4.0,
            [(1, PauliLetter::Y), (3, PauliLetter::Z), (2, PauliLetter::Y)],
        )
        .unwrap();
        let enc = t.encoding();
        assert_eq!(enc.counts(), (0, 2, 1));
        assert_eq!(enc.s_y, vec![1, 2]);
        assert_eq!(enc.s_z, vec![3]);
        assert_eq!(enc.to_term(4.0).unwrap(), t);
    }

    #[test]
    fn spec_validates_indices_and_locality() {
        let t = PauliTerm::single(1.0, 5, PauliLetter::Z);
        assert!(matches!(
            HamiltonianSpec::new(3, None, vec![t.clone()]),
            Err(HamiltonianError::QubitOutOfRange { qubit: 5, n: 3 })
        ));
        let tt = PauliTerm::pair(1.0, 1, PauliLetter::X, 2, PauliLetter::X);
        assert!(matches!(
            HamiltonianSpec::new(2, Some(1), vec![tt]),
            Err(HamiltonianError::LocalityExceeded { size: 2, k: 1 })
        ));
        assert!(matches!(
            HamiltonianSpec::new(2, None, vec![]),
            Err(HamiltonianError::Empty)
        ));
    }

    #[test]
    fn group_boundaries_must_tile() {
        let terms = vec![
            PauliTerm::single(1.0, 1, PauliLetter::Z),
            PauliTerm::single(1.0, 2, PauliLetter::Z),
        ];
        let mut spec = HamiltonianSpec::new(2, None, terms).unwrap();
        assert!(spec.set_groups(vec![0..1]).is_err());
        assert!(spec.set_groups(vec![0..1, 0..2]).is_err());
        spec.set_groups(vec![0..1, 1..2]).unwrap();
        assert_eq!(spec.groups().unwrap().len(), 2);
    }
}
