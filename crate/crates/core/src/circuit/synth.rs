//! Gate synthesis for Pauli-string exponentials.
//!
//! Each exponential `exp(-i a h t)` becomes: basis changes into the Z
//! eigenbasis (H for X qubits, T^6 H for Y qubits), a CNOT ladder folding
//! the parity of all support qubits onto the highest-indexed one, a single
//! Z rotation by `2 a t` there, then the ladder and basis changes undone
//! (H T^2 on Y qubits). A one-qubit Z term degenerates to a lone RZ.
//!
//! The worst case for a k-qubit term is 10k single-qubit gates, 2k-2
//! CNOTs and one rotation (all-Y terms).

use super::{CircuitError, Gate, GateIr, GateSet};
use crate::hamiltonian::{HamiltonianSpec, PauliTerm};
use crate::solovay_kitaev::{SkDecomposer, SkGate, Su2};
use crate::trotter::{ExponentialSeq, TsParams};

/// How rotations are realized.
pub enum Synth<'a> {
    /// Keep `RZ(theta)` gates.
    Continuous,
    /// Expand each rotation into an {H, T} word within `delta`.
    Discrete {
        delta: f64,
        decomposer: &'a SkDecomposer,
    },
}

impl Synth<'_> {
    pub fn gateset(&self) -> GateSet {
        match self {
            Synth::Continuous => GateSet::Continuous,
            Synth::Discrete { .. } => GateSet::Discrete,
        }
    }
}

/// Circuit fragment for one exponential `exp(-i a h duration)`.
pub fn pcircuit(
    term: &PauliTerm,
    duration: f64,
    synth: &Synth,
) -> Result<Vec<Gate>, CircuitError> {
    let mut gates = Vec::new();
    emit_fragment(term, duration, synth, &mut gates)?;
    Ok(gates)
}

fn emit_fragment(
    term: &PauliTerm,
    duration: f64,
    synth: &Synth,
    out: &mut Vec<Gate>,
) -> Result<(), CircuitError> {
    let parity = term.max_qubit().ok_or(CircuitError::EmptyTerm)?;
    let encoding = term.encoding();

    for &q in &encoding.s_x {
        out.push(Gate::H(q));
    }
    for &q in &encoding.s_y {
        out.extend(std::iter::repeat(Gate::T(q)).take(6));
        out.push(Gate::H(q));
    }
    for &(q, _) in term.support() {
        if q != parity {
            out.push(Gate::Cnot {
                control: q,
                target: parity,
            });
        }
    }

    let angle = 2.0 * term.coefficient() * duration;
    match synth {
        Synth::Continuous => out.push(Gate::Rz {
            qubit: parity,
            angle,
        }),
        Synth::Discrete { delta, decomposer } => {
            let word = decomposer.decompose(&Su2::rz(angle), *delta)?;
            out.extend(word.iter().map(|g| match g {
                SkGate::H => Gate::H(parity),
                SkGate::T => Gate::T(parity),
            }));
        }
    }

    for &(q, _) in term.support() {
        if q != parity {
            out.push(Gate::Cnot {
                control: q,
                target: parity,
            });
        }
    }
    for &q in &encoding.s_y {
        out.push(Gate::H(q));
        out.extend(std::iter::repeat(Gate::T(q)).take(2));
    }
    for &q in &encoding.s_x {
        out.push(Gate::H(q));
    }
    Ok(())
}

/// Compile-time metadata carried alongside the gate list.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitMeta {
    pub chi: u32,
    pub r: u32,
    pub epsilon: f64,
    pub gateset: GateSet,
    /// Originating Hamiltonian term per gate (parallel to `ir.gates`).
    pub source_terms: Vec<u32>,
}

/// A compiled circuit: the IR plus its provenance metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledCircuit {
    pub ir: GateIr,
    pub meta: CircuitMeta,
}

/// Synthesize the full simulation circuit: one fragment per sequence
/// entry, then the whole step block repeated `params.r` times.
pub fn assemble_circuit(
    spec: &HamiltonianSpec,
    seq: &ExponentialSeq,
    params: &TsParams,
    synth: &Synth,
) -> Result<CompiledCircuit, CircuitError> {
    if seq.m != spec.term_count() {
        return Err(CircuitError::InconsistentSequence {
            term: seq.m,
            m: spec.term_count(),
        });
    }
    let mut step_gates = Vec::new();
    let mut step_sources = Vec::new();
    for &(term_index, duration) in &seq.entries {
        let term = spec
            .terms()
            .get(term_index)
            .ok_or(CircuitError::InconsistentSequence {
                term: term_index,
                m: spec.term_count(),
            })?;
        let before = step_gates.len();
        emit_fragment(term, duration, synth, &mut step_gates)?;
        step_sources.extend(std::iter::repeat(term_index as u32).take(step_gates.len() - before));
    }

    let r = params.r.max(1) as usize;
    let mut gates = Vec::with_capacity(step_gates.len() * r);
    let mut source_terms = Vec::with_capacity(step_sources.len() * r);
    for _ in 0..r {
        gates.extend_from_slice(&step_gates);
        source_terms.extend_from_slice(&step_sources);
    }
    Ok(CompiledCircuit {
        ir: GateIr::new(spec.n(), gates)?,
        meta: CircuitMeta {
            chi: params.chi,
            r: params.r,
            epsilon: params.epsilon,
            gateset: synth.gateset(),
            source_terms,
        },
    })
}
