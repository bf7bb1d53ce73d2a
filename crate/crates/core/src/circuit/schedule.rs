//! As-soon-as-possible layering of a circuit.
//!
//! Gates on disjoint qubit sets can execute simultaneously; each gate goes
//! into the earliest layer after every earlier gate that shares one of its
//! qubits. Per-qubit gate order is preserved by construction, and the
//! layer count is the depth proxy for execution time.

use super::GateIr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    /// Gate indices per layer, ascending within a layer.
    pub layers: Vec<Vec<usize>>,
}

impl Schedule {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }
}

pub fn schedule_layers(ir: &GateIr) -> Schedule {
    let mut layers: Vec<Vec<usize>> = Vec::new();
    // Next free layer per qubit, 1-based qubits at index q-1.
    let mut frontier = vec![0usize; ir.n as usize];
    for (index, gate) in ir.gates.iter().enumerate() {
        let (a, b) = gate.operands();
        let mut layer = frontier[(a - 1) as usize];
        if let Some(b) = b {
            layer = layer.max(frontier[(b - 1) as usize]);
        }
        if layer == layers.len() {
            layers.push(Vec::new());
        }
        layers[layer].push(index);
        frontier[(a - 1) as usize] = layer + 1;
        if let Some(b) = b {
            frontier[(b - 1) as usize] = layer + 1;
        }
    }
    Schedule { layers }
}
