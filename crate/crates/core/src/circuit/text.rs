//! Circuit text grammar.
//!
//! One whitespace-separated token per gate, in execution order:
//! `H<q>`, `T<q>`, `CNOT<c>,<t>`, `RZ<angle>,<q>`. Angles are printed as
//! shortest round-trip decimals, so emit/parse is lossless.

use super::{CircuitError, Gate, GateIr, Schedule};
use std::fmt::Write as _;

pub fn emit_string(ir: &GateIr) -> String {
    let mut out = String::new();
    for (i, gate) in ir.gates.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write_gate(&mut out, gate);
    }
    out
}

/// Layered variant: one line per schedule layer, each terminated with `;`.
pub fn emit_layered(ir: &GateIr, schedule: &Schedule) -> String {
    let mut out = String::new();
    for layer in &schedule.layers {
        let mut first = true;
        for &gate_index in layer {
            if !first {
                out.push(' ');
            }
            write_gate(&mut out, &ir.gates[gate_index]);
            first = false;
        }
        out.push_str(" ;\n");
    }
    out
}

fn write_gate(out: &mut String, gate: &Gate) {
    match *gate {
        Gate::H(q) => write!(out, "H{q}").unwrap(),
        Gate::T(q) => write!(out, "T{q}").unwrap(),
        Gate::Cnot { control, target } => write!(out, "CNOT{control},{target}").unwrap(),
        Gate::Rz { qubit, angle } => write!(out, "RZ{angle},{qubit}").unwrap(),
    }
}

/// Inverse of [`emit_string`]. The qubit count is inferred as the largest
/// operand mentioned.
pub fn parse_circuit(text: &str) -> Result<GateIr, CircuitError> {
    let mut gates = Vec::new();
    let mut n = 1u32;
    for (index, token) in text.split_whitespace().enumerate() {
        let bad = |message: &str| CircuitError::BadToken {
            index,
            message: format!("'{token}': {message}"),
        };
        let gate = if let Some(rest) = token.strip_prefix("CNOT") {
            let (c, t) = rest.split_once(',').ok_or_else(|| bad("missing comma"))?;
            Gate::Cnot {
                control: c.parse().map_err(|_| bad("bad control qubit"))?,
                target: t.parse().map_err(|_| bad("bad target qubit"))?,
            }
        } else if let Some(rest) = token.strip_prefix("RZ") {
            // The angle may itself contain signs and exponents; the qubit
            // is everything after the last comma.
            let (angle, q) = rest.rsplit_once(',').ok_or_else(|| bad("missing comma"))?;
            Gate::Rz {
                angle: angle.parse().map_err(|_| bad("bad angle"))?,
                qubit: q.parse().map_err(|_| bad("bad qubit"))?,
            }
        } else if let Some(rest) = token.strip_prefix('H') {
            Gate::H(rest.parse().map_err(|_| bad("bad qubit"))?)
        } else if let Some(rest) = token.strip_prefix('T') {
            Gate::T(rest.parse().map_err(|_| bad("bad qubit"))?)
        } else {
            return Err(bad("unknown gate"));
        };
        let (a, b) = gate.operands();
        n = n.max(a).max(b.unwrap_or(0));
        gates.push(gate);
    }
    GateIr::new(n, gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn emits_paper_style_tokens() {
        let ir = GateIr::new(
            4,
            vec![
                Gate::H(1),
                Gate::T(2),
                Gate::Cnot { control: 1, target: 4 },
                Gate::Rz { qubit: 3, angle: 0.5 },
            ],
        )
        .unwrap();
        assert_eq!(emit_string(&ir), "H1 T2 CNOT1,4 RZ0.5,3");
    }

    #[test]
    fn parses_simple_circuit() {
        let ir = parse_circuit("H1 T2").unwrap();
        assert_eq!(ir.n, 2);
        assert_eq!(ir.gates, vec![Gate::H(1), Gate::T(2)]);
    }

    #[test]
    fn negative_and_exponent_angles_round_trip() {
        let ir = GateIr::new(
            2,
            vec![
                Gate::Rz { qubit: 1, angle: -0.25 },
                Gate::Rz { qubit: 2, angle: 1.23e-7 },
            ],
        )
        .unwrap();
        let text = emit_string(&ir);
        assert_eq!(parse_circuit(&text).unwrap(), ir);
    }

    #[test]
    fn rejects_malformed_tokens() {
        assert!(matches!(
            parse_circuit("CNOT1,1"),
            Err(CircuitError::CnotSameQubit { qubit: 1 })
        ));
        assert!(parse_circuit("Q5").is_err());
        assert!(parse_circuit("H").is_err());
        assert!(parse_circuit("RZ0.5").is_err());
        assert!(parse_circuit("CNOT3").is_err());
        assert!(parse_circuit("H0").is_err());
    }

    fn arb_gate(n: u32) -> impl Strategy<Value = Gate> {
        prop_oneof![
            (1..=n).prop_map(Gate::H),
            (1..=n).prop_map(Gate::T),
            (1..=n, 1..n).prop_map(move |(c, shift)| {
                let t = (c + shift - 1) % n + 1;
                Gate::Cnot { control: c, target: t }
            }),
            (1..=n, -10.0f64..10.0).prop_map(|(q, angle)| Gate::Rz { qubit: q, angle }),
        ]
    }

    proptest! {
        #[test]
        fn emit_parse_identity(gates in proptest::collection::vec(arb_gate(5), 0..40)) {
            // Pin n by touching qubit 5 so inference matches.
            let mut gates = gates;
            gates.push(Gate::H(5));
            let ir = GateIr::new(5, gates).unwrap();
            let text = emit_string(&ir);
            prop_assert_eq!(parse_circuit(&text).unwrap(), ir);
        }
    }
}
