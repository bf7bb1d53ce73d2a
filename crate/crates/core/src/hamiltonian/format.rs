//! Line-based text format for Hamiltonians.
//!
//! ```text
//! n=3
//! # optional comment
//! 1 X1 X2
//! 2 Y1 Y2
//! 4 Y1 Z3
//! ```
//!
//! Line 1 is `n=<int>`, optionally followed by `k=<int>`. Every other
//! non-blank, non-comment line is one term: a decimal coefficient followed
//! by `<letter><qubit>` factors. `#` starts a comment. A `# group` comment
//! marks the start of a group in a sorted Hamiltonian; the serializer emits
//! them and the parser reconstructs the boundaries, so sorted specs
//! round-trip exactly.

use super::{HamiltonianError, HamiltonianSpec, PauliLetter, PauliTerm};
use std::fmt::Write as _;

const GROUP_MARKER: &str = "# group";

fn parse_err(line: usize, message: impl Into<String>) -> HamiltonianError {
    HamiltonianError::Parse {
        line,
        message: message.into(),
    }
}

/// Parse the text format into a validated spec.
pub fn parse_hamiltonian(text: &str) -> Result<HamiltonianSpec, HamiltonianError> {
    let mut n: Option<u32> = None;
    let mut k: Option<u32> = None;
    let mut terms: Vec<PauliTerm> = Vec::new();
    // Term indices where `# group` markers opened a new group.
    let mut group_starts: Vec<usize> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if comment.trim() == "group" {
                group_starts.push(terms.len());
            }
            continue;
        }
        if let Some(value) = line.strip_prefix("n=") {
            if n.is_some() {
                return Err(parse_err(line_no, "repeated n= header"));
            }
            n = Some(
                value
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad qubit count '{value}'")))?,
            );
            continue;
        }
        if let Some(value) = line.strip_prefix("k=") {
            k = Some(
                value
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad locality bound '{value}'")))?,
            );
            continue;
        }
        let n = n.ok_or_else(|| parse_err(line_no, "term before n= header"))?;
        terms.push(parse_term_line(line, line_no, n)?);
    }

    let n = n.ok_or_else(|| parse_err(0, "missing n= header"))?;
    let mut spec = HamiltonianSpec::new(n, k, terms)?;
    if !group_starts.is_empty() {
        let m = spec.term_count();
        let mut ranges = Vec::with_capacity(group_starts.len());
        for (i, &start) in group_starts.iter().enumerate() {
            let end = group_starts.get(i + 1).copied().unwrap_or(m);
            ranges.push(start..end);
        }
        spec.set_groups(ranges)?;
    }
    Ok(spec)
}

fn parse_term_line(line: &str, line_no: usize, n: u32) -> Result<PauliTerm, HamiltonianError> {
    let mut tokens = line.split_whitespace();
    let coeff_token = tokens.next().expect("line is non-empty");
    let coefficient: f64 = coeff_token
        .parse()
        .map_err(|_| parse_err(line_no, format!("unparsable coefficient '{coeff_token}'")))?;

    let mut ops = Vec::new();
    for token in tokens {
        let mut chars = token.chars();
        let letter = match chars.next() {
            Some('X') => PauliLetter::X,
            Some('Y') => PauliLetter::Y,
            Some('Z') => PauliLetter::Z,
            other => {
                return Err(parse_err(
                    line_no,
                    format!("expected X/Y/Z factor, got '{token}' ({other:?})"),
                ))
            }
        };
        let qubit: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| parse_err(line_no, format!("bad qubit index in '{token}'")))?;
        if qubit == 0 || qubit > n {
            return Err(HamiltonianError::QubitOutOfRange { qubit, n });
        }
        ops.push((qubit, letter));
    }
    if ops.is_empty() {
        return Err(parse_err(line_no, "term has no Pauli factors"));
    }
    PauliTerm::new(coefficient, ops)
}

/// Serialize a spec; `parse_hamiltonian(serialize_hamiltonian(s))` equals
/// `s` term-for-term, including order and group boundaries.
pub fn serialize_hamiltonian(spec: &HamiltonianSpec) -> String {
    let mut out = String::new();
    writeln!(out, "n={}", spec.n()).unwrap();
    if let Some(k) = spec.k() {
        writeln!(out, "k={k}").unwrap();
    }
    let group_starts: Vec<usize> = spec
        .groups()
        .map(|ranges| ranges.iter().map(|r| r.start).collect())
        .unwrap_or_default();
    for (i, term) in spec.terms().iter().enumerate() {
        if group_starts.contains(&i) {
            writeln!(out, "{GROUP_MARKER}").unwrap();
        }
        write!(out, "{}", term.coefficient()).unwrap();
        for &(q, letter) in term.support() {
            write!(out, " {}{q}", letter.symbol()).unwrap();
        }
        out.push('\n');
    }
    out
}
