//! Dense realizations of Pauli terms, exact/approximate unitaries, and
//! spectral distances.
//!
//! Basis convention: qubit 1 is the leftmost Kronecker factor, i.e. the
//! most significant bit of the basis index. A Pauli string maps basis
//! state |b> to a phase times |b XOR flip>, where flip collects the X and
//! Y qubits; everything here exploits that sparsity instead of forming
//! Kronecker products, except where a dense matrix is the point.

use super::linalg::{self, CMatrix};
use super::{check_cap, VerifyError};
use crate::circuit::{Gate, GateIr};
use crate::hamiltonian::{HamiltonianSpec, PauliLetter, PauliTerm};
use crate::trotter::ExponentialSeq;
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

struct StringAction {
    /// Bits flipped by the string (X and Y letters).
    flip: usize,
    /// Bits contributing a (-1)^bit phase (Y and Z letters).
    phase_sel: usize,
    /// Global i^{#Y} prefactor.
    prefactor: Complex64,
}

impl StringAction {
    fn of(term: &PauliTerm, n: u32) -> Self {
        let mut flip = 0usize;
        let mut phase_sel = 0usize;
        let mut y_count = 0u32;
        for &(q, letter) in term.support() {
            let bit = 1usize << (n - q);
            match letter {
                PauliLetter::X => flip |= bit,
                PauliLetter::Y => {
                    flip |= bit;
                    phase_sel |= bit;
                    y_count += 1;
                }
                PauliLetter::Z => phase_sel |= bit,
                PauliLetter::I => {}
            }
        }
        let prefactor = match y_count % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        Self {
            flip,
            phase_sel,
            prefactor,
        }
    }

    /// Amplitude of `P |b> = amp(b) |b XOR flip>`.
    fn amp(&self, b: usize) -> Complex64 {
        if (b & self.phase_sel).count_ones() % 2 == 0 {
            self.prefactor
        } else {
            -self.prefactor
        }
    }
}

/// Dense Hermitian matrix of one weighted Pauli string.
pub fn term_matrix(term: &PauliTerm, n: u32) -> Result<CMatrix, VerifyError> {
    let dim = check_cap(n)?;
    let action = StringAction::of(term, n);
    let coeff = Complex64::new(term.coefficient(), 0.0);
    let mut m = CMatrix::zeros(dim, dim);
    for col in 0..dim {
        m[(col ^ action.flip, col)] = coeff * action.amp(col);
    }
    Ok(m)
}

/// Dense matrix of the full Hamiltonian.
pub fn hamiltonian_matrix(spec: &HamiltonianSpec) -> Result<CMatrix, VerifyError> {
    let dim = check_cap(spec.n())?;
    let mut h = CMatrix::zeros(dim, dim);
    for term in spec.terms() {
        let action = StringAction::of(term, spec.n());
        let coeff = Complex64::new(term.coefficient(), 0.0);
        for col in 0..dim {
            h[(col ^ action.flip, col)] += coeff * action.amp(col);
        }
    }
    Ok(h)
}

/// Spectral norm of the Hamiltonian (largest |eigenvalue|).
pub fn spectral_norm_hamiltonian(spec: &HamiltonianSpec) -> Result<f64, VerifyError> {
    let h = hamiltonian_matrix(spec)?;
    let values = linalg::hermitian_eigenvalues(&h);
    Ok(values
        .iter()
        .fold(0.0f64, |acc, &v| acc.max(v.abs())))
}

/// Left-multiply `u` by `exp(-i a h duration)` for one weighted term.
///
/// Pauli strings square to the identity, so the exponential is
/// `cos(theta) I - i sin(theta) P` with `theta = a * duration`; applying
/// it touches each matrix entry once.
pub fn apply_term_exponential(u: &mut CMatrix, term: &PauliTerm, n: u32, duration: f64) {
    let dim = u.nrows();
    debug_assert_eq!(dim, 1usize << n);
    let action = StringAction::of(term, n);
    let theta = term.coefficient() * duration;
    let (sin, cos) = theta.sin_cos();
    let cos = Complex64::new(cos, 0.0);
    let minus_i_sin = Complex64::new(0.0, -sin);

    if action.flip == 0 {
        // Diagonal string: rows scale by exp(-i theta (+/-1)).
        let factors = [cos + minus_i_sin, cos - minus_i_sin];
        for col in 0..dim {
            let mut column = u.column_mut(col);
            for row in 0..dim {
                let idx = ((row & action.phase_sel).count_ones() % 2) as usize;
                column[row] *= factors[idx];
            }
        }
        return;
    }

    // Precompute row pairings and the off-diagonal couplings.
    let mut pairs = Vec::with_capacity(dim / 2);
    for row in 0..dim {
        let partner = row ^ action.flip;
        if row < partner {
            // (A u)[row] += -i sin P[row, partner] u[partner];
            // P[row, partner] = amp(partner), and vice versa.
            pairs.push((
                row,
                partner,
                minus_i_sin * action.amp(partner),
                minus_i_sin * action.amp(row),
            ));
        }
    }
    for col in 0..dim {
        let mut column = u.column_mut(col);
        for &(i, j, coupling_ij, coupling_ji) in &pairs {
            let ui = column[i];
            let uj = column[j];
            column[i] = cos * ui + coupling_ij * uj;
            column[j] = cos * uj + coupling_ji * ui;
        }
    }
}

/// Unitary of a product-formula sequence: entry 0 acts first.
pub fn sequence_unitary(
    spec: &HamiltonianSpec,
    seq: &ExponentialSeq,
) -> Result<CMatrix, VerifyError> {
    let dim = check_cap(spec.n())?;
    let mut u = CMatrix::identity(dim, dim);
    for &(term_index, duration) in &seq.entries {
        apply_term_exponential(&mut u, &spec.terms()[term_index], spec.n(), duration);
    }
    Ok(u)
}

/// `exp(-i H t)` through the Hermitian eigendecomposition of H.
pub fn exact_unitary(spec: &HamiltonianSpec, t: f64) -> Result<CMatrix, VerifyError> {
    let h = hamiltonian_matrix(spec)?;
    let dim = h.nrows();
    let (values, vectors) = linalg::hermitian_eigen(&h);
    let mut scaled = vectors.clone();
    for (k, &lambda) in values.iter().enumerate() {
        let phase = Complex64::from_polar(1.0, -lambda * t);
        for row in 0..dim {
            scaled[(row, k)] *= phase;
        }
    }
    Ok(scaled * vectors.adjoint())
}

/// Left-multiply `u` by one gate's matrix.
pub fn apply_gate(u: &mut CMatrix, gate: &Gate, n: u32) {
    let dim = u.nrows();
    debug_assert_eq!(dim, 1usize << n);
    match *gate {
        Gate::H(q) => {
            let bit = 1usize << (n - q);
            let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
            for col in 0..dim {
                let mut column = u.column_mut(col);
                for row in 0..dim {
                    if row & bit == 0 {
                        let lo = column[row];
                        let hi = column[row | bit];
                        column[row] = s * (lo + hi);
                        column[row | bit] = s * (lo - hi);
                    }
                }
            }
        }
        Gate::T(q) => {
            let bit = 1usize << (n - q);
            let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
            for col in 0..dim {
                let mut column = u.column_mut(col);
                for row in 0..dim {
                    if row & bit != 0 {
                        column[row] *= phase;
                    }
                }
            }
        }
        Gate::Rz { qubit, angle } => {
            let bit = 1usize << (n - qubit);
            let factors = [
                Complex64::from_polar(1.0, -angle / 2.0),
                Complex64::from_polar(1.0, angle / 2.0),
            ];
            for col in 0..dim {
                let mut column = u.column_mut(col);
                for row in 0..dim {
                    column[row] *= factors[usize::from(row & bit != 0)];
                }
            }
        }
        Gate::Cnot { control, target } => {
            let cbit = 1usize << (n - control);
            let tbit = 1usize << (n - target);
            for col in 0..dim {
                let mut column = u.column_mut(col);
                for row in 0..dim {
                    if row & cbit != 0 && row & tbit == 0 {
                        column.swap_rows(row, row | tbit);
                    }
                }
            }
        }
    }
}

/// Unitary of a gate list (gate 0 acts first).
pub fn circuit_unitary(ir: &GateIr) -> Result<CMatrix, VerifyError> {
    let dim = check_cap(ir.n)?;
    let mut u = CMatrix::identity(dim, dim);
    for gate in &ir.gates {
        apply_gate(&mut u, gate, ir.n);
    }
    Ok(u)
}

/// `||U^dag U - I||`, for unitarity checks.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let gram = u.adjoint() * u;
    let eye = CMatrix::identity(u.nrows(), u.ncols());
    linalg::spectral_norm(&(gram - eye))
}

/// Spectral-norm distance `||A - B||`; with `phase_invariant` the norm is
/// minimized over a global phase on B (coarse scan plus local
/// refinement — the result upper-bounds the true minimum, tightly near
/// alignment).
pub fn spectral_distance(
    a: &CMatrix,
    b: &CMatrix,
    phase_invariant: bool,
) -> Result<f64, VerifyError> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return Err(VerifyError::DimensionMismatch {
            a: a.nrows(),
            b: b.nrows(),
        });
    }
    if !phase_invariant {
        return Ok(linalg::spectral_norm(&(a - b)));
    }
    let eval = |phi: f64| {
        let rotated = b * Complex64::from_polar(1.0, phi);
        linalg::spectral_norm(&(a - rotated))
    };
    // The trace phase is the natural first guess; a coarse scan protects
    // against the near-orthogonal regime where it is meaningless.
    let trace = (b.adjoint() * a).trace();
    let mut best_phi = if trace.norm() > 1e-9 { trace.arg() } else { 0.0 };
    let mut best = eval(best_phi);
    for k in 0..16 {
        let phi = 2.0 * std::f64::consts::PI * k as f64 / 16.0;
        let d = eval(phi);
        if d < best {
            best = d;
            best_phi = phi;
        }
    }
    let mut span = 2.0 * std::f64::consts::PI / 16.0;
    for _ in 0..30 {
        for phi in [best_phi - span / 2.0, best_phi + span / 2.0] {
            let d = eval(phi);
            if d < best {
                best = d;
                best_phi = phi;
            }
        }
        span *= 0.6;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::parse_hamiltonian;
    use crate::trotter::build_ts_step;
    use approx::assert_relative_eq;

    fn spec_of(text: &str) -> HamiltonianSpec {
        parse_hamiltonian(text).unwrap()
    }

    #[test]
    fn term_matrices_match_pauli_definitions() {
        // a Z1 on one qubit: diag(a, -a).
        let spec = spec_of("n=1\n2.5 Z1\n");
        let m = term_matrix(&spec.terms()[0], 1).unwrap();
        assert_eq!(m[(0, 0)], Complex64::new(2.5, 0.0));
        assert_eq!(m[(1, 1)], Complex64::new(-2.5, 0.0));
        assert_eq!(m[(0, 1)], Complex64::new(0.0, 0.0));

        // X1 X2 on two qubits: anti-diagonal ones.
        let spec = spec_of("n=2\n1 X1 X2\n");
        let m = term_matrix(&spec.terms()[0], 2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(m[(i, j)], Complex64::new(expected, 0.0), "({i},{j})");
            }
        }

        // Y1 on one qubit: the standard Y matrix.
        let spec = spec_of("n=1\n1 Y1\n");
        let m = term_matrix(&spec.terms()[0], 1).unwrap();
        assert_eq!(m[(0, 1)], Complex64::new(0.0, -1.0));
        assert_eq!(m[(1, 0)], Complex64::new(0.0, 1.0));
    }

    #[test]
    fn term_matrix_is_hermitian_with_pm_coefficient_spectrum() {
        let spec = spec_of("n=4\n-1.7 X1 Y2 Z4\n");
        let m = term_matrix(&spec.terms()[0], 4).unwrap();
        assert!(linalg::spectral_norm(&(&m - m.adjoint())) < 1e-14);
        let values = linalg::hermitian_eigenvalues(&m);
        for v in values {
            assert_relative_eq!(v.abs(), 1.7, max_relative = 1e-12);
        }
    }

    #[test]
    fn exponential_closed_form_matches_eigen_route() {
        let spec = spec_of("n=3\n0.9 X1 Y2 Z3\n");
        let t = 0.77;
        // Closed form cos(at) I - i sin(at) P.
        let mut u = CMatrix::identity(8, 8);
        apply_term_exponential(&mut u, &spec.terms()[0], 3, t);
        let exact = exact_unitary(&spec, t).unwrap();
        assert!(spectral_distance(&u, &exact, false).unwrap() < 1e-12);
        assert!(unitarity_defect(&u) < 1e-12);
    }

    #[test]
    fn diagonal_terms_take_the_diagonal_path() {
        let spec = spec_of("n=2\n1.1 Z1 Z2\n");
        let t = 0.3;
        let mut u = CMatrix::identity(4, 4);
        apply_term_exponential(&mut u, &spec.terms()[0], 2, t);
        let exact = exact_unitary(&spec, t).unwrap();
        assert!(spectral_distance(&u, &exact, false).unwrap() < 1e-13);
    }

    #[test]
    fn exact_unitary_identity_and_composition() {
        let spec = spec_of("n=2\n1 X1 X2\n2 Y1 Y2\n0.5 Z1\n");
        let u0 = exact_unitary(&spec, 0.0).unwrap();
        let eye = CMatrix::identity(4, 4);
        assert!(spectral_distance(&u0, &eye, false).unwrap() < 1e-13);

        let u1 = exact_unitary(&spec, 0.4).unwrap();
        let u2 = exact_unitary(&spec, 0.35).unwrap();
        let u12 = exact_unitary(&spec, 0.75).unwrap();
        assert!(spectral_distance(&(u1 * u2), &u12, false).unwrap() < 1e-10);
    }

    #[test]
    fn single_term_sequence_is_exact() {
        let spec = spec_of("n=2\n0.8 X1 Y2\n");
        let seq = build_ts_step(&spec, 0.6, 1);
        let u = sequence_unitary(&spec, &seq).unwrap();
        let exact = exact_unitary(&spec, 0.6).unwrap();
        assert!(spectral_distance(&u, &exact, false).unwrap() < 1e-12);
    }

    #[test]
    fn strang_step_matches_direct_product() {
        // Two-term spec: U1 = e^{-iA dt/2} e^{-iB dt/2} e^{-iB dt/2} e^{-iA dt/2}
        // with entry 0 applied first (rightmost factor).
        let spec = spec_of("n=3\n1 X1 X2\n2 Y1 Y2\n");
        let dt = 0.21;
        let seq = build_ts_step(&spec, dt, 1);
        let u = sequence_unitary(&spec, &seq).unwrap();

        let dim = 8;
        let factor = |idx: usize, d: f64| {
            let mut m = CMatrix::identity(dim, dim);
            apply_term_exponential(&mut m, &spec.terms()[idx], 3, d);
            m
        };
        let direct = factor(0, dt / 2.0)
            * factor(1, dt / 2.0)
            * factor(1, dt / 2.0)
            * factor(0, dt / 2.0);
        assert!(spectral_distance(&u, &direct, false).unwrap() < 1e-12);
    }

    #[test]
    fn gate_matrices_match_definitions() {
        use crate::circuit::parse_circuit;
        // H on one qubit.
        let h = circuit_unitary(&parse_circuit("H1").unwrap()).unwrap();
        let s = FRAC_1_SQRT_2;
        for (i, j, expected) in [(0, 0, s), (0, 1, s), (1, 0, s), (1, 1, -s)] {
            assert_relative_eq!(h[(i, j)].re, expected, max_relative = 1e-15);
            assert_eq!(h[(i, j)].im, 0.0);
        }
        // T phase.
        let t = circuit_unitary(&parse_circuit("T1").unwrap()).unwrap();
        assert_eq!(t[(0, 0)], Complex64::new(1.0, 0.0));
        assert_relative_eq!(t[(1, 1)].arg(), std::f64::consts::FRAC_PI_4);
        // CNOT truth table (qubit 1 = MSB): |10> -> |11>.
        let c = circuit_unitary(&parse_circuit("CNOT1,2").unwrap()).unwrap();
        assert_eq!(c[(3, 2)], Complex64::new(1.0, 0.0));
        assert_eq!(c[(2, 3)], Complex64::new(1.0, 0.0));
        assert_eq!(c[(0, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(c[(2, 2)], Complex64::new(0.0, 0.0));
        // RZ(theta) = exp(-i theta Z/2).
        let rz = circuit_unitary(&parse_circuit("RZ0.5,1").unwrap()).unwrap();
        assert_relative_eq!(rz[(0, 0)].arg(), -0.25, max_relative = 1e-12);
        assert_relative_eq!(rz[(1, 1)].arg(), 0.25, max_relative = 1e-12);
        // Empty circuit: identity.
        let empty = circuit_unitary(&GateIr::new(2, vec![]).unwrap()).unwrap();
        assert!(spectral_distance(&empty, &CMatrix::identity(4, 4), false).unwrap() == 0.0);
    }

    #[test]
    fn spectral_distance_examples() {
        let x = circuit_unitary(&crate::circuit::parse_circuit("H1").unwrap()).unwrap();
        assert_eq!(spectral_distance(&x, &x, false).unwrap(), 0.0);

        // ||X - I|| = 2 (singular values {0, 2}).
        let spec = spec_of("n=1\n1 X1\n");
        let xm = term_matrix(&spec.terms()[0], 1).unwrap();
        let eye = CMatrix::identity(2, 2);
        assert_relative_eq!(
            spectral_distance(&xm, &eye, false).unwrap(),
            2.0,
            max_relative = 1e-12
        );

        // ||(1 - e^{i phi}) I|| = |1 - e^{i phi}|, and the phase-invariant
        // distance of I to e^{i phi} I is zero.
        let phi = 0.8;
        let rotated = &eye * Complex64::from_polar(1.0, phi);
        assert_relative_eq!(
            spectral_distance(&eye, &rotated, false).unwrap(),
            (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, phi)).norm(),
            max_relative = 1e-12
        );
        assert!(spectral_distance(&eye, &rotated, true).unwrap() < 1e-9);

        let tall = CMatrix::zeros(2, 2);
        let wide = CMatrix::zeros(4, 4);
        assert!(matches!(
            spectral_distance(&tall, &wide, false),
            Err(VerifyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            check_cap(9),
            Err(VerifyError::CapExceeded { n: 9, cap: 8 })
        ));
        assert!(check_cap(8).is_ok());
    }
}
