//! Generators for the example Hamiltonian families used throughout the
//! test and experiment suites.

use super::{HamiltonianError, HamiltonianSpec, PauliLetter, PauliTerm};
use crate::rng::SeededRng;

/// Kitaev honeycomb model on a periodic brick-wall lattice.
///
/// Each unit cell (row, col) holds two sites A and B; the three link types
/// are perfect matchings, so every qubit sits in exactly one x-, one y-
/// and one z-link:
///
/// * z-link: A(r,c) -- B(r,c)
/// * x-link: B(r,c) -- A(r, c+1)
/// * y-link: B(r,c) -- A(r+1, c+1)
///
/// (column/row arithmetic is periodic). Terms are emitted cell by cell in
/// x, y, z order, so link types interleave and the grouping stage has
/// something to do. Couplings enter as `-J`; zero couplings are omitted
/// unless `allow_zero` is set.
pub fn make_honeycomb(
    rows: u32,
    cols: u32,
    jx: f64,
    jy: f64,
    jz: f64,
    allow_zero: bool,
) -> Result<HamiltonianSpec, HamiltonianError> {
    if rows == 0 || cols == 0 {
        return Err(HamiltonianError::InvalidArgument(
            "honeycomb dimensions must be positive".into(),
        ));
    }
    let site_a = |r: u32, c: u32| 2 * (r * cols + c) + 1;
    let site_b = |r: u32, c: u32| 2 * (r * cols + c) + 2;

    let mut terms = Vec::new();
    let mut push_link = |coeff: f64, letter: PauliLetter, p: u32, q: u32| {
        if coeff != 0.0 || allow_zero {
            terms.push(PauliTerm::pair(coeff, p, letter, q, letter));
        }
    };
    for r in 0..rows {
        for c in 0..cols {
            let c_next = (c + 1) % cols;
            let r_next = (r + 1) % rows;
            push_link(-jx, PauliLetter::X, site_b(r, c), site_a(r, c_next));
            push_link(-jy, PauliLetter::Y, site_b(r, c), site_a(r_next, c_next));
            push_link(-jz, PauliLetter::Z, site_a(r, c), site_b(r, c));
        }
    }
    HamiltonianSpec::new(2 * rows * cols, Some(2), terms)
}

/// General pairing model
/// `H = 1/2 sum_p gamma_p Z_p + sum_{r=+,-} sum_{l>p} V^r_{pl} (X_p X_l + r Y_p Y_l)`.
///
/// `vplus`/`vminus` are row-major n-by-n; only entries with l > p are read.
/// The BCS special case sets `vminus` to all zeros. Zero-coefficient terms
/// are omitted unless `allow_zero` is set.
pub fn make_pairing(
    n: u32,
    gamma: &[f64],
    vplus: &[f64],
    vminus: &[f64],
    allow_zero: bool,
) -> Result<HamiltonianSpec, HamiltonianError> {
    let nu = n as usize;
    if gamma.len() != nu {
        return Err(HamiltonianError::InvalidArgument(format!(
            "gamma has {} entries, expected n={n}",
            gamma.len()
        )));
    }
    if vplus.len() != nu * nu || vminus.len() != nu * nu {
        return Err(HamiltonianError::InvalidArgument(format!(
            "V matrices must be {n}x{n} row-major"
        )));
    }

    let mut terms = Vec::new();
    for (p, &g) in gamma.iter().enumerate() {
        let coeff = 0.5 * g;
        if coeff != 0.0 || allow_zero {
            terms.push(PauliTerm::single(coeff, p as u32 + 1, PauliLetter::Z));
        }
    }
    for p in 0..nu {
        for l in (p + 1)..nu {
            for (v, sign) in [(vplus, 1.0), (vminus, -1.0)] {
                let coupling = v[p * nu + l];
                if coupling == 0.0 && !allow_zero {
                    continue;
                }
                let (qp, ql) = (p as u32 + 1, l as u32 + 1);
                terms.push(PauliTerm::pair(
                    coupling,
                    qp,
                    PauliLetter::X,
                    ql,
                    PauliLetter::X,
                ));
                terms.push(PauliTerm::pair(
                    sign * coupling,
                    qp,
                    PauliLetter::Y,
                    ql,
                    PauliLetter::Y,
                ));
            }
        }
    }
    HamiltonianSpec::new(n, Some(2), terms)
}

/// Random two-body ensemble: for every pair p < l and every letter pair
/// (v, w) in {X,Y,Z}^2 one term `a * v_p w_l` with `a ~ N(0,1)` i.i.d.
/// from the seeded generator. Exactly `9 n (n-1) / 2` terms, no one-body
/// terms.
pub fn sample_random_twobody(n: u32, seed: u64) -> Result<HamiltonianSpec, HamiltonianError> {
    if n < 2 {
        return Err(HamiltonianError::InvalidArgument(format!(
            "two-body ensemble needs n >= 2, got {n}"
        )));
    }
    let letters = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];
    let mut rng = SeededRng::new(seed);
    let mut terms = Vec::with_capacity(9 * n as usize * (n as usize - 1) / 2);
    for p in 1..=n {
        for l in (p + 1)..=n {
            for v in letters {
                for w in letters {
                    terms.push(PauliTerm::pair(rng.standard_normal(), p, v, l, w));
                }
            }
        }
    }
    HamiltonianSpec::new(n, Some(2), terms)
}
