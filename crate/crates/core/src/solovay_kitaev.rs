//! Solovay-Kitaev decomposition of single-qubit rotations into {H, T}.
//!
//! The base case is an exhaustive net of all {H, T} words up to a fixed
//! length, deduplicated up to global phase. The recursion improves a
//! depth-(k-1) approximation w of a target u by expanding the residual
//! `u w^dag` as a balanced group commutator `V W V^dag W^dag` of two
//! equal-angle rotations, each of which is again approximated at depth
//! k-1. All distances are projective (global phase quotiented out), since
//! circuits are only ever compared modulo global phase.

use num_complex::Complex64;
use std::collections::HashSet;
use std::f64::consts::FRAC_1_SQRT_2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SkError {
    #[error(
        "tolerance {requested:.3e} unreachable at recursion depth {max_depth}; \
         best achieved {achieved:.3e}"
    )]
    ToleranceUnreachable {
        requested: f64,
        achieved: f64,
        max_depth: u32,
    },
}

/// Output alphabet of the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkGate {
    H,
    T,
}

/// A special-unitary 2x2 matrix `[[a, b], [-conj(b), conj(a)]]`.
#[derive(Debug, Clone, Copy)]
pub struct Su2 {
    pub a: Complex64,
    pub b: Complex64,
}

impl Su2 {
    pub const IDENTITY: Su2 = Su2 {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
    };

    /// Hadamard normalized to determinant one (-i H).
    pub fn h() -> Su2 {
        Su2 {
            a: Complex64::new(0.0, -FRAC_1_SQRT_2),
            b: Complex64::new(0.0, -FRAC_1_SQRT_2),
        }
    }

    /// T = diag(1, e^{i pi/4}) normalized to determinant one.
    pub fn t() -> Su2 {
        Su2::rz(std::f64::consts::FRAC_PI_4)
    }

    /// `RZ(theta) = exp(-i theta Z / 2)`.
    pub fn rz(theta: f64) -> Su2 {
        Su2 {
            a: Complex64::from_polar(1.0, -theta / 2.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// Normalize an arbitrary 2x2 unitary to determinant one. The sign of
    /// the square root is immaterial projectively.
    pub fn from_unitary(u: [[Complex64; 2]; 2]) -> Su2 {
        let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
        let scale = det.sqrt().conj() / det.norm().sqrt();
        Su2 {
            a: u[0][0] * scale,
            b: u[0][1] * scale,
        }
    }

    /// Rotation by `angle` about the unit axis `(x, y, z)`.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Su2 {
        let (sin, cos) = (angle / 2.0).sin_cos();
        Su2 {
            a: Complex64::new(cos, -axis[2] * sin),
            b: Complex64::new(-axis[1] * sin, -axis[0] * sin),
        }
    }

    /// Rotation angle in [0, pi] (projective representative) and its axis.
    /// The axis is arbitrary for angles near zero.
    pub fn to_axis_angle(&self) -> (f64, [f64; 3]) {
        let mut v = [-self.b.im, -self.b.re, -self.a.im];
        let s = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let mut angle = 2.0 * s.atan2(self.a.re);
        if s > 0.0 {
            for c in &mut v {
                *c /= s;
            }
        } else {
            v = [0.0, 0.0, 1.0];
        }
        if angle > std::f64::consts::PI {
            angle = 2.0 * std::f64::consts::PI - angle;
            for c in &mut v {
                *c = -*c;
            }
        }
        (angle, v)
    }

    pub fn mul(&self, rhs: &Su2) -> Su2 {
        Su2 {
            a: self.a * rhs.a - self.b * rhs.b.conj(),
            b: self.a * rhs.b + self.b * rhs.a.conj(),
        }
    }

    pub fn adjoint(&self) -> Su2 {
        Su2 {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// Projective spectral distance `min_phi || U - e^{i phi} V ||`.
    ///
    /// For determinant-one matrices the minimum is `2 sin(theta/4)` where
    /// `theta` is the rotation angle of `U^dag V` reduced to [0, pi]. The
    /// angle comes from atan2 of the rotation-vector magnitude, which
    /// stays accurate to machine epsilon near zero where an acos of the
    /// trace would lose half the digits.
    pub fn distance(&self, other: &Su2) -> f64 {
        let w = self.adjoint().mul(other);
        let sin_half = (w.a.im * w.a.im + w.b.norm_sqr()).sqrt();
        let theta = 2.0 * sin_half.atan2(w.a.re.abs());
        2.0 * (theta / 4.0).sin()
    }

    /// Deviation from exact unitarity/normalization, for diagnostics.
    pub fn unitarity_defect(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() - 1.0).abs()
    }
}

/// Exact word simplification: `HH` and `TTTTTTTT` cancel (both are global
/// phases), so pushes go through a peephole stack.
pub fn push_simplified(word: &mut Vec<SkGate>, gate: SkGate) {
    match gate {
        SkGate::H => {
            if word.last() == Some(&SkGate::H) {
                word.pop();
            } else {
                word.push(SkGate::H);
            }
        }
        SkGate::T => {
            let run = word.iter().rev().take_while(|&&g| g == SkGate::T).count();
            if run == 7 {
                word.truncate(word.len() - 7);
            } else {
                word.push(SkGate::T);
            }
        }
    }
}

fn append_simplified(word: &mut Vec<SkGate>, gates: &[SkGate]) {
    for &g in gates {
        push_simplified(word, g);
    }
}

/// Word inverse over the {H, T} alphabet: reverse order, H -> H and
/// T -> T^7 (T is an eighth root of a phase).
fn append_inverse_simplified(word: &mut Vec<SkGate>, gates: &[SkGate]) {
    for &g in gates.iter().rev() {
        match g {
            SkGate::H => push_simplified(word, SkGate::H),
            SkGate::T => {
                for _ in 0..7 {
                    push_simplified(word, SkGate::T);
                }
            }
        }
    }
}

/// Product of the word's SU(2) matrices, left factor first in time
/// (matrix product accumulates on the left).
pub fn word_matrix(word: &[SkGate]) -> Su2 {
    let h = Su2::h();
    let t = Su2::t();
    let mut acc = Su2::IDENTITY;
    for gate in word {
        let g = match gate {
            SkGate::H => &h,
            SkGate::T => &t,
        };
        acc = g.mul(&acc);
    }
    acc
}

/// Epsilon-net over SU(2): every {H, T} word up to `max_word_len`,
/// deduplicated up to global phase, shortest word kept.
pub struct BaseNet {
    entries: Vec<(Vec<SkGate>, Su2)>,
    max_word_len: usize,
}

impl BaseNet {
    pub const DEFAULT_WORD_LEN: usize = 14;

    pub fn build(max_word_len: usize) -> Self {
        let mut entries: Vec<(Vec<SkGate>, Su2)> = vec![(Vec::new(), Su2::IDENTITY)];
        let mut seen: HashSet<[i64; 4]> = HashSet::new();
        seen.insert(canonical_key(&Su2::IDENTITY));
        let mut frontier: Vec<usize> = vec![0];
        let (h, t) = (Su2::h(), Su2::t());
        for _ in 0..max_word_len {
            let mut next = Vec::new();
            for &idx in &frontier {
                let (word, matrix) = entries[idx].clone();
                for (gate, g) in [(SkGate::H, &h), (SkGate::T, &t)] {
                    let m = g.mul(&matrix);
                    if seen.insert(canonical_key(&m)) {
                        let mut w = word.clone();
                        w.push(gate);
                        entries.push((w, m));
                        next.push(entries.len() - 1);
                    }
                }
            }
            frontier = next;
        }
        BaseNet {
            entries,
            max_word_len,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    /// Closest net element to the target (linear scan).
    pub fn nearest(&self, target: &Su2) -> &(Vec<SkGate>, Su2) {
        let mut best = &self.entries[0];
        let mut best_score = -1.0;
        for entry in &self.entries {
            // distance decreases as |Re a(E^dag T)| grows.
            let overlap = entry.1.a.conj() * target.a + entry.1.b * target.b.conj();
            let score = overlap.re.abs();
            if score > best_score {
                best_score = score;
                best = entry;
            }
        }
        best
    }

    /// Empirical covering radius over `samples` pseudo-random rotations.
    pub fn measured_spacing(&self, samples: u32, seed: u64) -> f64 {
        let mut rng = crate::rng::SeededRng::new(seed);
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let target = random_su2(&mut rng);
            let (_, m) = self.nearest(&target);
            worst = worst.max(m.distance(&target));
        }
        worst
    }
}

/// Haar-ish random SU(2) from three normals (direction) and one uniform
/// angle; uniformity is unimportant, coverage is.
pub fn random_su2(rng: &mut crate::rng::SeededRng) -> Su2 {
    let v = [
        rng.standard_normal(),
        rng.standard_normal(),
        rng.standard_normal(),
    ];
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt().max(1e-12);
    let axis = [v[0] / norm, v[1] / norm, v[2] / norm];
    Su2::from_axis_angle(axis, rng.uniform_in(0.0, std::f64::consts::PI))
}

fn canonical_key(m: &Su2) -> [i64; 4] {
    // Quantize the sign-canonical (a, b) representative. The grid is far
    // below the net's element spacing and far above accumulated rounding.
    let mut c = [m.a.re, m.a.im, m.b.re, m.b.im];
    let tol = 1e-9;
    let flip = c
        .iter()
        .find(|x| x.abs() > tol)
        .map(|&x| x < 0.0)
        .unwrap_or(false);
    if flip {
        for x in &mut c {
            *x = -*x;
        }
    }
    c.map(|x| (x * 1e9).round() as i64)
}

/// Balanced group-commutator factors of a near-identity rotation: returns
/// (V, W) with `V W V^dag W^dag` projectively equal to `delta`.
fn group_commutator_factors(delta: &Su2) -> (Su2, Su2) {
    let (theta, axis) = delta.to_axis_angle();
    if theta < 1e-12 {
        return (Su2::IDENTITY, Su2::IDENTITY);
    }
    // Equal-angle rotations about x and y commutate to a rotation by
    // theta when sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2)),
    // i.e. sin^2(phi/2) = sin(theta/4).
    let phi = 2.0 * (theta / 4.0).sin().sqrt().asin();
    let v = Su2::from_axis_angle([1.0, 0.0, 0.0], phi);
    let w = Su2::from_axis_angle([0.0, 1.0, 0.0], phi);
    let commutator = v.mul(&w).mul(&v.adjoint()).mul(&w.adjoint());
    let (_, gc_axis) = commutator.to_axis_angle();
    let sim = rotation_between(gc_axis, axis);
    (
        sim.mul(&v).mul(&sim.adjoint()),
        sim.mul(&w).mul(&sim.adjoint()),
    )
}

/// SU(2) rotation taking unit vector `from` to unit vector `to`.
fn rotation_between(from: [f64; 3], to: [f64; 3]) -> Su2 {
    let cross = [
        from[1] * to[2] - from[2] * to[1],
        from[2] * to[0] - from[0] * to[2],
        from[0] * to[1] - from[1] * to[0],
    ];
    let dot = from[0] * to[0] + from[1] * to[1] + from[2] * to[2];
    let sin = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
    if sin < 1e-12 {
        if dot > 0.0 {
            return Su2::IDENTITY;
        }
        // Antiparallel: half turn about any perpendicular axis.
        let pick = if from[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let mut perp = [
            from[1] * pick[2] - from[2] * pick[1],
            from[2] * pick[0] - from[0] * pick[2],
            from[0] * pick[1] - from[1] * pick[0],
        ];
        let norm = (perp[0] * perp[0] + perp[1] * perp[1] + perp[2] * perp[2]).sqrt();
        for c in &mut perp {
            *c /= norm;
        }
        return Su2::from_axis_angle(perp, std::f64::consts::PI);
    }
    let axis = [cross[0] / sin, cross[1] / sin, cross[2] / sin];
    Su2::from_axis_angle(axis, sin.atan2(dot))
}

/// Decomposer: base net plus a recursion-depth cap.
pub struct SkDecomposer {
    net: BaseNet,
    max_depth: u32,
}

impl SkDecomposer {
    pub const DEFAULT_MAX_DEPTH: u32 = 7;

    pub fn new(net: BaseNet) -> Self {
        Self {
            net,
            max_depth: Self::DEFAULT_MAX_DEPTH,
        }
    }

    pub fn with_defaults() -> Self {
        Self::new(BaseNet::build(BaseNet::DEFAULT_WORD_LEN))
    }

    pub fn with_max_depth(mut self, max_depth: u32) -> Self {
        self.max_depth = max_depth;
        self
    }

    pub fn net(&self) -> &BaseNet {
        &self.net
    }

    /// Approximate `target` to within `delta` (projective spectral
    /// distance), using the smallest recursion depth that achieves it.
    /// Fails with the best achieved distance if the depth cap is hit.
    pub fn decompose(&self, target: &Su2, delta: f64) -> Result<Vec<SkGate>, SkError> {
        assert!(delta > 0.0, "tolerance must be positive");
        let mut best_distance = f64::INFINITY;
        for depth in 0..=self.max_depth {
            let (word, _) = self.approximate(target, depth);
            // Re-evaluate the emitted word so the accepted distance is the
            // word's own, not the recursion's bookkeeping.
            let d = word_matrix(&word).distance(target);
            if d <= delta {
                return Ok(word);
            }
            best_distance = best_distance.min(d);
        }
        Err(SkError::ToleranceUnreachable {
            requested: delta,
            achieved: best_distance,
            max_depth: self.max_depth,
        })
    }

    fn approximate(&self, target: &Su2, depth: u32) -> (Vec<SkGate>, Su2) {
        if depth == 0 {
            let (word, matrix) = self.net.nearest(target);
            return (word.clone(), *matrix);
        }
        let (prev_word, prev) = self.approximate(target, depth - 1);
        let residual = target.mul(&prev.adjoint());
        let (v, w) = group_commutator_factors(&residual);
        let (v_word, v_mat) = self.approximate(&v, depth - 1);
        let (w_word, w_mat) = self.approximate(&w, depth - 1);

        // Matrix product V W V^dag W^dag prev; execution order is the
        // reverse of the factor order, so the word starts with prev.
        let mut word = Vec::with_capacity(16 * (v_word.len() + w_word.len()) + prev_word.len());
        append_simplified(&mut word, &prev_word);
        append_inverse_simplified(&mut word, &w_word);
        append_inverse_simplified(&mut word, &v_word);
        append_simplified(&mut word, &w_word);
        append_simplified(&mut word, &v_word);
        let matrix = v_mat
            .mul(&w_mat)
            .mul(&v_mat.adjoint())
            .mul(&w_mat.adjoint())
            .mul(&prev);
        (word, matrix)
    }
}

/// Per-rotation error budget `eps / (4 m 5^{chi-1} r)`: splitting the
/// total tolerance evenly over the `2 m 5^{chi-1} r` rotations leaves
/// half of eps for the product-formula error.
pub fn sk_tolerance(epsilon: f64, m: usize, chi: u32, r: u32) -> f64 {
    assert!(
        epsilon > 0.0 && m > 0 && chi >= 1 && r >= 1,
        "sk_tolerance needs positive arguments"
    );
    epsilon / (4.0 * m as f64 * 5f64.powi(chi as i32 - 1) * r as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn to_raw(m: &Su2) -> [[Complex64; 2]; 2] {
        [[m.a, m.b], [-m.b.conj(), m.a.conj()]]
    }

    #[test]
    fn generators_are_special_unitary() {
        for m in [Su2::h(), Su2::t(), Su2::rz(0.7)] {
            assert!(m.unitarity_defect() < 1e-15);
            let raw = to_raw(&m);
            let det = raw[0][0] * raw[1][1] - raw[0][1] * raw[1][0];
            assert_relative_eq!(det.re, 1.0, max_relative = 1e-12);
            assert!(det.im.abs() < 1e-12);
        }
    }

    #[test]
    fn distance_is_projective() {
        let u = Su2::rz(0.3);
        assert!(u.distance(&u) < 1e-12);
        // -U equals U projectively.
        let minus = Su2 { a: -u.a, b: -u.b };
        assert!(u.distance(&minus) < 1e-7);
        // I vs X: eigenphase gap pi gives sqrt(2).
        let x = Su2::from_axis_angle([1.0, 0.0, 0.0], std::f64::consts::PI);
        assert_relative_eq!(Su2::IDENTITY.distance(&x), 2f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn t6_matches_rz_minus_half_pi() {
        let word = vec![SkGate::T; 6];
        let m = word_matrix(&word);
        assert!(m.distance(&Su2::rz(-std::f64::consts::FRAC_PI_2)) < 1e-12);
    }

    #[test]
    fn axis_angle_round_trip() {
        let mut rng = crate::rng::SeededRng::new(5);
        for _ in 0..200 {
            let u = random_su2(&mut rng);
            let (angle, axis) = u.to_axis_angle();
            assert!((0.0..=std::f64::consts::PI + 1e-12).contains(&angle));
            let rebuilt = Su2::from_axis_angle(axis, angle);
            assert!(u.distance(&rebuilt) < 1e-10);
        }
    }

    #[test]
    fn simplifier_cancels_hh_and_t8() {
        let mut word = Vec::new();
        append_simplified(&mut word, &[SkGate::H, SkGate::H]);
        assert!(word.is_empty());
        append_simplified(&mut word, &[SkGate::T; 8]);
        assert!(word.is_empty());
        append_simplified(&mut word, &[SkGate::T, SkGate::H, SkGate::H, SkGate::T]);
        assert_eq!(word, vec![SkGate::T, SkGate::T]);
    }

    #[test]
    fn inverse_word_inverts() {
        let word = vec![SkGate::H, SkGate::T, SkGate::T, SkGate::H, SkGate::T];
        let mut inv = Vec::new();
        append_inverse_simplified(&mut inv, &word);
        let product = word_matrix(&inv).mul(&word_matrix(&word));
        assert!(product.distance(&Su2::IDENTITY) < 1e-12);
    }

    #[test]
    fn group_commutator_reproduces_residual() {
        let mut rng = crate::rng::SeededRng::new(9);
        for _ in 0..100 {
            let v = [
                rng.standard_normal(),
                rng.standard_normal(),
                rng.standard_normal(),
            ];
            let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            let axis = [v[0] / norm, v[1] / norm, v[2] / norm];
            let delta = Su2::from_axis_angle(axis, rng.uniform_in(1e-6, 0.8));
            let (cv, cw) = group_commutator_factors(&delta);
            let rebuilt = cv.mul(&cw).mul(&cv.adjoint()).mul(&cw.adjoint());
            assert!(
                rebuilt.distance(&delta) < 1e-10,
                "distance {}",
                rebuilt.distance(&delta)
            );
        }
    }

    #[test]
    fn net_contains_t_exactly() {
        let net = BaseNet::build(6);
        let (word, m) = net.nearest(&Su2::t());
        assert_eq!(word, &vec![SkGate::T]);
        assert!(m.distance(&Su2::t()) < 1e-12);
    }

    #[test]
    fn net_grows_and_covers() {
        let small = BaseNet::build(8);
        let large = BaseNet::build(12);
        assert!(large.len() > small.len());
        assert!(large.measured_spacing(200, 3) < small.measured_spacing(200, 3) + 1e-9);
    }

    #[test]
    fn decompose_is_sound_at_loose_tolerance() {
        let decomposer = SkDecomposer::with_defaults();
        let mut rng = crate::rng::SeededRng::new(17);
        for _ in 0..5 {
            let theta = rng.uniform_in(-std::f64::consts::PI, std::f64::consts::PI);
            let target = Su2::rz(theta);
            let word = decomposer.decompose(&target, 1e-2).unwrap();
            let d = word_matrix(&word).distance(&target);
            assert!(d <= 1e-2, "theta {theta}: distance {d}");
        }
    }

    #[test]
    fn unreachable_tolerance_reports_best() {
        let decomposer = SkDecomposer::new(BaseNet::build(4)).with_max_depth(0);
        let err = decomposer
            .decompose(&Su2::rz(0.12345), 1e-9)
            .unwrap_err();
        let SkError::ToleranceUnreachable {
            requested,
            achieved,
            max_depth,
        } = err;
        assert_eq!(max_depth, 0);
        assert!(requested == 1e-9 && achieved > 1e-9);
    }

    #[test]
    fn tolerance_budget() {
        assert_relative_eq!(sk_tolerance(0.01, 3, 1, 10), 0.01 / 120.0);
        assert_relative_eq!(
            sk_tolerance(0.01, 3, 2, 10),
            0.01 / 600.0,
            max_relative = 1e-12
        );
        // budget times rotation count is eps/2.
        let (eps, m, chi, r) = (0.3, 7, 2, 5);
        let rotations = 2 * m * 5usize.pow(chi - 1) * r;
        assert_relative_eq!(
            sk_tolerance(eps, m, chi as u32, r as u32) * rotations as f64,
            eps / 2.0,
            max_relative = 1e-12
        );
    }
}
