//! Symmetric Trotter product formulas and the default step parameters.
//!
//! One order-chi step over duration dt expands recursively:
//!
//! * chi = 1 (Strang splitting): every term forward at dt/2, then the same
//!   terms reversed at dt/2.
//! * chi = p: `[U_{p-1}(s_p dt)]^2 U_{p-1}((1-4 s_p) dt) [U_{p-1}(s_p dt)]^2`
//!   with `s_p = 1 / (4 - 4^{1/(2p-1)})`.
//!
//! The middle block's duration `(1 - 4 s_p) dt` is negative; that is part
//! of the construction, not an error. Adjacent equal-term exponentials are
//! deliberately not merged, so the entry count is exactly `2 m 5^{chi-1}`
//! and gate counts stay predictable.

use crate::hamiltonian::HamiltonianSpec;

/// One expanded product-formula step: `(term index, duration)` pairs in
/// execution order (entry 0 is applied first).
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialSeq {
    pub entries: Vec<(usize, f64)>,
    /// Step duration dt = t / r.
    pub dt: f64,
    pub chi: u32,
    /// Number of repetitions of this step in the full evolution. Set to 1
    /// by [`build_ts_step`]; the compile pipeline overwrites it.
    pub r: u32,
    /// Term count of the source Hamiltonian.
    pub m: usize,
}

impl ExponentialSeq {
    /// Debug/inspection dump: header plus one `<term> <duration>` line per
    /// entry, term indices 1-based.
    pub fn serialize(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        writeln!(out, "chi={} r={} dt={}", self.chi, self.r, self.dt).unwrap();
        for &(term, duration) in &self.entries {
            writeln!(out, "{} {}", term + 1, duration).unwrap();
        }
        out
    }
}

/// Splitting coefficient `s_p = 1 / (4 - 4^{1/(2p-1)})` for p >= 2.
pub fn s_coefficient(p: u32) -> f64 {
    assert!(p >= 2, "s_p is defined for p >= 2, got {p}");
    1.0 / (4.0 - 4f64.powf(1.0 / (2.0 * p as f64 - 1.0)))
}

/// Expand one order-chi step of duration `dt` over the spec's term order.
pub fn build_ts_step(spec: &HamiltonianSpec, dt: f64, chi: u32) -> ExponentialSeq {
    assert!(chi >= 1, "formula order must be >= 1");
    let m = spec.term_count();
    let mut entries = Vec::with_capacity(2 * m * 5usize.pow(chi - 1));
    push_step(&mut entries, m, dt, chi);
    ExponentialSeq {
        entries,
        dt,
        chi,
        r: 1,
        m,
    }
}

fn push_step(entries: &mut Vec<(usize, f64)>, m: usize, dt: f64, order: u32) {
    if order == 1 {
        let half = dt / 2.0;
        entries.extend((0..m).map(|j| (j, half)));
        entries.extend((0..m).rev().map(|j| (j, half)));
        return;
    }
    let s = s_coefficient(order);
    for _ in 0..2 {
        push_step(entries, m, s * dt, order - 1);
    }
    push_step(entries, m, (1.0 - 4.0 * s) * dt, order - 1);
    for _ in 0..2 {
        push_step(entries, m, s * dt, order - 1);
    }
}

/// Suggested formula order
/// `chi = ceil( sqrt( log_{25/3}(m a_max t / eps) / 2 ) )`, clamped to at
/// least 1 (the raw formula reaches 0 for loose tolerances).
pub fn default_chi(m: usize, a_max: f64, t: f64, epsilon: f64) -> u32 {
    assert!(
        m > 0 && a_max > 0.0 && t > 0.0 && epsilon > 0.0,
        "default_chi needs positive arguments"
    );
    let x = m as f64 * a_max * t / epsilon;
    if x <= 1.0 {
        return 1;
    }
    let log_base = x.ln() / (25f64 / 3.0).ln();
    ((log_base / 2.0).sqrt().ceil() as u32).max(1)
}

/// Step count guaranteeing total formula error at most eps/2:
/// `r = ceil( (2 m (5/3)^{chi-1} chi a_max t)^{1 + 1/(2 chi)}
///            / (eps/2)^{1/(2 chi)} )`.
///
/// `doubled` reproduces the variant with an extra leading factor 2 used by
/// some drivers; the plain value is the guarantee-optimal default.
pub fn default_r(m: usize, a_max: f64, t: f64, epsilon: f64, chi: u32, doubled: bool) -> u32 {
    assert!(
        m > 0 && a_max > 0.0 && t > 0.0 && epsilon > 0.0 && chi >= 1,
        "default_r needs positive arguments"
    );
    let chi_f = chi as f64;
    let base = 2.0 * m as f64 * (5f64 / 3.0).powi(chi as i32 - 1) * chi_f * a_max * t;
    let exponent = 1.0 + 1.0 / (2.0 * chi_f);
    let mut r = base.powf(exponent) / (epsilon / 2.0).powf(1.0 / (2.0 * chi_f));
    if doubled {
        r *= 2.0;
    }
    (r.ceil() as u32).max(1)
}

/// The error guarantee only holds for
/// `eps <= 2 m chi (5/3)^{chi-1} a_max t`; larger requests clamp down to
/// that bound.
pub fn clamp_epsilon(m: usize, a_max: f64, t: f64, epsilon: f64, chi: u32) -> f64 {
    assert!(
        m > 0 && a_max > 0.0 && t > 0.0 && epsilon > 0.0 && chi >= 1,
        "clamp_epsilon needs positive arguments"
    );
    let bound = 2.0 * m as f64 * chi as f64 * (5f64 / 3.0).powi(chi as i32 - 1) * a_max * t;
    epsilon.min(bound)
}

/// Empirical step-count estimate from the measured error models for the
/// random two-body ensemble. Unlike [`default_r`] this carries no
/// rigorous guarantee.
///
/// * order 1: `r >= sqrt(2 / (3 n^2 eps)) (|H| t)^{3/2}`
/// * order 2: `r >= (1/30) (540 / (n^{5/2} eps))^{1/4} (|H| t)^{5/4}`
pub fn heuristic_r(norm_h: f64, t: f64, epsilon: f64, n: u32, order: u32) -> u32 {
    assert!(
        norm_h > 0.0 && t > 0.0 && epsilon > 0.0 && n > 0,
        "heuristic_r needs positive arguments"
    );
    let ht = norm_h * t;
    let nf = n as f64;
    let estimate = match order {
        1 => (2.0 / (3.0 * nf * nf * epsilon)).sqrt() * ht.powf(1.5),
        2 => (540.0 / (nf.powf(2.5) * epsilon)).powf(0.25) / 30.0 * ht.powf(1.25),
        other => panic!("heuristic_r supports orders 1 and 2, got {other}"),
    };
    (estimate.ceil() as u32).max(1)
}

/// Tolerance threshold `16 |H| t / (15 n^{3/2})` above which the order-1
/// formula needs fewer exponentials than order 2. At the threshold
/// itself, order 2 is preferred.
pub fn order_crossover_epsilon(norm_h: f64, t: f64, n: u32) -> f64 {
    assert!(
        norm_h > 0.0 && t > 0.0 && n > 0,
        "order_crossover_epsilon needs positive arguments"
    );
    16.0 * norm_h * t / (15.0 * (n as f64).powf(1.5))
}

/// Runtime configuration of the product-formula stage.
#[derive(Debug, Clone, PartialEq)]
pub struct TsParams {
    pub chi: u32,
    pub r: u32,
    /// Tolerance after clamping.
    pub epsilon: f64,
    pub a_max: f64,
    /// Whether chi/r were chosen automatically (false = user override).
    pub auto_chi: bool,
    pub auto_r: bool,
}

impl TsParams {
    /// Resolve chi, the epsilon clamp and r in that order: chi comes from
    /// the raw tolerance, the clamp depends on chi, and the guarantee for
    /// r is stated for the clamped tolerance.
    pub fn resolve(
        spec: &HamiltonianSpec,
        t: f64,
        epsilon: f64,
        chi_override: u32,
        r_override: u32,
        doubled_r: bool,
    ) -> Self {
        let m = spec.term_count();
        let a_max = spec.max_abs_coefficient();
        let auto_chi = chi_override == 0;
        let chi = if auto_chi {
            default_chi(m, a_max, t, epsilon)
        } else {
            chi_override
        };
        let epsilon = clamp_epsilon(m, a_max, t, epsilon, chi);
        let auto_r = r_override == 0;
        let r = if auto_r {
            default_r(m, a_max, t, epsilon, chi, doubled_r)
        } else {
            r_override
        };
        Self {
            chi,
            r,
            epsilon,
            a_max,
            auto_chi,
            auto_r,
        }
    }
}
