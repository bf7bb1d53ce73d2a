//! Numerical experiments over the random two-body ensemble: measured
//! product-formula error vs the rigorous bound and the fitted error
//! models, the norm-scaling fit, and the exponential-count extrapolation
//! tables.

use super::dense::sequence_unitary;
use super::linalg::{self, CMatrix};
use super::{check_cap, VerifyError};
use crate::hamiltonian::sample_random_twobody;
use crate::trotter::{build_ts_step, heuristic_r};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// One measurement: a random Hamiltonian, one formula step of duration t.
#[derive(Debug, Clone)]
pub struct SampleRecord {
    pub n: u32,
    pub t: f64,
    pub sample: u32,
    /// Seed that regenerates this sample's Hamiltonian.
    pub seed: u64,
    /// Measured `||U(t) - U_chi(t)||` for a single step.
    pub measured: f64,
    /// Rigorous order-1 bound `2 (3 m a_max t / 2)^3`; absent for order 2.
    pub bound: Option<f64>,
    /// Fitted error model value for this (n, t, H).
    pub fit: f64,
    /// Spectral norm of the sampled Hamiltonian.
    pub norm_h: f64,
}

/// Aggregate statistics for one (n, t) grid cell.
#[derive(Debug, Clone)]
pub struct CellStats {
    pub n: u32,
    pub t: f64,
    pub samples: usize,
    pub mean_measured: f64,
    pub std_measured: f64,
    pub mean_bound: Option<f64>,
    pub mean_fit: f64,
    /// Mean of per-sample bound/measured ratios (order 1 only).
    pub mean_bound_over_measured: Option<f64>,
}

/// Full result of a [`ts_error_experiment`] run.
#[derive(Debug, Clone)]
pub struct ErrorReport {
    pub order: u32,
    pub base_seed: u64,
    pub records: Vec<SampleRecord>,
}

impl ErrorReport {
    /// Aggregates, recomputed from the records, sorted by (n, t).
    pub fn cells(&self) -> Vec<CellStats> {
        let mut grouped: BTreeMap<(u32, u64), Vec<&SampleRecord>> = BTreeMap::new();
        for record in &self.records {
            grouped
                .entry((record.n, record.t.to_bits()))
                .or_default()
                .push(record);
        }
        grouped
            .into_values()
            .map(|records| {
                let count = records.len();
                let mean = |f: fn(&SampleRecord) -> f64| {
                    records.iter().map(|r| f(r)).sum::<f64>() / count as f64
                };
                let mean_measured = mean(|r| r.measured);
                let variance = records
                    .iter()
                    .map(|r| (r.measured - mean_measured).powi(2))
                    .sum::<f64>()
                    / count as f64;
                let has_bound = records.iter().all(|r| r.bound.is_some());
                let mean_bound = has_bound.then(|| {
                    records.iter().map(|r| r.bound.unwrap()).sum::<f64>() / count as f64
                });
                let mean_ratio = has_bound.then(|| {
                    records
                        .iter()
                        .map(|r| r.bound.unwrap() / r.measured.max(f64::MIN_POSITIVE))
                        .sum::<f64>()
                        / count as f64
                });
                CellStats {
                    n: records[0].n,
                    t: records[0].t,
                    samples: count,
                    mean_measured,
                    std_measured: variance.sqrt(),
                    mean_bound,
                    mean_fit: mean(|r| r.fit),
                    mean_bound_over_measured: mean_ratio,
                }
            })
            .collect()
    }

    /// Per-sample rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,t,sample,seed,measured,bound,fit,norm_h\n");
        for r in &self.records {
            let bound = r.bound.map(|b| b.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.n, r.t, r.sample, r.seed, r.measured, bound, r.fit, r.norm_h
            )
            .unwrap();
        }
        out
    }

    /// Plot-ready per-cell rows: t, mean error, bound, fit.
    pub fn cells_csv(&self) -> String {
        let mut out =
            String::from("n,t,samples,mean_measured,std_measured,mean_bound,mean_fit,mean_bound_over_measured\n");
        for c in self.cells() {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                c.n,
                c.t,
                c.samples,
                c.mean_measured,
                c.std_measured,
                c.mean_bound.map(|b| b.to_string()).unwrap_or_default(),
                c.mean_fit,
                c.mean_bound_over_measured
                    .map(|x| x.to_string())
                    .unwrap_or_default(),
            )
            .unwrap();
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "order-{} step error over random two-body Hamiltonians (seed {})\n",
            self.order, self.base_seed
        );
        for c in self.cells() {
            write!(
                out,
                "  n={} t={:<10.3e} samples={:<3} measured={:.3e} fit={:.3e}",
                c.n, c.t, c.samples, c.mean_measured, c.mean_fit
            )
            .unwrap();
            if let (Some(bound), Some(ratio)) = (c.mean_bound, c.mean_bound_over_measured) {
                write!(out, " bound={bound:.3e} bound/measured={ratio:.3e}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn sample_seed(base: u64, n: u32, sample: u32) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((n as u64) << 32)
        .wrapping_add(sample as u64)
}

/// Measure `||U(t) - U_order(t)||` for single formula steps across the
/// (n, t) grid, recording the rigorous bound (order 1) and the fitted
/// error model for each sample. The same Hamiltonians are reused across
/// the whole t grid.
pub fn ts_error_experiment(
    n_values: &[u32],
    t_grid: &[f64],
    samples: u32,
    order: u32,
    seed: u64,
) -> Result<ErrorReport, VerifyError> {
    assert!(order == 1 || order == 2, "orders 1 and 2 are supported");
    let mut records = Vec::new();
    for &n in n_values {
        let dim = check_cap(n)?;
        for sample in 0..samples {
            let spec_seed = sample_seed(seed, n, sample);
            let spec = sample_random_twobody(n, spec_seed)?;
            let h = super::dense::hamiltonian_matrix(&spec)?;
            let (values, vectors) = linalg::hermitian_eigen(&h);
            let norm_h = values.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
            let m = spec.term_count() as f64;
            let a_max = spec.max_abs_coefficient();
            for &t in t_grid {
                let mut scaled = vectors.clone();
                for (k, &lambda) in values.iter().enumerate() {
                    let phase = Complex64::from_polar(1.0, -lambda * t);
                    for row in 0..dim {
                        scaled[(row, k)] *= phase;
                    }
                }
                let exact: CMatrix = scaled * vectors.adjoint();
                let step = sequence_unitary(&spec, &build_ts_step(&spec, t, order))?;
                let measured = linalg::spectral_norm(&(exact - step));
                let bound = (order == 1).then(|| 2.0 * (1.5 * m * a_max * t).powi(3));
                let ht = norm_h * t;
                let fit = if order == 1 {
                    ht.powi(3) / (3.0 * (n * n) as f64)
                } else {
                    (ht / (n as f64).sqrt()).powi(5) / 3000.0
                };
                records.push(SampleRecord {
                    n,
                    t,
                    sample,
                    seed: spec_seed,
                    measured,
                    bound,
                    fit,
                    norm_h,
                });
            }
        }
    }
    Ok(ErrorReport {
        order,
        base_seed: seed,
        records,
    })
}

/// Least-squares fit of `||H|| ~ c n^alpha` over ensemble means.
#[derive(Debug, Clone)]
pub struct NormFit {
    pub coefficient: f64,
    pub exponent: f64,
    /// (n, ensemble mean of ||H||).
    pub points: Vec<(u32, f64)>,
    pub samples: u32,
    pub seed: u64,
}

pub fn norm_scaling_fit(
    n_values: &[u32],
    samples: u32,
    seed: u64,
) -> Result<NormFit, VerifyError> {
    let mut distinct = n_values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(VerifyError::NotEnoughPoints {
            needed: 2,
            got: distinct.len(),
        });
    }
    let mut points = Vec::with_capacity(distinct.len());
    for &n in &distinct {
        check_cap(n)?;
        let mut total = 0.0;
        for sample in 0..samples {
            let spec = sample_random_twobody(n, sample_seed(seed, n, sample))?;
            let h = super::dense::hamiltonian_matrix(&spec)?;
            let values = linalg::hermitian_eigenvalues(&h);
            total += values.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
        }
        points.push((n, total / samples as f64));
    }
    // Linear regression of ln(mean) on ln(n).
    let count = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(n, mean) in &points {
        let x = (n as f64).ln();
        let y = mean.ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    let intercept = (sy - exponent * sx) / count;
    Ok(NormFit {
        coefficient: intercept.exp(),
        exponent,
        points,
        samples,
        seed,
    })
}

/// One row of the exponential-count extrapolation table.
#[derive(Debug, Clone)]
pub struct ExtrapolationRow {
    pub n: u32,
    pub m: u64,
    /// Ensemble-fit norm `1.3 n^{5/3}` used for the estimate.
    pub norm_h: f64,
    pub r_order1: u32,
    pub r_order2: u32,
    /// `N_exp = 2 m r` for order 1.
    pub n_exp_order1: u64,
    /// `N_exp = 10 m r` for order 2.
    pub n_exp_order2: u64,
    pub ratio: f64,
    /// Published reference values, where this (epsilon, t) matches a
    /// published table.
    pub paper_order1: Option<u64>,
    pub paper_order2: Option<u64>,
    /// Set when the computed value disagrees with the published one
    /// (the published large-n rows used sampled norms, not the fit).
    pub deviates_order1: bool,
    pub deviates_order2: bool,
}

/// Published reference rows: (n, N_exp order 1, N_exp order 2) for the
/// two published parameter sets.
const TABLE_EPS_1E2_T_01: [(u32, u64, u64); 5] = [
    (2, 36, 90),
    (4, 432, 540),
    (10, 8_190, 8_100),
    (40, 786_240, 421_200),
    (100, 14_523_300, 7_573_500),
];
const TABLE_EPS_1E6_T_001: [(u32, u64, u64); 5] = [
    (2, 108, 90),
    (4, 1_296, 540),
    (10, 28_350, 4_050),
    (40, 2_471_040, 280_800),
    (100, 45_886_500, 4_455_000),
];

fn paper_reference(n: u32, epsilon: f64, t: f64) -> Option<(u64, u64)> {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs();
    let table: &[(u32, u64, u64)] = if close(epsilon, 0.01) && close(t, 0.1) {
        &TABLE_EPS_1E2_T_01
    } else if close(epsilon, 1e-6) && close(t, 0.01) {
        &TABLE_EPS_1E6_T_001
    } else {
        return None;
    };
    table
        .iter()
        .find(|&&(row_n, _, _)| row_n == n)
        .map(|&(_, one, two)| (one, two))
}

/// Extrapolate exponential counts for the two-body ensemble at the given
/// tolerance and duration, using the norm fit `||H|| = 1.3 n^{5/3}` and
/// the empirical step-count estimates.
pub fn extrapolate_exp_counts(
    n_values: &[u32],
    epsilon: f64,
    t: f64,
) -> Vec<ExtrapolationRow> {
    assert!(epsilon > 0.0 && t > 0.0, "need positive epsilon and t");
    n_values
        .iter()
        .map(|&n| {
            assert!(n >= 2, "two-body ensemble needs n >= 2");
            let m = 9 * n as u64 * (n as u64 - 1) / 2;
            let norm_h = 1.3 * (n as f64).powf(5.0 / 3.0);
            let r_order1 = heuristic_r(norm_h, t, epsilon, n, 1);
            let r_order2 = heuristic_r(norm_h, t, epsilon, n, 2);
            let n_exp_order1 = 2 * m * r_order1 as u64;
            let n_exp_order2 = 10 * m * r_order2 as u64;
            let paper = paper_reference(n, epsilon, t);
            ExtrapolationRow {
                n,
                m,
                norm_h,
                r_order1,
                r_order2,
                n_exp_order1,
                n_exp_order2,
                ratio: n_exp_order1 as f64 / n_exp_order2 as f64,
                paper_order1: paper.map(|p| p.0),
                paper_order2: paper.map(|p| p.1),
                deviates_order1: paper.is_some_and(|p| p.0 != n_exp_order1),
                deviates_order2: paper.is_some_and(|p| p.1 != n_exp_order2),
            }
        })
        .collect()
}
