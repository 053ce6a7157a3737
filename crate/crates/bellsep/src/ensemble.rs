//! Randomized state generation and statistical audits.
//!
//! Everything here is deterministic per seed: a [`RandomSeed`] fixes a
//! ChaCha12 stream and every sampler and audit draws from it sequentially,
//! so identical seeds reproduce results bit for bit.
//!
//! Bell diagonal samples draw a uniform probability vector on the
//! `4^p`-simplex (normalized unit-rate exponentials). At `p = 1` the vector
//! is read as the Bell-basis spectrum and converted linearly to its
//! coefficient triple. For `p >= 2` the state is assembled as a mixture of
//! the `4^p` maximally entangled projectors obtained by displacing the
//! uniform maximally entangled vector with one party's Pauli tensors; the
//! coefficients are then extracted from the dense matrix, and the cross-term
//! residual of that extraction is checked at runtime, which proves the
//! sample lies in the Bell diagonal family.
//!
//! Separable samples are convex mixtures of pure product states with
//! Haar-distributed local vectors (normalized complex Gaussians).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::bell::{BellSpectrum, OmegaDiagonal};
use crate::error::{Error, Result};
use crate::matrix::{kron, ComplexMatrix};
use crate::pauli::{pauli_pair_trace, pauli_row_action, PauliMultiIndex};
use crate::separability::{criterion_bound, criterion_sum, CriterionVerdict, PptVerdict};
use crate::{MAX_QUBITS_PER_PARTY, TOL_EIGEN};

/// Slack allowed before an audited inequality counts as violated.
pub const AUDIT_SLACK: f64 = 1e-9;

/// Seed for a reproducible sample stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSeed(pub u64);

impl RandomSeed {
    fn rng(self) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(self.0)
    }
}

/// Uniform draw from the `k`-simplex via normalized unit-rate exponentials.
fn draw_simplex(rng: &mut ChaCha12Rng, k: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = v.iter().sum();
    for x in &mut v {
        *x /= total;
    }
    v
}

/// Haar-random pure state vector of the given dimension.
fn draw_pure_vector(rng: &mut ChaCha12Rng, dim: usize) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
        .collect();
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut v {
        *z /= norm;
    }
    v
}

/// Deterministic core of the Bell diagonal sampler: build the state fixed
/// by mixing weights `q` over the generalized Bell projectors.
///
/// At `p = 1` the weights are the Bell-basis spectrum in the fixed order and
/// convert linearly. For `p >= 2` the mixture is realized densely and the
/// coefficients extracted; a cross-term residual above [`TOL_EIGEN`] fails
/// loudly since it would mean the construction left the Bell diagonal
/// family.
pub fn bell_diagonal_from_weights(p: usize, weights: &[f64]) -> Result<OmegaDiagonal> {
    if p == 1 {
        return BellSpectrum::new(1, weights.to_vec())?.to_omega();
    }

    let dim = 1usize << (2 * p);
    if weights.len() != dim {
        return Err(Error::InvalidArgument(format!(
            "expected {dim} weights for p = {p}, got {}",
            weights.len()
        )));
    }
    let d = 1usize << p;
    let scale = 1.0 / d as f64;
    let mut rho = ComplexMatrix::zeros(dim);
    for (idx, &q) in PauliMultiIndex::enumerate_all(p)?.iter().zip(weights) {
        if q == 0.0 {
            continue;
        }
        // Displaced maximally entangled vector: amplitude at (a, b) is
        // sigma_I[a][b] / sqrt(2^p), one nonzero per A-row.
        let action = pauli_row_action(idx);
        for (a1, &(b1, v1)) in action.iter().enumerate() {
            for (a2, &(b2, v2)) in action.iter().enumerate() {
                rho[(a1 * d + b1, a2 * d + b2)] += v1 * v2.conj() * (q * scale);
            }
        }
    }

    let (omega, residual) = OmegaDiagonal::from_density(&rho, p)?;
    if residual > TOL_EIGEN {
        return Err(Error::InternalConsistency(format!(
            "Bell projector mixture produced cross terms of size {residual:.3e}"
        )));
    }
    Ok(omega)
}

/// One random Bell diagonal state on `p` qubits per party.
pub fn sample_bell_diagonal(p: usize, seed: RandomSeed) -> Result<OmegaDiagonal> {
    let mut rng = seed.rng();
    draw_bell_diagonal(p, &mut rng)
}

fn draw_bell_diagonal(p: usize, rng: &mut ChaCha12Rng) -> Result<OmegaDiagonal> {
    if p < 1 || p > MAX_QUBITS_PER_PARTY {
        return Err(Error::InvalidArgument(format!(
            "party qubit count must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
        )));
    }
    let weights = draw_simplex(rng, 1usize << (2 * p));
    bell_diagonal_from_weights(p, &weights)
}

/// One term of a sampled separable ensemble.
#[derive(Clone, Debug)]
pub struct SeparableTerm {
    pub weight: f64,
    pub local_a: ComplexMatrix,
    pub local_b: ComplexMatrix,
}

/// A sampled separable state together with the ensemble that produced it.
#[derive(Clone, Debug)]
pub struct SeparableSample {
    pub p: usize,
    pub density: ComplexMatrix,
    pub terms: Vec<SeparableTerm>,
}

/// A random separable state: a convex mixture of `n_terms` pure product
/// states with Haar-random local vectors.
pub fn sample_separable(p: usize, n_terms: usize, seed: RandomSeed) -> Result<SeparableSample> {
    let mut rng = seed.rng();
    draw_separable(p, n_terms, &mut rng)
}

fn draw_separable(p: usize, n_terms: usize, rng: &mut ChaCha12Rng) -> Result<SeparableSample> {
    if p < 1 || p > MAX_QUBITS_PER_PARTY {
        return Err(Error::InvalidArgument(format!(
            "party qubit count must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
        )));
    }
    if n_terms < 1 {
        return Err(Error::InvalidArgument(
            "a separable mixture needs at least one term".into(),
        ));
    }
    let d = 1usize << p;
    let weights = draw_simplex(rng, n_terms);
    let mut density = ComplexMatrix::zeros(d * d);
    let mut terms = Vec::with_capacity(n_terms);
    for &w in &weights {
        let local_a = ComplexMatrix::projector(&draw_pure_vector(rng, d));
        let local_b = ComplexMatrix::projector(&draw_pure_vector(rng, d));
        density = &density + &kron(&local_a, &local_b).scale(w);
        terms.push(SeparableTerm {
            weight: w,
            local_a,
            local_b,
        });
    }
    Ok(SeparableSample { p, density, terms })
}

/// Confusion matrix between the criterion verdict and the partial-transpose
/// verdict over a stream of random Bell diagonal states.
#[derive(Clone, Debug, PartialEq)]
pub struct CrosscheckSummary {
    pub p: usize,
    pub n_samples: u64,
    pub seed: u64,
    pub tol: f64,
    /// Counts indexed `[criterion][ppt]` with criterion rows ordered
    /// separable, entangled, inconclusive and ppt columns ordered ppt, npt.
    pub cells: [[u64; 2]; 3],
    /// Samples with `|S - bound| < tol`.
    pub boundary_count: u64,
    /// Disagreements (separable-but-npt or entangled-but-ppt) away from the
    /// boundary. Zero is the expected outcome at `p = 1`.
    pub off_boundary_disagreements: u64,
}

fn criterion_row(v: CriterionVerdict) -> usize {
    match v {
        CriterionVerdict::Separable => 0,
        CriterionVerdict::Entangled => 1,
        CriterionVerdict::Inconclusive => 2,
    }
}

/// Cross-check the criterion against the partial transpose on `n` random
/// states at any `p`. At `p = 1` the two tests decide the same set, so every
/// off-diagonal entry away from the boundary is a defect.
pub fn crosscheck(p: usize, n: u64, seed: RandomSeed, tol: f64) -> Result<CrosscheckSummary> {
    let mut rng = seed.rng();
    let mut summary = CrosscheckSummary {
        p,
        n_samples: n,
        seed: seed.0,
        tol,
        cells: [[0; 2]; 3],
        boundary_count: 0,
        off_boundary_disagreements: 0,
    };
    for _ in 0..n {
        let omega = draw_bell_diagonal(p, &mut rng)?;
        let s = criterion_sum(&omega);
        let bound = criterion_bound(p);
        let criterion = if s > bound + tol {
            CriterionVerdict::Entangled
        } else if p == 1 {
            CriterionVerdict::Separable
        } else {
            CriterionVerdict::Inconclusive
        };
        let (ppt, _) = crate::separability::ppt_verdict(&omega, tol)?;

        summary.cells[criterion_row(criterion)][usize::from(ppt == PptVerdict::Npt)] += 1;
        let on_boundary = (s - bound).abs() < tol;
        if on_boundary {
            summary.boundary_count += 1;
        }
        let disagree = matches!(
            (criterion, ppt),
            (CriterionVerdict::Separable, PptVerdict::Npt)
                | (CriterionVerdict::Entangled, PptVerdict::Ppt)
        );
        if disagree && !on_boundary {
            summary.off_boundary_disagreements += 1;
        }
    }
    Ok(summary)
}

/// [`crosscheck`] at `p = 1`, where agreement is a theorem rather than an
/// observation.
pub fn crosscheck_p1(n: u64, seed: RandomSeed, tol: f64) -> Result<CrosscheckSummary> {
    crosscheck(1, n, seed, tol)
}

/// `sum over all I (identity included) of |tr(rho sigma_I (x) sigma_I)|`,
/// the quantity bounded by `2^p` for every separable state.
pub fn matched_pauli_abs_sum(rho: &ComplexMatrix, p: usize) -> Result<f64> {
    let dim = 1usize << (2 * p);
    if rho.dim() != dim {
        return Err(Error::InvalidArgument(format!(
            "expected dimension {dim} = 4^{p}, got {}",
            rho.dim()
        )));
    }
    let mut total = 0.0;
    for idx in PauliMultiIndex::enumerate_all(p)? {
        let action = pauli_row_action(&idx);
        total += pauli_pair_trace(rho, &action, &action).norm();
    }
    Ok(total)
}

/// Outcome of the aggregate-sum audit over sampled separable states.
#[derive(Clone, Debug, PartialEq)]
pub struct NecessityAudit {
    pub p: usize,
    pub n_samples: u64,
    pub n_terms: usize,
    pub seed: u64,
    /// The bound `2^p` every sampled sum must respect.
    pub bound: f64,
    pub violation_count: u64,
    /// Largest matched-pair coefficient sum observed.
    pub max_sum: f64,
}

/// Sample `n` separable states and check the aggregate bound
/// `sum_I |tr(rho sigma_I (x) sigma_I)| <= 2^p` on each.
pub fn necessary_condition_audit(
    p: usize,
    n: u64,
    n_terms: usize,
    seed: RandomSeed,
) -> Result<NecessityAudit> {
    let mut rng = seed.rng();
    let bound = (1usize << p) as f64;
    let mut audit = NecessityAudit {
        p,
        n_samples: n,
        n_terms,
        seed: seed.0,
        bound,
        violation_count: 0,
        max_sum: f64::NEG_INFINITY,
    };
    for _ in 0..n {
        let sample = draw_separable(p, n_terms, &mut rng)?;
        let sum = matched_pauli_abs_sum(&sample.density, p)?;
        audit.max_sum = audit.max_sum.max(sum);
        if sum > bound + AUDIT_SLACK {
            audit.violation_count += 1;
        }
    }
    Ok(audit)
}

/// Outcome of the per-term inequality audit over sampled ensembles.
///
/// For each ensemble term `k` with local coefficient vectors
/// `W^A_k, W^B_k` (entries `tr(rho_k sigma_I)`, identity entry 1):
///
/// * moment bound: `1 >= (1/2^p) sum_I (W_{k,I})^2` per party: the
///   purity of a state never exceeds the square of its trace;
/// * product bound: `1 >= (1/2^p) sum_I |W^A_{k,I} W^B_{k,I}|`: the
///   Cauchy-Schwarz combination of the two moment bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainAudit {
    pub p: usize,
    pub n_samples: u64,
    pub seed: u64,
    pub moment_violations: u64,
    pub product_violations: u64,
    /// Smallest slack (left minus right side) seen for the moment bound;
    /// negative would be a violation.
    pub moment_min_slack: f64,
    pub product_min_slack: f64,
}

/// Local Pauli coefficients `tr(rho sigma_I)` over all `4^p` indices.
fn local_pauli_coefficients(rho: &ComplexMatrix, p: usize) -> Result<Vec<f64>> {
    PauliMultiIndex::enumerate_all(p)?
        .iter()
        .map(|idx| {
            let mut t = Complex64::new(0.0, 0.0);
            for (row, &(col, v)) in pauli_row_action(idx).iter().enumerate() {
                t += rho[(col, row)] * v;
            }
            Ok(t.re)
        })
        .collect()
}

/// Audit the two per-term inequalities on `n` random ensembles of product
/// states.
///
/// Each ensemble mixes 1..=4 terms with simplex weights; local factors are
/// pure half the time and otherwise a two-point mixture of pure states, so
/// both the equality case (pure) and the strict case (mixed) get exercised.
pub fn chain_audit(p: usize, n: u64, seed: RandomSeed) -> Result<ChainAudit> {
    if p < 1 || p > MAX_QUBITS_PER_PARTY {
        return Err(Error::InvalidArgument(format!(
            "party qubit count must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
        )));
    }
    let mut rng = seed.rng();
    let d = 1usize << p;
    let scale = 1.0 / d as f64;
    let mut audit = ChainAudit {
        p,
        n_samples: n,
        seed: seed.0,
        moment_violations: 0,
        product_violations: 0,
        moment_min_slack: f64::INFINITY,
        product_min_slack: f64::INFINITY,
    };

    let draw_local = |rng: &mut ChaCha12Rng| -> ComplexMatrix {
        let pure = ComplexMatrix::projector(&draw_pure_vector(rng, d));
        if rng.gen::<bool>() {
            pure
        } else {
            let other = ComplexMatrix::projector(&draw_pure_vector(rng, d));
            let w: f64 = rng.gen();
            &pure.scale(w) + &other.scale(1.0 - w)
        }
    };

    for _ in 0..n {
        // The per-term inequalities do not involve the mixing weights, so an
        // ensemble here is just its collection of term pairs.
        let n_terms = rng.gen_range(1..=4);
        for _ in 0..n_terms {
            let local_a = draw_local(&mut rng);
            let local_b = draw_local(&mut rng);
            let wa = local_pauli_coefficients(&local_a, p)?;
            let wb = local_pauli_coefficients(&local_b, p)?;

            for w in [&wa, &wb] {
                let rhs = scale * w.iter().map(|x| x * x).sum::<f64>();
                let slack = w[0] * w[0] - rhs;
                audit.moment_min_slack = audit.moment_min_slack.min(slack);
                if slack < -AUDIT_SLACK {
                    audit.moment_violations += 1;
                }
            }

            let rhs = scale
                * wa.iter()
                    .zip(wb.iter())
                    .map(|(a, b)| (a * b).abs())
                    .sum::<f64>();
            let slack = wa[0] * wb[0] - rhs;
            audit.product_min_slack = audit.product_min_slack.min(slack);
            if slack < -AUDIT_SLACK {
                audit.product_violations += 1;
            }
        }
    }
    Ok(audit)
}
