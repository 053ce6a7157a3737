//! The separability criterion, the explicit separable decomposition, and the
//! partial-transpose cross-check.
//!
//! The criterion works on the coefficient sum `S = sum_{I != 0} |Omega_I|`.
//! Folding in the identity coefficient (fixed at 1), a separable state obeys
//! `(1 + S) / 2^p <= 1`, i.e. `S <= 2^p - 1`. This is necessary for every
//! `p`; at `p = 1` it is also sufficient, certified constructively by a
//! four-term decomposition into product states whose local factors share the
//! spectrum `((1 + sqrt(S)) / 2, (1 - sqrt(S)) / 2)`: nonnegative exactly
//! when `S <= 1`.
//!
//! The independent cross-check transposes the B factor. At `p = 1` the
//! transformed eigenvalues are available in closed form:
//!
//! ```text
//! t_1 = (1 + O11 - O22 + O33) / 4      t_3 = (1 + O11 + O22 - O33) / 4
//! t_2 = (1 - O11 + O22 + O33) / 4      t_4 = (1 - O11 - O22 - O33) / 4
//! ```
//!
//! For general `p` the spectrum is computed numerically.
//!
//! Two distinct sign conventions are in play and kept in separate code
//! paths: the *basis sign* `(-1)^eps(I)` of the diagonal expansion (handled
//! entirely inside [`crate::bell`]) and the *coefficient sign*
//! `sign(Omega_ii)` that the decomposition attaches to its A-side factors.

use std::fmt;

use num_complex::Complex64;

use crate::bell::OmegaDiagonal;
use crate::error::{Error, Result};
use crate::matrix::{hermitian_eigenvalues, kron, partial_transpose, ComplexMatrix};
use crate::{TOL_BOUNDARY, TOL_CONSTRUCTION, TOL_EIGEN};

/// Sweep threshold handed to the Jacobi solver when spectra feed reports.
const SPECTRUM_SWEEP_TOL: f64 = 1e-13;

/// Outcome of the coefficient-sum criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionVerdict {
    /// `S` within the bound at `p = 1`, where the bound is sufficient.
    Separable,
    /// `S` above the bound; the state is certainly entangled.
    Entangled,
    /// `S` within the bound at `p >= 2`, where the bound is only necessary.
    Inconclusive,
}

impl fmt::Display for CriterionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriterionVerdict::Separable => "separable",
            CriterionVerdict::Entangled => "entangled",
            CriterionVerdict::Inconclusive => "inconclusive",
        })
    }
}

/// Outcome of the partial-transpose test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PptVerdict {
    /// The partial transpose is positive semidefinite.
    Ppt,
    /// The partial transpose has a negative eigenvalue; entangled.
    Npt,
}

impl fmt::Display for PptVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PptVerdict::Ppt => "ppt",
            PptVerdict::Npt => "npt",
        })
    }
}

/// Why a decomposition failed verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionDefect {
    /// Weights negative or not summing to 1.
    Weights,
    /// A local factor is not a unit-trace positive semidefinite Hermitian
    /// matrix.
    Positivity,
    /// The weighted sum of products does not reproduce the target state.
    Reconstruction,
}

impl fmt::Display for DecompositionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionDefect::Weights => "weights",
            DecompositionDefect::Positivity => "positivity",
            DecompositionDefect::Reconstruction => "reconstruction",
        })
    }
}

/// An explicit convex decomposition into product states, certifying
/// separability at `p = 1`.
#[derive(Clone, Debug)]
pub struct SeparableDecomposition {
    p: usize,
    weights: Vec<f64>,
    local_a: Vec<ComplexMatrix>,
    local_b: Vec<ComplexMatrix>,
}

impl SeparableDecomposition {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn local_a(&self) -> &[ComplexMatrix] {
        &self.local_a
    }

    pub fn local_b(&self) -> &[ComplexMatrix] {
        &self.local_b
    }

    /// The weighted sum of tensor products this decomposition realizes.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let dim = self.local_a[0].dim() * self.local_b[0].dim();
        let mut out = ComplexMatrix::zeros(dim);
        for ((w, a), b) in self
            .weights
            .iter()
            .zip(self.local_a.iter())
            .zip(self.local_b.iter())
        {
            out = &out + &kron(a, b).scale(*w);
        }
        out
    }
}

/// The user-facing result of a full analysis.
#[derive(Clone, Debug)]
pub struct SeparabilityReport {
    pub p: usize,
    /// `S = sum_{I != 0} |Omega_I|`.
    pub criterion_sum: f64,
    /// `2^p - 1`; separability requires `criterion_sum` at or below it.
    pub criterion_bound: f64,
    pub criterion_verdict: CriterionVerdict,
    /// Eigenvalues of the partial transpose, ascending.
    pub ppt_spectrum: Vec<f64>,
    pub ppt_verdict: PptVerdict,
    /// Explicit decomposition; present exactly for separable verdicts.
    pub certificate: Option<SeparableDecomposition>,
    pub purity: f64,
}

/// `S = sum over nonzero indices of |Omega_I|`. The identity term (fixed at
/// 1) is excluded here and folded into [`criterion_bound`].
pub fn criterion_sum(omega: &OmegaDiagonal) -> f64 {
    // fold from +0.0: the empty Sum identity is -0.0, which would leak into
    // printed reports
    omega.iter().map(|(_, v)| v.abs()).fold(0.0, |acc, x| acc + x)
}

/// The separability bound on [`criterion_sum`]: `2^p - 1`.
pub fn criterion_bound(p: usize) -> f64 {
    ((1u64 << p) - 1) as f64
}

/// Classify by the coefficient sum. Boundary values within `tol` of the
/// bound count as within it, since the explicit decomposition still exists
/// there at `p = 1`.
pub fn criterion_verdict(omega: &OmegaDiagonal, tol: f64) -> Result<CriterionVerdict> {
    if !omega.is_state() {
        return Err(Error::InvalidArgument(
            "criterion verdicts are defined for states only".into(),
        ));
    }
    let s = criterion_sum(omega);
    let bound = criterion_bound(omega.p());
    Ok(if s > bound + tol {
        CriterionVerdict::Entangled
    } else if omega.p() == 1 {
        CriterionVerdict::Separable
    } else {
        CriterionVerdict::Inconclusive
    })
}

/// Eigenvalues of the partial transpose of a `p = 1` state, in closed form
/// and in the fixed order `t_1 ... t_4` documented at module level.
pub fn ppt_eigenvalues_closed_form(omega: &OmegaDiagonal) -> Result<[f64; 4]> {
    let (o11, o22, o33) = omega.triple().map_err(|_| {
        Error::UnsupportedDimension(format!(
            "closed-form transpose spectrum exists only at p = 1, got p = {}",
            omega.p()
        ))
    })?;
    Ok([
        0.25 * (1.0 + o11 - o22 + o33),
        0.25 * (1.0 - o11 + o22 + o33),
        0.25 * (1.0 + o11 + o22 - o33),
        0.25 * (1.0 - o11 - o22 - o33),
    ])
}

/// Numeric partial-transpose test: realize the state, transpose the B
/// factor, and inspect the spectrum. Returns the verdict together with the
/// ascending eigenvalues.
pub fn ppt_verdict(omega: &OmegaDiagonal, tol: f64) -> Result<(PptVerdict, Vec<f64>)> {
    if !omega.is_state() {
        return Err(Error::InvalidArgument(
            "partial-transpose verdicts are defined for states only".into(),
        ));
    }
    ppt_verdict_unchecked(omega, tol)
}

fn ppt_verdict_unchecked(omega: &OmegaDiagonal, tol: f64) -> Result<(PptVerdict, Vec<f64>)> {
    let pt = partial_transpose(&omega.to_density_matrix(), omega.p())?;
    let spectrum = hermitian_eigenvalues(&pt, SPECTRUM_SWEEP_TOL)?;
    let verdict = if spectrum[0] >= -tol {
        PptVerdict::Ppt
    } else {
        PptVerdict::Npt
    };
    Ok((verdict, spectrum))
}

/// The two eigenvalues shared by every local factor of the four-term
/// decomposition, as a function of the criterion sum: `((1 + sqrt(S)) / 2,
/// (1 - sqrt(S)) / 2)`. Both are nonnegative exactly when `S <= 1`.
pub fn local_eigenvalues_closed_form(s: f64) -> Result<(f64, f64)> {
    if !(s >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "criterion sum must be nonnegative, got {s}"
        )));
    }
    let r = s.sqrt();
    Ok(((1.0 + r) / 2.0, (1.0 - r) / 2.0))
}

/// `(1/2) (sigma_0 + x sigma_1 + y sigma_2 + z sigma_3)` as an explicit
/// 2x2 matrix.
fn bloch_state(x: f64, y: f64, z: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 0)] = Complex64::new((1.0 + z) / 2.0, 0.0);
    m[(0, 1)] = Complex64::new(x / 2.0, -y / 2.0);
    m[(1, 0)] = Complex64::new(x / 2.0, y / 2.0);
    m[(1, 1)] = Complex64::new((1.0 - z) / 2.0, 0.0);
    m
}

/// Build the four-term separable decomposition of a `p = 1` state with
/// `S <= 1`.
///
/// With `a = sqrt(|O11|)`, `b = sqrt(|O22|)`, `c = sqrt(|O33|)`, the A-side
/// factors carry the coefficient signs `s_i = sign(O_ii)` on a fixed
/// four-row sign pattern, while the B-side factors use the complementary
/// pattern with an unsigned `-b` on the second component:
///
/// ```text
/// A: (+s1 a, +s2 b, +s3 c)   B: (+a, -b, +c)
///    (-s1 a, +s2 b, -s3 c)      (-a, -b, -c)
///    (+s1 a, -s2 b, -s3 c)      (+a, +b, -c)
///    (-s1 a, -s2 b, +s3 c)      (-a, +b, +c)
/// ```
///
/// Each weight is 1/4 and the weighted sum of products reproduces the state
/// exactly; positivity of the factors is what requires `S <= 1`.
pub fn build_decomposition(omega: &OmegaDiagonal) -> Result<SeparableDecomposition> {
    let (o11, o22, o33) = omega.triple().map_err(|_| {
        Error::UnsupportedDimension(format!(
            "the explicit decomposition exists only at p = 1, got p = {}",
            omega.p()
        ))
    })?;
    let s = criterion_sum(omega);
    if s > 1.0 + TOL_CONSTRUCTION {
        return Err(Error::CriterionViolated(format!(
            "criterion sum {s} exceeds 1; the local factors would not be positive"
        )));
    }

    let (a, b, c) = (o11.abs().sqrt(), o22.abs().sqrt(), o33.abs().sqrt());
    let (s1, s2, s3) = (o11.signum(), o22.signum(), o33.signum());

    let a_patterns: [(f64, f64, f64); 4] = [
        (1.0, 1.0, 1.0),
        (-1.0, 1.0, -1.0),
        (1.0, -1.0, -1.0),
        (-1.0, -1.0, 1.0),
    ];
    let b_patterns: [(f64, f64, f64); 4] = [
        (1.0, -1.0, 1.0),
        (-1.0, -1.0, -1.0),
        (1.0, 1.0, -1.0),
        (-1.0, 1.0, 1.0),
    ];

    let local_a = a_patterns
        .iter()
        .map(|&(u, v, w)| bloch_state(u * s1 * a, v * s2 * b, w * s3 * c))
        .collect();
    let local_b = b_patterns
        .iter()
        .map(|&(u, v, w)| bloch_state(u * a, v * b, w * c))
        .collect();

    Ok(SeparableDecomposition {
        p: 1,
        weights: vec![0.25; 4],
        local_a,
        local_b,
    })
}

/// Check every decomposition invariant against the target state at the
/// given tolerance. A failed check reports which class of invariant broke.
pub fn verify_decomposition(
    decomposition: &SeparableDecomposition,
    omega: &OmegaDiagonal,
    tol: f64,
) -> std::result::Result<(), DecompositionDefect> {
    let d = decomposition;
    let n = d.weights.len();
    if n == 0 || d.local_a.len() != n || d.local_b.len() != n {
        return Err(DecompositionDefect::Weights);
    }
    let sum: f64 = d.weights.iter().sum();
    if d.weights.iter().any(|&w| w < -tol) || (sum - 1.0).abs() > tol {
        return Err(DecompositionDefect::Weights);
    }
    for factor in d.local_a.iter().chain(d.local_b.iter()) {
        if !factor.is_hermitian(tol) || (factor.trace().re - 1.0).abs() > tol {
            return Err(DecompositionDefect::Positivity);
        }
        match crate::matrix::min_eigenvalue(factor) {
            Ok(min) if min >= -tol.max(TOL_EIGEN) => {}
            _ => return Err(DecompositionDefect::Positivity),
        }
    }
    let residual = d.reconstruct().max_abs_diff(&omega.to_density_matrix());
    if residual > tol {
        return Err(DecompositionDefect::Reconstruction);
    }
    Ok(())
}

/// Full analysis with the default boundary tolerance.
pub fn analyze(omega: &OmegaDiagonal) -> Result<SeparabilityReport> {
    analyze_with_tol(omega, TOL_BOUNDARY)
}

/// Full analysis: criterion sum and verdict, partial-transpose spectrum and
/// verdict, purity, and (for separable `p = 1` states) the explicit
/// certificate. `tol` classifies both boundaries so the two verdicts agree
/// away from `|S - bound| < tol`.
pub fn analyze_with_tol(omega: &OmegaDiagonal, tol: f64) -> Result<SeparabilityReport> {
    let rho = omega.to_density_matrix();
    let eigs = hermitian_eigenvalues(&rho, SPECTRUM_SWEEP_TOL)?;
    if eigs[0] < -TOL_EIGEN {
        return Err(Error::InvalidArgument(format!(
            "not a state: minimum eigenvalue {:.16e} is negative",
            eigs[0]
        )));
    }

    let p = omega.p();
    let s = criterion_sum(omega);
    let bound = criterion_bound(p);
    let criterion = if s > bound + tol {
        CriterionVerdict::Entangled
    } else if p == 1 {
        CriterionVerdict::Separable
    } else {
        CriterionVerdict::Inconclusive
    };

    let (ppt, spectrum) = ppt_verdict_unchecked(omega, tol)?;

    let certificate = if criterion == CriterionVerdict::Separable {
        build_decomposition(omega).ok()
    } else {
        None
    };

    Ok(SeparabilityReport {
        p,
        criterion_sum: s,
        criterion_bound: bound,
        criterion_verdict: criterion,
        ppt_spectrum: spectrum,
        ppt_verdict: ppt,
        certificate,
        purity: omega.purity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PauliMultiIndex;
    use std::collections::BTreeMap;

    fn omega1(o11: f64, o22: f64, o33: f64) -> OmegaDiagonal {
        OmegaDiagonal::from_triple(o11, o22, o33).unwrap()
    }

    /// All fifteen nonzero coefficients set to 1: the projector onto the
    /// p = 2 maximally entangled state.
    fn p2_maximally_entangled() -> OmegaDiagonal {
        let mut coeffs = BTreeMap::new();
        for idx in PauliMultiIndex::enumerate_all(2).unwrap() {
            if !idx.is_zero() {
                coeffs.insert(idx, 1.0);
            }
        }
        OmegaDiagonal::new(2, coeffs).unwrap()
    }

    #[test]
    fn criterion_sum_examples() {
        assert_eq!(criterion_sum(&omega1(0.0, 0.0, 0.0)), 0.0);
        let werner = omega1(-1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0);
        assert!((criterion_sum(&werner) - 1.0).abs() < 1e-15);
        assert_eq!(criterion_sum(&p2_maximally_entangled()), 15.0);
    }

    #[test]
    fn criterion_bounds() {
        assert_eq!(criterion_bound(1), 1.0);
        assert_eq!(criterion_bound(2), 3.0);
        assert_eq!(criterion_bound(3), 7.0);
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(
            criterion_verdict(&omega1(1.0, 1.0, 1.0), TOL_BOUNDARY).unwrap(),
            CriterionVerdict::Entangled
        );
        assert_eq!(
            criterion_verdict(&omega1(-1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0), TOL_BOUNDARY).unwrap(),
            CriterionVerdict::Separable
        );
        assert_eq!(
            criterion_verdict(&OmegaDiagonal::maximally_mixed(2).unwrap(), TOL_BOUNDARY).unwrap(),
            CriterionVerdict::Inconclusive
        );
        assert!(matches!(
            criterion_verdict(&omega1(1.0, -1.0, 1.0), TOL_BOUNDARY),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn closed_form_transpose_spectrum() {
        assert_eq!(
            ppt_eigenvalues_closed_form(&omega1(0.0, 0.0, 0.0)).unwrap(),
            [0.25; 4]
        );
        assert_eq!(
            ppt_eigenvalues_closed_form(&omega1(1.0, 1.0, 1.0)).unwrap(),
            [0.5, 0.5, 0.5, -0.5]
        );

        let t = ppt_eigenvalues_closed_form(&omega1(-1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0)).unwrap();
        let mut sorted = t;
        sorted.sort_by(f64::total_cmp);
        assert!(sorted[0].abs() < 1e-15);
        for v in &sorted[1..] {
            assert!((v - 1.0 / 3.0).abs() < 1e-15);
        }

        assert!(matches!(
            ppt_eigenvalues_closed_form(&OmegaDiagonal::maximally_mixed(2).unwrap()),
            Err(Error::UnsupportedDimension(_))
        ));
    }

    #[test]
    fn closed_form_matches_numeric_transpose_spectrum() {
        for (o11, o22, o33) in [
            (0.0, 0.0, 0.0),
            (1.0, 1.0, 1.0),
            (-1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0),
            (0.2, -0.4, 0.3),
        ] {
            let o = omega1(o11, o22, o33);
            let mut closed = ppt_eigenvalues_closed_form(&o).unwrap().to_vec();
            closed.sort_by(f64::total_cmp);
            let (_, numeric) = ppt_verdict(&o, TOL_EIGEN).unwrap();
            for (a, b) in closed.iter().zip(numeric.iter()) {
                assert!((a - b).abs() < 1e-10, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn ppt_verdict_examples() {
        assert_eq!(
            ppt_verdict(&omega1(0.0, 0.0, 0.0), TOL_EIGEN).unwrap().0,
            PptVerdict::Ppt
        );
        assert_eq!(
            ppt_verdict(&omega1(1.0, 1.0, 1.0), TOL_EIGEN).unwrap().0,
            PptVerdict::Npt
        );
        assert_eq!(
            ppt_verdict(&p2_maximally_entangled(), TOL_EIGEN).unwrap().0,
            PptVerdict::Npt
        );
    }

    #[test]
    fn local_spectrum_closed_form() {
        assert_eq!(local_eigenvalues_closed_form(0.0).unwrap(), (0.5, 0.5));
        assert_eq!(local_eigenvalues_closed_form(1.0).unwrap(), (1.0, 0.0));
        assert_eq!(local_eigenvalues_closed_form(0.25).unwrap(), (0.75, 0.25));
        assert!(local_eigenvalues_closed_form(-0.1).is_err());
    }

    #[test]
    fn local_spectrum_matches_eigensolver_on_a_factor() {
        // Cross-check the closed form on a concrete local factor at S = 1/4.
        let o = omega1(0.25, 0.0, 0.0);
        let d = build_decomposition(&o).unwrap();
        let eigs = hermitian_eigenvalues(&d.local_a()[0], 1e-13).unwrap();
        assert!((eigs[0] - 0.25).abs() < 1e-12 && (eigs[1] - 0.75).abs() < 1e-12);
    }

    #[test]
    fn decomposition_of_maximally_mixed() {
        let o = omega1(0.0, 0.0, 0.0);
        let d = build_decomposition(&o).unwrap();
        let half = ComplexMatrix::identity(2).scale(0.5);
        for f in d.local_a().iter().chain(d.local_b().iter()) {
            assert!(f.max_abs_diff(&half) < 1e-15);
        }
        assert!(d
            .reconstruct()
            .max_abs_diff(&ComplexMatrix::identity(4).scale(0.25))
            < 1e-15);
        assert!(verify_decomposition(&d, &o, TOL_CONSTRUCTION).is_ok());
    }

    #[test]
    fn decomposition_of_single_axis_state() {
        // At (1, 0, 0) every factor is (sigma_0 +- sigma_1) / 2 and the
        // reconstruction is (I (x) I + sigma_1 (x) sigma_1) / 4.
        let o = omega1(1.0, 0.0, 0.0);
        let d = build_decomposition(&o).unwrap();
        for f in d.local_a().iter().chain(d.local_b().iter()) {
            assert!((f[(0, 0)].re - 0.5).abs() < 1e-15);
            assert!((f[(0, 1)].re.abs() - 0.5).abs() < 1e-15);
        }
        let i4 = ComplexMatrix::identity(4);
        let x = crate::pauli::pauli_matrix(1).unwrap();
        let expected = (&i4 + &kron(&x, &x)).scale(0.25);
        assert!(d.reconstruct().max_abs_diff(&expected) < 1e-15);
        assert!(verify_decomposition(&d, &o, TOL_CONSTRUCTION).is_ok());
    }

    #[test]
    fn decomposition_at_the_boundary_has_pure_locals() {
        let o = omega1(-1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0);
        let d = build_decomposition(&o).unwrap();
        for f in d.local_a().iter().chain(d.local_b().iter()) {
            let eigs = hermitian_eigenvalues(f, 1e-13).unwrap();
            assert!(eigs[0].abs() < 1e-10 && (eigs[1] - 1.0).abs() < 1e-10);
        }
        assert!(verify_decomposition(&d, &o, TOL_CONSTRUCTION).is_ok());
    }

    #[test]
    fn decomposition_refuses_criterion_violations() {
        assert!(matches!(
            build_decomposition(&omega1(1.0, 1.0, 1.0)),
            Err(Error::CriterionViolated(_))
        ));
        assert!(matches!(
            build_decomposition(&OmegaDiagonal::maximally_mixed(2).unwrap()),
            Err(Error::UnsupportedDimension(_))
        ));
    }

    #[test]
    fn verification_detects_wrong_target() {
        let d = build_decomposition(&omega1(0.0, 0.0, 0.0)).unwrap();
        let other = omega1(0.5, 0.0, 0.0);
        assert_eq!(
            verify_decomposition(&d, &other, TOL_CONSTRUCTION),
            Err(DecompositionDefect::Reconstruction)
        );
    }

    #[test]
    fn verification_detects_bad_local_factor() {
        let mut d = build_decomposition(&omega1(0.0, 0.0, 0.0)).unwrap();
        d.local_a[0] = crate::pauli::pauli_matrix(3).unwrap(); // trace 0
        assert_eq!(
            verify_decomposition(&d, &omega1(0.0, 0.0, 0.0), TOL_CONSTRUCTION),
            Err(DecompositionDefect::Positivity)
        );
    }

    #[test]
    fn verification_detects_bad_weights() {
        let mut d = build_decomposition(&omega1(0.0, 0.0, 0.0)).unwrap();
        d.weights[0] = 0.5;
        assert_eq!(
            verify_decomposition(&d, &omega1(0.0, 0.0, 0.0), TOL_CONSTRUCTION),
            Err(DecompositionDefect::Weights)
        );
    }

    #[test]
    fn analyze_maximally_mixed() {
        let r = analyze(&omega1(0.0, 0.0, 0.0)).unwrap();
        assert_eq!(r.criterion_sum, 0.0);
        assert_eq!(r.criterion_verdict, CriterionVerdict::Separable);
        assert_eq!(r.ppt_verdict, PptVerdict::Ppt);
        assert!(r.certificate.is_some());
        assert!((r.purity - 0.25).abs() < 1e-15);
    }

    #[test]
    fn analyze_pure_bell_state() {
        let r = analyze(&omega1(1.0, 1.0, 1.0)).unwrap();
        assert_eq!(r.criterion_sum, 3.0);
        assert_eq!(r.criterion_verdict, CriterionVerdict::Entangled);
        assert_eq!(r.ppt_verdict, PptVerdict::Npt);
        assert!(r.certificate.is_none());
        assert!((r.ppt_spectrum[0] + 0.5).abs() < 1e-12);
    }

    #[test]
    fn analyze_p2_maximally_mixed() {
        let r = analyze(&OmegaDiagonal::maximally_mixed(2).unwrap()).unwrap();
        assert_eq!(r.criterion_verdict, CriterionVerdict::Inconclusive);
        assert_eq!(r.ppt_verdict, PptVerdict::Ppt);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn analyze_rejects_non_states() {
        match analyze(&omega1(1.0, -1.0, 1.0)) {
            Err(Error::InvalidArgument(msg)) => {
                assert!(msg.contains("eigenvalue"), "message: {msg}")
            }
            other => panic!("expected invalid-argument, got {other:?}"),
        }
    }

    #[test]
    fn criterion_scales_linearly_and_flips_once() {
        // S is linear under coefficient scaling, so the p = 1 verdict flips
        // exactly once on the way down from an entangled state.
        let base = (0.9, -0.8, 0.7); // S = 2.4
        let mut previous = CriterionVerdict::Entangled;
        let mut flips = 0;
        for k in (0..=100).rev() {
            let t = k as f64 / 100.0;
            let o = omega1(base.0 * t, base.1 * t, base.2 * t);
            let s = criterion_sum(&o);
            assert!((s - 2.4 * t).abs() < 1e-12);
            if !o.is_state() {
                continue;
            }
            let v = criterion_verdict(&o, TOL_BOUNDARY).unwrap();
            if v != previous {
                flips += 1;
                previous = v;
            }
        }
        assert_eq!(flips, 1);
        assert_eq!(previous, CriterionVerdict::Separable);
    }
}
