//! Property tests for the structural invariants: round trips, involutions,
//! closed forms against dense oracles, and the criterion/transpose
//! equivalence at p = 1.

use std::collections::BTreeMap;

use num_complex::Complex64;
use proptest::prelude::*;

use bellsep::bell::{BellSpectrum, OmegaDiagonal};
use bellsep::matrix::{hermitian_eigenvalues, partial_transpose, ComplexMatrix};
use bellsep::pauli::{hs_coefficient, pauli_tensor, PauliMultiIndex};
use bellsep::separability::{
    criterion_sum, criterion_verdict, ppt_eigenvalues_closed_form, ppt_verdict, CriterionVerdict,
    PptVerdict,
};
use bellsep::{TOL_BOUNDARY, TOL_EIGEN};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A point on the 4-simplex, for Bell spectra.
fn simplex4() -> impl Strategy<Value = [f64; 4]> {
    [0.0f64..1.0, 0.0f64..1.0, 0.0f64..1.0, 0.0f64..1.0].prop_filter_map(
        "degenerate draw",
        |raw| {
            let total: f64 = raw.iter().sum();
            if total < 1e-3 {
                return None;
            }
            Some([
                raw[0] / total,
                raw[1] / total,
                raw[2] / total,
                raw[3] / total,
            ])
        },
    )
}

/// Random Hermitian matrix with entries of modulus at most ~1.
fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(
        (-1.0f64..1.0, -1.0f64..1.0),
        dim * dim,
    )
    .prop_map(move |raw| {
        let mut m = ComplexMatrix::zeros(dim);
        for r in 0..dim {
            m[(r, r)] = c(raw[r * dim + r].0, 0.0);
            for col in (r + 1)..dim {
                let z = c(raw[r * dim + col].0, raw[r * dim + col].1);
                m[(r, col)] = z;
                m[(col, r)] = z.conj();
            }
        }
        m
    })
}

/// Omega coefficient maps at `p = 2` drawn coordinatewise in [-1/15, 1/15],
/// which keeps the realized matrix a state (the trace-norm of the
/// off-identity part stays below 1).
fn small_omega_p2() -> impl Strategy<Value = OmegaDiagonal> {
    prop::collection::vec(-1.0f64 / 15.0..1.0 / 15.0, 15).prop_map(|vals| {
        let mut coeffs = BTreeMap::new();
        for (idx, v) in PauliMultiIndex::enumerate_all(2)
            .unwrap()
            .into_iter()
            .filter(|i| !i.is_zero())
            .zip(vals)
        {
            coeffs.insert(idx, v);
        }
        OmegaDiagonal::new(2, coeffs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lambda_omega_round_trip(l in simplex4()) {
        let spectrum = BellSpectrum::new(1, l.to_vec()).unwrap();
        let back = spectrum.to_omega().unwrap().to_spectrum().unwrap();
        for (a, b) in back.lambdas().iter().zip(l.iter()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn omega_density_round_trip_p1(l in simplex4()) {
        let omega = BellSpectrum::new(1, l.to_vec()).unwrap().to_omega().unwrap();
        let (back, residual) = OmegaDiagonal::from_density(&omega.to_density_matrix(), 1).unwrap();
        prop_assert!(residual < 1e-12);
        let (a1, a2, a3) = omega.triple().unwrap();
        let (b1, b2, b3) = back.triple().unwrap();
        prop_assert!((a1 - b1).abs() < 1e-12 && (a2 - b2).abs() < 1e-12 && (a3 - b3).abs() < 1e-12);
    }

    #[test]
    fn omega_density_round_trip_p2(omega in small_omega_p2()) {
        let (back, residual) = OmegaDiagonal::from_density(&omega.to_density_matrix(), 2).unwrap();
        prop_assert!(residual < 1e-12);
        for (idx, v) in omega.iter() {
            prop_assert!((back.get(idx) - v).abs() < 1e-12);
        }
    }

    #[test]
    fn purity_closed_form_matches_dense_trace(l in simplex4()) {
        let omega = BellSpectrum::new(1, l.to_vec()).unwrap().to_omega().unwrap();
        let rho = omega.to_density_matrix();
        let dense = (&rho * &rho).trace().re;
        prop_assert!((omega.purity() - dense).abs() < 1e-12);
    }

    #[test]
    fn purity_closed_form_matches_dense_trace_p2(omega in small_omega_p2()) {
        let rho = omega.to_density_matrix();
        let dense = (&rho * &rho).trace().re;
        prop_assert!((omega.purity() - dense).abs() < 1e-12);
    }

    #[test]
    fn partial_transpose_involution_linearity_hermiticity(
        m in hermitian(4),
        n in hermitian(4),
        alpha in -2.0f64..2.0,
    ) {
        let pt = partial_transpose(&m, 1).unwrap();
        prop_assert!(pt.is_hermitian(1e-14));
        prop_assert!((pt.trace() - m.trace()).norm() < 1e-13);
        prop_assert!(partial_transpose(&pt, 1).unwrap().max_abs_diff(&m) < 1e-12);

        // Linearity: PT(m + alpha n) = PT(m) + alpha PT(n).
        let combined = &m + &n.scale(alpha);
        let lhs = partial_transpose(&combined, 1).unwrap();
        let rhs = &pt + &partial_transpose(&n, 1).unwrap().scale(alpha);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn pauli_coefficients_recompose_the_matrix(m in hermitian(4)) {
        // rho = (1/4^p) sum_IJ c_IJ sigma_I (x) sigma_J at p = 1.
        let all = PauliMultiIndex::enumerate_all(1).unwrap();
        let mut rebuilt = ComplexMatrix::zeros(4);
        for i in &all {
            for j in &all {
                let (re, im) = hs_coefficient(&m, i, j).unwrap();
                prop_assert!(im <= 1e-12);
                let term = bellsep::matrix::kron(&pauli_tensor(i), &pauli_tensor(j));
                rebuilt = &rebuilt + &term.scale(re / 4.0);
            }
        }
        prop_assert!(rebuilt.max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn eigenvalue_sum_matches_trace(m in hermitian(8)) {
        let eigs = hermitian_eigenvalues(&m, 1e-13).unwrap();
        let sum: f64 = eigs.iter().sum();
        prop_assert!((sum - m.trace().re).abs() <= 1e-10 * 8.0);
    }

    #[test]
    fn criterion_and_transpose_agree_on_states(l in simplex4()) {
        let omega = BellSpectrum::new(1, l.to_vec()).unwrap().to_omega().unwrap();
        if !omega.is_state() {
            // Rounding at the simplex boundary can push an eigenvalue just
            // below zero; those draws are out of scope here.
            return Ok(());
        }
        let s = criterion_sum(&omega);
        if (s - 1.0).abs() < TOL_BOUNDARY {
            return Ok(());
        }
        let criterion = criterion_verdict(&omega, TOL_BOUNDARY).unwrap();
        let (ppt, _) = ppt_verdict(&omega, TOL_BOUNDARY).unwrap();
        prop_assert_eq!(
            criterion == CriterionVerdict::Entangled,
            ppt == PptVerdict::Npt
        );

        // The closed-form transpose spectrum must agree with the numeric one.
        let mut closed = ppt_eigenvalues_closed_form(&omega).unwrap().to_vec();
        closed.sort_by(f64::total_cmp);
        let (_, numeric) = ppt_verdict(&omega, TOL_EIGEN).unwrap();
        for (a, b) in closed.iter().zip(numeric.iter()) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn criterion_sum_is_linear_under_scaling(l in simplex4(), t in 0.0f64..1.0) {
        let omega = BellSpectrum::new(1, l.to_vec()).unwrap().to_omega().unwrap();
        let (o11, o22, o33) = omega.triple().unwrap();
        let scaled = OmegaDiagonal::from_triple(t * o11, t * o22, t * o33).unwrap();
        prop_assert!((criterion_sum(&scaled) - t * criterion_sum(&omega)).abs() < 1e-12);
    }
}
