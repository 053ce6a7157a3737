//! The Bell diagonal state model.
//!
//! States are carried as [`OmegaDiagonal`]: the family of real coefficients
//! `Omega_I` over nonzero Pauli multi-indices, with the all-zero coefficient
//! implicitly 1. The realized density matrix is
//!
//! ```text
//! rho = (1 / 4^p) [ 1 + sum_{I != 0} (-1)^eps(I) Omega_I  sigma_I (x) sigma_I ]
//! ```
//!
//! where `eps(I)` counts digits equal to 2. That basis sign is absorbed
//! symmetrically here and in the extraction [`OmegaDiagonal::from_density`],
//! so `Omega` values round-trip unchanged and callers never handle it.
//!
//! At `p = 1` the four Bell-basis eigenvalues ([`BellSpectrum`], ordered
//! `Phi+, Phi-, Psi+, Psi-`) are linearly related to the three `Omega`
//! coefficients:
//!
//! ```text
//! lambda_1 = (1 + O11 + O22 + O33) / 4      lambda_3 = (1 + O11 - O22 - O33) / 4
//! lambda_2 = (1 - O11 - O22 + O33) / 4      lambda_4 = (1 - O11 + O22 - O33) / 4
//! ```
//!
//! No eigenvalue ordering is defined for `p >= 2`; `Omega` is the canonical
//! form there.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::{is_psd, ComplexMatrix};
use crate::pauli::{pauli_row_action, PauliMultiIndex};
use crate::{MAX_QUBITS_PER_PARTY, TOL_CONSTRUCTION, TOL_EIGEN};

/// Diagonal Pauli-pair coefficients of a Bell diagonal state.
///
/// Stored coefficients are bounded by 1 in modulus (a larger value is ruled
/// out for any unit-trace operator of this form that could be a state);
/// positivity is *not* enforced, so non-state coefficient sets remain
/// representable and can be analyzed and rejected explicitly. Absent indices
/// mean `Omega_I = 0`; the all-zero index is never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaDiagonal {
    p: usize,
    coeffs: BTreeMap<PauliMultiIndex, f64>,
}

impl OmegaDiagonal {
    pub fn new(p: usize, coeffs: BTreeMap<PauliMultiIndex, f64>) -> Result<Self> {
        if p < 1 || p > MAX_QUBITS_PER_PARTY {
            return Err(Error::InvalidArgument(format!(
                "party qubit count must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
            )));
        }
        for (idx, &v) in &coeffs {
            if idx.p() != p {
                return Err(Error::InvalidArgument(format!(
                    "index {idx} has length {}, expected {p}",
                    idx.p()
                )));
            }
            if idx.is_zero() {
                return Err(Error::InvalidArgument(
                    "the all-zero index is fixed to 1 and must not be stored".into(),
                ));
            }
            if !v.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "coefficient at {idx} is not finite"
                )));
            }
            if v.abs() > 1.0 + TOL_CONSTRUCTION {
                return Err(Error::NotAState(format!(
                    "|Omega_{idx}| = {} exceeds 1; no unit-trace positive operator carries \
                     such a coefficient",
                    v.abs()
                )));
            }
        }
        Ok(Self { p, coeffs })
    }

    /// The maximally mixed state: every nonzero coefficient vanishes.
    pub fn maximally_mixed(p: usize) -> Result<Self> {
        Self::new(p, BTreeMap::new())
    }

    /// `p = 1` convenience constructor from the coefficient triple
    /// `(Omega_11, Omega_22, Omega_33)`.
    pub fn from_triple(o11: f64, o22: f64, o33: f64) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (digit, v) in [(1u8, o11), (2, o22), (3, o33)] {
            coeffs.insert(PauliMultiIndex::new(&[digit])?, v);
        }
        Self::new(1, coeffs)
    }

    /// The coefficient triple at `p = 1`, absent entries reading as 0.
    pub fn triple(&self) -> Result<(f64, f64, f64)> {
        if self.p != 1 {
            return Err(Error::UnsupportedDimension(format!(
                "coefficient triple exists only at p = 1, got p = {}",
                self.p
            )));
        }
        let get = |d: u8| self.get(&PauliMultiIndex::new(&[d]).expect("valid digit"));
        Ok((get(1), get(2), get(3)))
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Coefficient lookup; the all-zero index reads 1, absent indices 0.
    pub fn get(&self, index: &PauliMultiIndex) -> f64 {
        assert_eq!(index.p(), self.p, "index length mismatch");
        if index.is_zero() {
            1.0
        } else {
            self.coeffs.get(index).copied().unwrap_or(0.0)
        }
    }

    /// Stored (nonzero-index) coefficients in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = (&PauliMultiIndex, f64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    /// Realize the dense `4^p x 4^p` density matrix. Hermitian with unit
    /// trace by construction; positivity depends on the coefficients and is
    /// checked separately by [`OmegaDiagonal::is_state`].
    pub fn to_density_matrix(&self) -> ComplexMatrix {
        let d = 1usize << self.p;
        let dim = d * d;
        let norm = 1.0 / dim as f64;
        let mut rho = ComplexMatrix::identity(dim).scale(norm);
        for (idx, v) in self.iter() {
            if v == 0.0 {
                continue;
            }
            let w = idx.epsilon_sign() * v * norm;
            let action = pauli_row_action(idx);
            // sigma_I (x) sigma_I has one nonzero per row; add it in place.
            for (ra, &(ca, va)) in action.iter().enumerate() {
                for (rb, &(cb, vb)) in action.iter().enumerate() {
                    rho[(ra * d + rb, ca * d + cb)] += va * vb * w;
                }
            }
        }
        rho
    }

    /// Extract diagonal coefficients from a density matrix, together with
    /// the largest cross-term modulus `max_{I != J} |tr(rho sigma_I (x) sigma_J)|`.
    ///
    /// A Bell diagonal state has vanishing cross terms, so the residual
    /// measures how far `rho` is from that family; the round trip through
    /// [`OmegaDiagonal::to_density_matrix`] reproduces `rho` whenever the
    /// residual is negligible.
    pub fn from_density(rho: &ComplexMatrix, p: usize) -> Result<(Self, f64)> {
        if p < 1 || p > MAX_QUBITS_PER_PARTY {
            return Err(Error::InvalidArgument(format!(
                "party qubit count must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
            )));
        }
        let dim = 1usize << (2 * p);
        if rho.dim() != dim {
            return Err(Error::InvalidArgument(format!(
                "expected dimension {dim} = 4^{p}, got {}",
                rho.dim()
            )));
        }

        let all = PauliMultiIndex::enumerate_all(p)?;
        let actions: Vec<_> = all.iter().map(pauli_row_action).collect();

        let mut coeffs = BTreeMap::new();
        let mut residual = 0.0f64;
        for (i, idx_i) in all.iter().enumerate() {
            for (j, _idx_j) in all.iter().enumerate() {
                let t = crate::pauli::pauli_pair_trace(rho, &actions[i], &actions[j]);
                if i == j {
                    if !idx_i.is_zero() {
                        coeffs.insert(idx_i.clone(), idx_i.epsilon_sign() * t.re);
                    }
                } else {
                    residual = residual.max(t.norm());
                }
            }
        }
        Ok((Self::new(p, coeffs)?, residual))
    }

    /// `true` when the realized density matrix is positive semidefinite
    /// within [`TOL_EIGEN`]; unit trace and hermiticity hold by construction.
    pub fn is_state(&self) -> bool {
        is_psd(&self.to_density_matrix(), TOL_EIGEN).unwrap_or(false)
    }

    /// `tr(rho^2)` in closed form: `(1 + sum_{I != 0} Omega_I^2) / 4^p`.
    pub fn purity(&self) -> f64 {
        let sum_sq: f64 = self.iter().map(|(_, v)| v * v).sum();
        (1.0 + sum_sq) / (1usize << (2 * self.p)) as f64
    }
}

/// Bell-basis eigenvalues of a `p = 1` Bell diagonal state, in the fixed
/// order `(Phi+, Phi-, Psi+, Psi-)`.
///
/// The type admits any `p` (a probability vector of length `4^p`), but no
/// basis ordering is defined beyond `p = 1`, so conversions to and from
/// `Omega` coefficients are `p = 1` only.
#[derive(Clone, Debug, PartialEq)]
pub struct BellSpectrum {
    p: usize,
    lambdas: Vec<f64>,
}

impl BellSpectrum {
    pub fn new(p: usize, lambdas: Vec<f64>) -> Result<Self> {
        if p < 1 || p > MAX_QUBITS_PER_PARTY {
            return Err(Error::InvalidArgument(format!(
                "party qubit count must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
            )));
        }
        let expected = 1usize << (2 * p);
        if lambdas.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "expected {expected} eigenvalues for p = {p}, got {}",
                lambdas.len()
            )));
        }
        if let Some(&bad) = lambdas.iter().find(|&&l| !(l >= -TOL_CONSTRUCTION)) {
            return Err(Error::NotAState(format!(
                "eigenvalue {bad} is negative"
            )));
        }
        let sum: f64 = lambdas.iter().sum();
        if (sum - 1.0).abs() > 1e-10 {
            return Err(Error::NotAState(format!(
                "eigenvalues sum to {sum}, expected 1"
            )));
        }
        Ok(Self { p, lambdas })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Invert the `p = 1` linear system:
    /// `O11 = 2(l1 + l3) - 1`, `O22 = 2(l1 + l4) - 1`, `O33 = 2(l1 + l2) - 1`.
    pub fn to_omega(&self) -> Result<OmegaDiagonal> {
        if self.p != 1 {
            return Err(Error::UnsupportedDimension(format!(
                "eigenvalue ordering is defined only at p = 1, got p = {}",
                self.p
            )));
        }
        let l = &self.lambdas;
        OmegaDiagonal::from_triple(
            2.0 * (l[0] + l[2]) - 1.0,
            2.0 * (l[0] + l[3]) - 1.0,
            2.0 * (l[0] + l[1]) - 1.0,
        )
    }
}

impl OmegaDiagonal {
    /// Evaluate the four `p = 1` Bell-basis eigenvalues.
    ///
    /// Fails with a not-a-state error (carrying the offending value) when
    /// any eigenvalue is negative beyond [`TOL_CONSTRUCTION`], i.e. when the
    /// coefficient triple lies outside the state tetrahedron.
    pub fn to_spectrum(&self) -> Result<BellSpectrum> {
        let (o11, o22, o33) = self.triple()?;
        let lambdas = vec![
            0.25 * (1.0 + o11 + o22 + o33),
            0.25 * (1.0 - o11 - o22 + o33),
            0.25 * (1.0 + o11 - o22 - o33),
            0.25 * (1.0 - o11 + o22 - o33),
        ];
        if let Some((i, &bad)) = lambdas
            .iter()
            .enumerate()
            .find(|(_, &l)| l < -TOL_CONSTRUCTION)
        {
            return Err(Error::NotAState(format!(
                "Bell-basis eigenvalue lambda_{} = {bad} is negative",
                i + 1
            )));
        }
        BellSpectrum::new(1, lambdas)
    }
}
