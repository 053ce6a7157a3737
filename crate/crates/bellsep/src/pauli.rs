//! The Pauli tensor basis on `p` qubits and coefficient extraction against
//! it.
//!
//! A multi-index `I = (i_1, ..., i_p)` with digits in `{0, 1, 2, 3}` names
//! the operator `sigma_{i_1} (x) ... (x) sigma_{i_p}` acting on one party.
//! Every such operator is Hermitian, squares to the identity, and is
//! traceless unless all digits are zero, which makes the family an
//! orthogonal basis: `tr(sigma_I sigma_J) = 2^p delta_IJ`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{kron, ComplexMatrix};
use crate::MAX_QUBITS_PER_PARTY;

/// A length-`p` word over `{0, 1, 2, 3}` naming one Pauli tensor factor.
///
/// Ordering is lexicographic on the digits, so the all-zero index sorts
/// first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliMultiIndex {
    digits: Vec<u8>,
}

impl PauliMultiIndex {
    pub fn new(digits: &[u8]) -> Result<Self> {
        if digits.is_empty() || digits.len() > MAX_QUBITS_PER_PARTY {
            return Err(Error::InvalidArgument(format!(
                "multi-index length must be in 1..={MAX_QUBITS_PER_PARTY}, got {}",
                digits.len()
            )));
        }
        if let Some(&d) = digits.iter().find(|&&d| d > 3) {
            return Err(Error::InvalidArgument(format!(
                "multi-index digits must be in 0..=3, got {d}"
            )));
        }
        Ok(Self {
            digits: digits.to_vec(),
        })
    }

    /// The all-zero index of length `p` (the identity factor).
    pub fn zero(p: usize) -> Result<Self> {
        Self::new(&vec![0u8; p])
    }

    pub fn p(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Number of digits equal to 2; the parity of this count fixes the sign
    /// a transpose (or the diagonal expansion) attaches to the factor,
    /// because only `sigma_2` is antisymmetric.
    pub fn epsilon(&self) -> u32 {
        self.digits.iter().filter(|&&d| d == 2).count() as u32
    }

    /// Sign `(-1)^epsilon(I)`.
    pub fn epsilon_sign(&self) -> f64 {
        if self.epsilon() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// All `4^p` multi-indices of length `p` in lexicographic order.
    pub fn enumerate_all(p: usize) -> Result<Vec<Self>> {
        if p < 1 || p > MAX_QUBITS_PER_PARTY {
            return Err(Error::InvalidArgument(format!(
                "multi-index length must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
            )));
        }
        let count = 1usize << (2 * p);
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            let mut digits = vec![0u8; p];
            let mut rest = k;
            for m in (0..p).rev() {
                digits[m] = (rest & 3) as u8;
                rest >>= 2;
            }
            out.push(Self { digits });
        }
        Ok(out)
    }
}

impl fmt::Display for PauliMultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliMultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .filter(|&d| d <= 3)
                    .map(|d| d as u8)
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "index string {s:?} contains a character outside \"0123\""
                        ))
                    })
            })
            .collect::<Result<_>>()?;
        Self::new(&digits)
    }
}

/// One of the four single-qubit Pauli matrices, `sigma_0` being the identity.
pub fn pauli_matrix(i: u8) -> Result<ComplexMatrix> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let entries = match i {
        0 => [one, zero, zero, one],
        1 => [zero, one, one, zero],
        2 => [zero, Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), zero],
        3 => [one, zero, zero, -one],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "Pauli index must be in 0..=3, got {i}"
            )))
        }
    };
    ComplexMatrix::from_rows(2, &entries)
}

/// The dense `2^p x 2^p` tensor factor named by a multi-index.
pub fn pauli_tensor(index: &PauliMultiIndex) -> ComplexMatrix {
    let mut out = pauli_matrix(index.digits()[0]).expect("digit is validated");
    for &d in &index.digits()[1..] {
        out = kron(&out, &pauli_matrix(d).expect("digit is validated"));
    }
    out
}

/// Sparse view of a Pauli tensor: each row `r` holds exactly one nonzero,
/// at column `action[r].0` with value `action[r].1`.
pub(crate) fn pauli_row_action(index: &PauliMultiIndex) -> Vec<(usize, Complex64)> {
    // Per-digit single-qubit actions: row bit -> (column bit, value).
    fn digit_action(d: u8, bit: usize) -> (usize, Complex64) {
        match (d, bit) {
            (0, b) => (b, Complex64::new(1.0, 0.0)),
            (1, b) => (1 - b, Complex64::new(1.0, 0.0)),
            (2, 0) => (1, Complex64::new(0.0, -1.0)),
            (2, _) => (0, Complex64::new(0.0, 1.0)),
            (3, 0) => (0, Complex64::new(1.0, 0.0)),
            (3, _) => (1, Complex64::new(-1.0, 0.0)),
            _ => unreachable!("digit is validated"),
        }
    }

    let p = index.p();
    let dim = 1usize << p;
    let mut action = Vec::with_capacity(dim);
    for row in 0..dim {
        let mut col = 0usize;
        let mut val = Complex64::new(1.0, 0.0);
        for (m, &d) in index.digits().iter().enumerate() {
            let bit = (row >> (p - 1 - m)) & 1;
            let (cbit, v) = digit_action(d, bit);
            col |= cbit << (p - 1 - m);
            val *= v;
        }
        action.push((col, val));
    }
    action
}

/// Coefficient of `sigma_I (x) sigma_J` in the Pauli expansion of a
/// bipartite operator: `tr(rho (sigma_I (x) sigma_J))`.
///
/// Returns the real part together with the modulus of the imaginary part;
/// the latter vanishes (to rounding) whenever `rho` is Hermitian and serves
/// as a validation residual.
pub fn hs_coefficient(
    rho: &ComplexMatrix,
    i: &PauliMultiIndex,
    j: &PauliMultiIndex,
) -> Result<(f64, f64)> {
    if i.p() != j.p() {
        return Err(Error::InvalidArgument(format!(
            "multi-index lengths differ: {} vs {}",
            i.p(),
            j.p()
        )));
    }
    let p = i.p();
    let dim = 1usize << (2 * p);
    if rho.dim() != dim {
        return Err(Error::InvalidArgument(format!(
            "expected a {dim}x{dim} operator for p = {p}, got dimension {}",
            rho.dim()
        )));
    }
    let t = pauli_pair_trace(rho, &pauli_row_action(i), &pauli_row_action(j));
    Ok((t.re, t.im.abs()))
}

/// `tr(rho (sigma_I (x) sigma_J))` computed from the sparse row actions;
/// every row of a Pauli tensor has a single nonzero, so the trace is a sum
/// of `4^p` products instead of a dense matrix product.
pub(crate) fn pauli_pair_trace(
    rho: &ComplexMatrix,
    action_a: &[(usize, Complex64)],
    action_b: &[(usize, Complex64)],
) -> Complex64 {
    let d = action_a.len();
    let mut t = Complex64::new(0.0, 0.0);
    for (row_a, &(col_a, va)) in action_a.iter().enumerate() {
        for (row_b, &(col_b, vb)) in action_b.iter().enumerate() {
            // tr(rho M) = sum over rows r of M: rho[col(r), r] * val(r).
            t += rho[(col_a * d + col_b, row_a * d + row_b)] * (va * vb);
        }
    }
    t
}
