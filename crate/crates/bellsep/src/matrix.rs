//! Dense complex matrices and the small amount of linear algebra the rest of
//! the crate needs: Kronecker products, a Hermitian eigensolver, positivity
//! tests, and the partial transpose.
//!
//! Bipartite operators use A-major row ordering throughout: for parties of
//! dimension `d = 2^p` each, the row index is `a * d + b` with `a` the
//! A-party basis index and `b` the B-party basis index. The partial
//! transpose below is only correct under this convention.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::TOL_HERMITIAN;

/// Maximum number of cyclic Jacobi sweeps before giving up.
const MAX_JACOBI_SWEEPS: usize = 100;

/// A dense square matrix of complex entries, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// All-zero `dim x dim` matrix.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    /// Identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            m[(r, r)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from a row-major slice of entries; `entries.len()` must be a
    /// perfect square.
    pub fn from_rows(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(Self {
            dim,
            data: entries.to_vec(),
        })
    }

    /// Outer product `|v><v|` of a complex vector with itself.
    pub fn projector(v: &[Complex64]) -> Self {
        let dim = v.len();
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = v[r] * v[c].conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m[(r, c)] = self[(c, r)].conj();
            }
        }
        m
    }

    /// Plain transpose.
    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m[(r, c)] = self[(c, r)];
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|r| self[(r, r)]).sum()
    }

    /// Multiply every entry by a real scalar.
    pub fn scale(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Largest elementwise deviation from the conjugate transpose.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                let d = (self[(r, c)] - self[(c, r)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_residual() <= tol
    }

    /// Largest entrywise modulus of the difference `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for r in 0..self.dim {
            write!(f, "  ")?;
            for c in 0..self.dim {
                let z = self[(r, c)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }
}

/// Kronecker product: `out[(a1*db + b1, a2*db + b2)] = a[(a1,a2)] * b[(b1,b2)]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = ComplexMatrix::zeros(da * db);
    for a1 in 0..da {
        for a2 in 0..da {
            let za = a[(a1, a2)];
            if za.norm_sqr() == 0.0 {
                continue;
            }
            for b1 in 0..db {
                for b2 in 0..db {
                    out[(a1 * db + b1, a2 * db + b2)] = za * b[(b1, b2)];
                }
            }
        }
    }
    out
}

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic Jacobi
/// rotations on the complex matrix.
///
/// Sweeps run until every off-diagonal modulus drops below `tol`. The input
/// must be Hermitian within [`TOL_HERMITIAN`]; the strictly lower triangle is
/// reconstructed from the upper one, so small asymmetries do not accumulate.
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "sweep tolerance must be positive, got {tol}"
        )));
    }
    let residual = m.hermiticity_residual();
    if residual > TOL_HERMITIAN {
        return Err(Error::InvalidArgument(format!(
            "matrix is not Hermitian (residual {residual:.3e})"
        )));
    }

    let n = m.dim();
    // Symmetrized working copy: exact Hermitian, real diagonal.
    let mut a = ComplexMatrix::zeros(n);
    for r in 0..n {
        a[(r, r)] = Complex64::new(m[(r, r)].re, 0.0);
        for c in (r + 1)..n {
            let z = (m[(r, c)] + m[(c, r)].conj()) * 0.5;
            a[(r, c)] = z;
            a[(c, r)] = z.conj();
        }
    }

    for _sweep in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0f64;
        for r in 0..n {
            for c in (r + 1)..n {
                off = off.max(a[(r, c)].norm());
            }
        }
        if off < tol {
            let mut eigs: Vec<f64> = (0..n).map(|r| a[(r, r)].re).collect();
            eigs.sort_by(f64::total_cmp);
            return Ok(eigs);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[(p, q)].norm() >= tol {
                    jacobi_rotate(&mut a, p, q);
                }
            }
        }
    }

    Err(Error::NumericFailure(format!(
        "Jacobi sweep did not converge below {tol:.3e} in {MAX_JACOBI_SWEEPS} sweeps"
    )))
}

/// One complex Jacobi rotation zeroing `a[(p, q)]`.
///
/// Writes `a <- V! a V` where `V` is the identity outside rows/cols `p`, `q`
/// and `V[(p,p)] = c`, `V[(p,q)] = -s e^{i alpha}`, `V[(q,p)] = s e^{-i alpha}`,
/// `V[(q,q)] = c`, with `alpha = arg a[(p,q)]` and real `c`, `s`.
fn jacobi_rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let w = apq.norm();
    if w == 0.0 {
        return;
    }
    let phase = apq / w; // e^{i alpha}
    let d1 = a[(p, p)].re;
    let d2 = a[(q, q)].re;

    // Rotation angle for the real 2x2 block [[d1, w], [w, d2]].
    let theta = (d1 - d2) / (2.0 * w);
    let t = {
        let sgn = if theta >= 0.0 { 1.0 } else { -1.0 };
        sgn / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.dim();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = akp * c + akq * (s * phase.conj());
        let new_kq = akq * c - akp * (s * phase);
        a[(k, p)] = new_kp;
        a[(p, k)] = new_kp.conj();
        a[(k, q)] = new_kq;
        a[(q, k)] = new_kq.conj();
    }

    let new_pp = c * c * d1 + 2.0 * c * s * w + s * s * d2;
    let new_qq = s * s * d1 - 2.0 * c * s * w + c * c * d2;
    a[(p, p)] = Complex64::new(new_pp, 0.0);
    a[(q, q)] = Complex64::new(new_qq, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
}

/// `true` when the smallest eigenvalue of a Hermitian matrix is `>= -tol`.
pub fn is_psd(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    let eigs = hermitian_eigenvalues(m, PSD_SWEEP_TOL)?;
    Ok(eigs[0] >= -tol)
}

/// Sweep threshold used when eigenvalues feed a positivity decision. Finer
/// than [`TOL_EIGEN`] so the classification tolerance dominates.
const PSD_SWEEP_TOL: f64 = 1e-13;

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(m: &ComplexMatrix) -> Result<f64> {
    let eigs = hermitian_eigenvalues(m, PSD_SWEEP_TOL)?;
    Ok(eigs[0])
}

/// Transpose the B-party factor of a bipartite operator on `p` qubits per
/// party: `out[(a1*d + b2, a2*d + b1)] = rho[(a1*d + b1, a2*d + b2)]` with
/// `d = 2^p`.
pub fn partial_transpose(rho: &ComplexMatrix, p: usize) -> Result<ComplexMatrix> {
    if p < 1 || p > crate::MAX_QUBITS_PER_PARTY {
        return Err(Error::InvalidArgument(format!(
            "party qubit count must be in 1..={}, got {p}",
            crate::MAX_QUBITS_PER_PARTY
        )));
    }
    let d = 1usize << p;
    if rho.dim() != d * d {
        return Err(Error::InvalidArgument(format!(
            "expected dimension {} = 4^{p}, got {}",
            d * d,
            rho.dim()
        )));
    }
    let mut out = ComplexMatrix::zeros(d * d);
    for a1 in 0..d {
        for b1 in 0..d {
            for a2 in 0..d {
                for b2 in 0..d {
                    out[(a1 * d + b2, a2 * d + b1)] = rho[(a1 * d + b1, a2 * d + b2)];
                }
            }
        }
    }
    Ok(out)
}
