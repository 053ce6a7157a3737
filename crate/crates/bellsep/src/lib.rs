//! Separability analysis for bipartite Bell diagonal states on `p` qubits
//! per party.
//!
//! A Bell diagonal state is fixed by the real coefficients `Omega_I` of its
//! expansion over matched Pauli tensor pairs `sigma_I (x) sigma_I`, with the
//! identity coefficient normalized to 1. This crate models those states
//! ([`bell`]), decides or bounds their separability through the coefficient
//! sum `S = sum_{I != 0} |Omega_I|` ([`separability`]), builds explicit
//! separable decompositions at `p = 1`, cross-checks everything against an
//! independent partial-transpose analysis, and runs randomized audits of the
//! inequalities behind the criterion ([`ensemble`]).
//!
//! The criterion: a separable state always satisfies `S <= 2^p - 1`; at
//! `p = 1` the bound `S <= 1` is also sufficient, and a four-term separable
//! decomposition certifies it constructively.

pub mod bell;
pub mod ensemble;
mod error;
pub mod matrix;
pub mod pauli;
pub mod separability;

pub use error::{Error, Result};

/// Hard cap on qubits per party; `4^6 = 4096` is the largest operator
/// dimension the dense routines are expected to handle interactively.
pub const MAX_QUBITS_PER_PARTY: usize = 6;

/// Tolerance for construction and identity checks (exact algebra in f64).
pub const TOL_CONSTRUCTION: f64 = 1e-12;

/// Tolerance for eigenvalue and positive-semidefiniteness checks.
pub const TOL_EIGEN: f64 = 1e-10;

/// Tolerance for classifying a state as sitting on the separability
/// boundary.
pub const TOL_BOUNDARY: f64 = 1e-9;

/// Hermiticity residual accepted by the eigensolver.
pub const TOL_HERMITIAN: f64 = 1e-10;
