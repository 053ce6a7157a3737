//! State description files.
//!
//! A file holds a single JSON object with the party size and exactly one
//! coefficient block:
//!
//! ```json
//! {"p": 1, "lambda": [0.25, 0.25, 0.25, 0.25]}
//! {"p": 2, "omega": {"13": 0.4, "22": -0.1}}
//! ```
//!
//! `lambda` lists the four Bell-basis eigenvalues in the fixed order
//! (Phi+, Phi-, Psi+, Psi-) and is accepted at `p = 1` only. `omega` maps
//! index strings (exactly `p` characters from "0123", not all zero) to real
//! coefficients.

use std::collections::BTreeMap;
use std::path::Path;

use bellsep::bell::{BellSpectrum, OmegaDiagonal};
use bellsep::pauli::PauliMultiIndex;
use bellsep::MAX_QUBITS_PER_PARTY;

/// Tolerance on the eigenvalue sum of a `lambda` block.
const LAMBDA_SUM_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub enum StateBody {
    Lambda(Vec<f64>),
    Omega(BTreeMap<String, f64>),
}

/// A parsed, shape-validated state description.
#[derive(Clone, Debug)]
pub struct StateSpec {
    pub p: usize,
    pub body: StateBody,
}

impl StateSpec {
    /// Convert to the coefficient representation used by the analyzers.
    pub fn to_omega(&self) -> Result<OmegaDiagonal, String> {
        match &self.body {
            StateBody::Lambda(l) => BellSpectrum::new(1, l.clone())
                .and_then(|s| s.to_omega())
                .map_err(|e| e.to_string()),
            StateBody::Omega(map) => {
                let mut coeffs = BTreeMap::new();
                for (key, &v) in map {
                    let idx: PauliMultiIndex = key.parse().map_err(|e| format!("{e}"))?;
                    coeffs.insert(idx, v);
                }
                OmegaDiagonal::new(self.p, coeffs).map_err(|e| e.to_string())
            }
        }
    }
}

/// Read and validate a state description file.
pub fn load(path: &Path) -> Result<StateSpec, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<StateSpec, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    let obj = value
        .as_object()
        .ok_or("the state description must be a JSON object")?;

    for key in obj.keys() {
        if !matches!(key.as_str(), "p" | "lambda" | "omega") {
            return Err(format!("unknown key {key:?}; expected p, lambda, or omega"));
        }
    }

    let p = obj
        .get("p")
        .and_then(|v| v.as_u64())
        .ok_or("missing or non-integer \"p\"")? as usize;
    if p < 1 || p > MAX_QUBITS_PER_PARTY {
        return Err(format!("\"p\" must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"));
    }

    let lambda = obj.get("lambda");
    let omega = obj.get("omega");
    match (lambda, omega) {
        (Some(_), Some(_)) => Err("provide exactly one of \"lambda\" and \"omega\", not both".into()),
        (None, None) => Err("provide exactly one of \"lambda\" and \"omega\"".into()),
        (Some(l), None) => {
            if p != 1 {
                return Err("\"lambda\" input is defined only at p = 1".into());
            }
            let arr = l.as_array().ok_or("\"lambda\" must be an array")?;
            if arr.len() != 4 {
                return Err(format!("\"lambda\" must list 4 eigenvalues, got {}", arr.len()));
            }
            let values: Vec<f64> = arr
                .iter()
                .map(|v| v.as_f64().ok_or("\"lambda\" entries must be numbers"))
                .collect::<Result<_, _>>()?;
            let sum: f64 = values.iter().sum();
            if (sum - 1.0).abs() > LAMBDA_SUM_TOL {
                return Err(format!("\"lambda\" entries sum to {sum}, expected 1"));
            }
            Ok(StateSpec {
                p,
                body: StateBody::Lambda(values),
            })
        }
        (None, Some(o)) => {
            let map = o.as_object().ok_or("\"omega\" must be an object")?;
            let mut coeffs = BTreeMap::new();
            for (key, v) in map {
                if key.len() != p {
                    return Err(format!(
                        "index {key:?} has {} characters, expected {p}",
                        key.len()
                    ));
                }
                if !key.chars().all(|ch| ('0'..='3').contains(&ch)) {
                    return Err(format!("index {key:?} contains a character outside \"0123\""));
                }
                if key.chars().all(|ch| ch == '0') {
                    return Err(format!(
                        "index {key:?} names the identity coefficient, which is fixed to 1"
                    ));
                }
                let x = v
                    .as_f64()
                    .ok_or_else(|| format!("coefficient at {key:?} must be a number"))?;
                coeffs.insert(key.clone(), x);
            }
            Ok(StateSpec {
                p,
                body: StateBody::Omega(coeffs),
            })
        }
    }
}
