//! Built-in Hamiltonians.
//!
//! The H₂ entries are fixed illustrative coefficients for the parity-encoded
//! two-qubit molecule in three regimes, not values derived from a geometry.

use std::str::FromStr;

use crate::chsh::{game_to_hamiltonian, XorGameRule};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliSum, PauliTerm};

#[derive(Clone, Debug, PartialEq)]
pub enum ModelSpec {
    /// `Σ_edges J Z_i Z_j + Σ_i (g_x X_i + g_z Z_i)`; edges are 1-based.
    Ising {
        n: usize,
        edges: Vec<(usize, usize)>,
        j: f64,
        g_x: f64,
        g_z: f64,
    },
    Chsh,
    /// `2 I⊗Z − 2 Z⊗I`
    H2Bound,
    /// `2 X⊗X`
    H2Asym,
    /// `I⊗Z − Z⊗I + 2 X⊗X`
    H2Mid,
}

impl ModelSpec {
    /// Open chain `1-2, 2-3, …, (n-1)-n`.
    pub fn ising_chain(n: usize, j: f64, g_x: f64, g_z: f64) -> Self {
        ModelSpec::Ising {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
            j,
            g_x,
            g_z,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ModelSpec::Ising { .. } => "ising",
            ModelSpec::Chsh => "chsh",
            ModelSpec::H2Bound => "h2_bound",
            ModelSpec::H2Asym => "h2_asym",
            ModelSpec::H2Mid => "h2_mid",
        }
    }

    pub fn build(&self) -> Result<PauliSum> {
        build_model(self)
    }
}

/// Parses the parameterless kinds; `ising` gets the extremal-field chain on
/// two qubits (`J = 0`, `g_x = g_z = 1`).
impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ising" => Ok(ModelSpec::ising_chain(2, 0.0, 1.0, 1.0)),
            "chsh" => Ok(ModelSpec::Chsh),
            "h2_bound" => Ok(ModelSpec::H2Bound),
            "h2_asym" => Ok(ModelSpec::H2Asym),
            "h2_mid" => Ok(ModelSpec::H2Mid),
            other => Err(Error::InvalidInput(format!("unknown model {other:?}"))),
        }
    }
}

fn literal(pairs: &[(f64, &str)]) -> PauliSum {
    PauliSum::from_pairs(pairs).expect("built-in model")
}

pub fn build_model(spec: &ModelSpec) -> Result<PauliSum> {
    match spec {
        ModelSpec::Ising {
            n,
            edges,
            j,
            g_x,
            g_z,
        } => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidInput("ising model needs n >= 1".into()));
            }
            let mut terms = Vec::new();
            for &(a, b) in edges {
                if a == 0 || b == 0 || a > n || b > n || a == b {
                    return Err(Error::InvalidInput(format!(
                        "invalid edge ({a}, {b}) for {n} qubits"
                    )));
                }
                let mut s = PauliString::identity(n);
                s.set(a - 1, Pauli::Z);
                s.set(b - 1, Pauli::Z);
                terms.push(PauliTerm::new(*j, s));
            }
            for q in 0..n {
                terms.push(PauliTerm::new(*g_x, PauliString::single(n, q, Pauli::X)));
                terms.push(PauliTerm::new(*g_z, PauliString::single(n, q, Pauli::Z)));
            }
            Ok(PauliSum::from_terms(n, terms)?.canonical())
        }
        ModelSpec::Chsh => Ok(game_to_hamiltonian(&XorGameRule::chsh())),
        ModelSpec::H2Bound => Ok(literal(&[(2.0, "IZ"), (-2.0, "ZI")])),
        ModelSpec::H2Asym => Ok(literal(&[(2.0, "XX")])),
        ModelSpec::H2Mid => Ok(literal(&[(1.0, "IZ"), (-1.0, "ZI"), (2.0, "XX")])),
    }
}
