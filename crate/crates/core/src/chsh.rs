//! Two-player binary XOR games under the uniform question distribution.
//!
//! The players win on questions `(i, j)` when `a_i ⊕ b_j = f(i, j)`. In spin
//! form the bias is `(1/4) Σ (-1)^{f(i,j)} a_i b_j`, and the winning
//! probability is `1/2 + bias/2`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::exact::ExactOracle;
use crate::pauli::{Pauli, PauliString, PauliSum, PauliTerm};

/// The table `f(i, j)`, indexed `[i][j]`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct XorGameRule {
    pub table: [[bool; 2]; 2],
}

impl XorGameRule {
    /// `f(i, j) = i ∧ j`.
    pub fn chsh() -> Self {
        XorGameRule {
            table: [[false, false], [false, true]],
        }
    }

    pub fn constant(value: bool) -> Self {
        XorGameRule {
            table: [[value; 2]; 2],
        }
    }

    /// `f(i, j) = i ⊕ j`.
    pub fn xor() -> Self {
        XorGameRule {
            table: [[false, true], [true, false]],
        }
    }

    pub fn f(&self, i: usize, j: usize) -> bool {
        self.table[i][j]
    }

    /// `(-1)^{f(i,j)}`
    pub fn spin(&self, i: usize, j: usize) -> i64 {
        if self.f(i, j) {
            -1
        } else {
            1
        }
    }

    /// Every rule on two binary questions.
    pub fn all() -> impl Iterator<Item = XorGameRule> {
        (0u8..16).map(|bits| XorGameRule {
            table: [
                [bits & 1 != 0, bits & 2 != 0],
                [bits & 4 != 0, bits & 8 != 0],
            ],
        })
    }
}

/// Four binary digits `f(0,0) f(0,1) f(1,0) f(1,1)`, e.g. `"0001"` for CHSH.
impl FromStr for XorGameRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits: Vec<bool> = s
            .chars()
            .enumerate()
            .map(|(k, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::IllegalChar { position: k + 1, ch }),
            })
            .collect::<Result<_>>()?;
        if bits.len() != 4 {
            return Err(Error::InvalidInput(format!(
                "a rule has exactly four entries, got {}",
                bits.len()
            )));
        }
        Ok(XorGameRule {
            table: [[bits[0], bits[1]], [bits[2], bits[3]]],
        })
    }
}

impl fmt::Display for XorGameRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..2 {
            for j in 0..2 {
                write!(f, "{}", self.f(i, j) as u8)?;
            }
        }
        Ok(())
    }
}

/// Best deterministic strategy, as an exact rational.
pub fn classical_bias(rule: &XorGameRule) -> Rational64 {
    let spin = |bit: u8| if bit == 0 { 1i64 } else { -1 };
    let best = (0u8..16)
        .map(|s| {
            let a = [spin(s & 1), spin((s >> 1) & 1)];
            let b = [spin((s >> 2) & 1), spin((s >> 3) & 1)];
            (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| rule.spin(i, j) * a[i] * b[j])
                .sum::<i64>()
        })
        .max()
        .expect("sixteen strategies");
    Rational64::new(best, 4)
}

/// Single-qubit ±1-valued observables for both players on a shared EPR pair.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumStrategy {
    pub alice: [PauliSum; 2],
    pub bob: [PauliSum; 2],
}

impl QuantumStrategy {
    /// `A₀ = Z, A₁ = X, B₀ = (X+Z)/√2, B₁ = (Z−X)/√2`.
    pub fn chsh_optimal() -> Self {
        let one = |pairs: &[(f64, &str)]| PauliSum::from_pairs(pairs).expect("literal");
        QuantumStrategy {
            alice: [one(&[(1.0, "Z")]), one(&[(1.0, "X")])],
            bob: [
                one(&[(FRAC_1_SQRT_2, "X"), (FRAC_1_SQRT_2, "Z")]),
                one(&[(FRAC_1_SQRT_2, "Z"), (-FRAC_1_SQRT_2, "X")]),
            ],
        }
    }

    fn observables(&self) -> impl Iterator<Item = &PauliSum> {
        self.alice.iter().chain(self.bob.iter())
    }
}

fn dense(h: &PauliSum) -> Result<DMatrix<Complex64>> {
    Ok(ExactOracle::default().to_dense(h)?.matrix)
}

/// `(1/4) Σ (-1)^{f(i,j)} ⟨Φ| A_i ⊗ B_j |Φ⟩` on `|Φ⟩ = (|00⟩ + |11⟩)/√2`.
pub fn quantum_bias(rule: &XorGameRule, strategy: &QuantumStrategy) -> Result<f64> {
    for (k, obs) in strategy.observables().enumerate() {
        if obs.num_qubits() != 1 {
            return Err(Error::InvalidInput(format!(
                "observable {k} acts on {} qubits, expected 1",
                obs.num_qubits()
            )));
        }
        let m = dense(obs)?;
        let sq = &m * &m;
        let id = DMatrix::<Complex64>::identity(2, 2);
        if (sq - id).iter().any(|z| z.norm() > 1e-9) {
            return Err(Error::InvalidInput(format!(
                "observable {k} does not have eigenvalues in {{+1, -1}}"
            )));
        }
    }
    let amp = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let phi = nalgebra::DVector::from_vec(vec![amp, zero, zero, amp]);
    let mut bias = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let op = dense(&strategy.alice[i])?.kronecker(&dense(&strategy.bob[j])?);
            let value = phi.dotc(&(op * &phi)).re;
            bias += rule.spin(i, j) as f64 * value;
        }
    }
    Ok(bias / 4.0)
}

pub fn winning_probability(bias: f64) -> Result<f64> {
    if !(bias.abs() <= 1.0) {
        return Err(Error::InvalidInput(format!("bias {bias} outside [-1, 1]")));
    }
    Ok(0.5 + 0.5 * bias)
}

/// One term per question pair: X for question 0 and Z for question 1 on
/// each player's qubit, weighted by minus the spin of the expected answer.
pub fn game_to_hamiltonian(rule: &XorGameRule) -> PauliSum {
    let axis = |q: usize| if q == 0 { Pauli::X } else { Pauli::Z };
    let terms = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| {
            PauliTerm::new(
                -(rule.spin(i, j) as f64),
                PauliString::from_factors(&[axis(i), axis(j)]),
            )
        })
        .collect();
    PauliSum::from_terms(2, terms).expect("two-qubit terms").canonical()
}
