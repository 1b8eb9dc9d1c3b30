//! Real-weighted sums of Pauli strings.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::string::{parse_pauli, PauliString};
use crate::error::{Error, Result};

/// Coefficients with magnitude below this are dropped on canonicalization.
pub const DEFAULT_MERGE_EPS: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct PauliTerm {
    pub coeff: f64,
    pub string: PauliString,
}

impl PauliTerm {
    pub fn new(coeff: f64, string: PauliString) -> Self {
        PauliTerm { coeff, string }
    }
}

/// Canonical term order: descending `|coeff|`, then ascending string.
pub fn canonical_order(a: &PauliTerm, b: &PauliTerm) -> Ordering {
    b.coeff
        .abs()
        .total_cmp(&a.coeff.abs())
        .then_with(|| a.string.cmp(&b.string))
}

/// A Hamiltonian `Σ c_P P` over `n` qubits.
///
/// Values produced by this crate are canonical unless built through
/// [`PauliSum::from_terms`].
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: Vec<PauliTerm>,
}

impl PauliSum {
    pub fn zero(n: usize) -> Self {
        PauliSum { n, terms: Vec::new() }
    }

    /// Wrap terms as given, checking only that every string has `n` qubits.
    pub fn from_terms(n: usize, terms: Vec<PauliTerm>) -> Result<Self> {
        for t in &terms {
            if t.string.num_qubits() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: t.string.num_qubits(),
                });
            }
            if !t.coeff.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "non-finite coefficient for {}",
                    t.string
                )));
            }
        }
        Ok(PauliSum { n, terms })
    }

    /// Canonical sum from `(coeff, letters)` pairs. All strings must agree in length.
    pub fn from_pairs(pairs: &[(f64, &str)]) -> Result<Self> {
        let terms = pairs
            .iter()
            .map(|&(c, s)| Ok(PauliTerm::new(c, parse_pauli(s)?)))
            .collect::<Result<Vec<_>>>()?;
        let n = terms
            .first()
            .map(|t| t.string.num_qubits())
            .ok_or_else(|| Error::InvalidInput("no terms".into()))?;
        Ok(PauliSum::from_terms(n, terms)?.canonical())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PauliTerm> {
        self.terms.iter()
    }

    /// Merge duplicates, drop `|c| < eps`, sort canonically.
    pub fn canonicalize(&self, eps: f64) -> PauliSum {
        let mut merged: BTreeMap<PauliString, f64> = BTreeMap::new();
        for t in &self.terms {
            *merged.entry(t.string.clone()).or_insert(0.0) += t.coeff;
        }
        let mut terms: Vec<PauliTerm> = merged
            .into_iter()
            .filter(|(_, c)| c.abs() >= eps && *c != 0.0)
            .map(|(s, c)| PauliTerm::new(c, s))
            .collect();
        terms.sort_by(canonical_order);
        PauliSum { n: self.n, terms }
    }

    pub fn canonical(&self) -> PauliSum {
        self.canonicalize(DEFAULT_MERGE_EPS)
    }

    pub fn is_canonical(&self, eps: f64) -> bool {
        self.terms.iter().all(|t| t.coeff.abs() >= eps)
            && self
                .terms
                .windows(2)
                .all(|w| canonical_order(&w[0], &w[1]) == Ordering::Less)
    }

    /// `Σ c_P²`, which is `2^{-n}` times the squared Frobenius norm.
    pub fn coeff_norm_sq(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff * t.coeff).sum()
    }

    /// `Σ |c_P|`, an upper bound on the spectral norm.
    pub fn coeff_abs_sum(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.abs()).sum()
    }

    /// Coefficient of `string`, zero when absent.
    pub fn coeff_of(&self, string: &PauliString) -> f64 {
        self.terms
            .iter()
            .filter(|t| &t.string == string)
            .map(|t| t.coeff)
            .sum()
    }

    /// Coefficient of the identity term.
    pub fn constant(&self) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.string.is_identity())
            .map(|t| t.coeff)
            .sum()
    }

    pub fn scale(&self, factor: f64) -> PauliSum {
        let terms = self
            .terms
            .iter()
            .map(|t| PauliTerm::new(t.coeff * factor, t.string.clone()))
            .collect();
        PauliSum { n: self.n, terms }.canonical()
    }

    /// Largest coefficient difference against `other`, matching terms by string.
    pub fn max_coeff_diff(&self, other: &PauliSum) -> f64 {
        let mut diff: BTreeMap<&PauliString, f64> = BTreeMap::new();
        for t in &self.terms {
            *diff.entry(&t.string).or_insert(0.0) += t.coeff;
        }
        for t in &other.terms {
            *diff.entry(&t.string).or_insert(0.0) -= t.coeff;
        }
        diff.values().fold(0.0, |m, d| m.max(d.abs()))
    }
}

/// Free-function form of [`PauliSum::canonicalize`].
pub fn canonicalize(h: &PauliSum, eps: f64) -> PauliSum {
    h.canonicalize(eps)
}

pub fn coeff_norm_sq(h: &PauliSum) -> f64 {
    h.coeff_norm_sq()
}

impl<'a> IntoIterator for &'a PauliSum {
    type Item = &'a PauliTerm;
    type IntoIter = std::slice::Iter<'a, PauliTerm>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let sep = match (i, t.coeff < 0.0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let label = if self.n == 0 { "I".to_string() } else { t.string.to_string() };
            write!(f, "{sep}{}*{label}", t.coeff.abs())?;
        }
        Ok(())
    }
}
