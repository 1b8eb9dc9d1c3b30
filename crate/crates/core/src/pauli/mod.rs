//! Pauli string algebra and real-weighted Pauli sums.

mod string;
mod sum;

pub use string::{commutes, multiply, parse_pauli, Pauli, PauliString, Phase};
pub use sum::{
    canonical_order, canonicalize, coeff_norm_sq, PauliSum, PauliTerm, DEFAULT_MERGE_EPS,
};
