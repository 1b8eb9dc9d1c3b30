//! Stabilizer ground-state approximation for qubit Hamiltonians with
//! per-qubit `R_y` gauging of the `{X, Z}` operator frame.
//!
//! A Hamiltonian is a real-weighted [`PauliSum`]. The plain stabilizer
//! approximation picks a commuting, sign-consistent subset of its terms
//! ([`greedy_select`]) and scores the stabilized subspace
//! ([`stabilizer_energy`]). Gauging rotates each qubit's frame first
//! ([`rotate_frame`]), either with fixed angles, qubit by qubit
//! ([`sequential::sweep`]), or with angles found by a derivative-free search
//! ([`optimize`]). [`exact`] supplies dense reference energies.

pub mod chsh;
pub mod error;
pub mod exact;
pub mod gauge;
pub mod hamfile;
pub mod models;
pub mod optimizer;
pub mod pauli;
pub mod report;
pub mod sequential;
pub mod stabilizer;

pub use chsh::{
    classical_bias, game_to_hamiltonian, quantum_bias, winning_probability, QuantumStrategy,
    XorGameRule,
};
pub use error::{Error, Result};
pub use exact::{ground_energy, projector_energy, to_dense, DenseOperator, ExactOracle};
pub use gauge::{compose, conjugate_factor, rotate_frame, GaugeAngles};
pub use hamfile::{parse_hamiltonian, serialize_hamiltonian};
pub use models::{build_model, ModelSpec};
pub use optimizer::{objective, optimize, OptResult, OptimizerConfig};
pub use pauli::{
    canonicalize, coeff_norm_sq, commutes, multiply, parse_pauli, Pauli, PauliString, PauliSum,
    PauliTerm, Phase,
};
pub use report::{Method, Report};
pub use sequential::{reduce, sweep, PrimedAxis, QubitChoice, SweepMode, SweepTrace};
pub use stabilizer::{
    gauged_energy, greedy_select, membership, stabilizer_energy, Extension, GaugedEnergy,
    Membership, Rejection, Sign, SignedPauli, StabilizerSet,
};
