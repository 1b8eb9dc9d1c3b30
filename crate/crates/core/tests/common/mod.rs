#![allow(dead_code)]

use gaugestab::{GaugeAngles, Pauli, PauliString, PauliSum, PauliTerm};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_string(rng: &mut impl Rng, n: usize) -> PauliString {
    let factors: Vec<Pauli> = (0..n)
        .map(|_| [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][rng.random_range(0..4)])
        .collect();
    PauliString::from_factors(&factors)
}

/// Random canonical sum on 1..=max_n qubits with 1..=max_terms terms.
pub fn random_hamiltonian(rng: &mut impl Rng, max_n: usize, max_terms: usize) -> PauliSum {
    loop {
        let n = rng.random_range(1..=max_n);
        let k = rng.random_range(1..=max_terms);
        let terms = (0..k)
            .map(|_| PauliTerm::new(rng.random_range(-2.0..2.0), random_string(rng, n)))
            .collect();
        let h = PauliSum::from_terms(n, terms).unwrap().canonical();
        if !h.is_empty() {
            return h;
        }
    }
}

pub fn random_angles(rng: &mut impl Rng, n: usize) -> GaugeAngles {
    GaugeAngles::new((0..n).map(|_| rng.random_range(0.0..TAU)).collect())
}

/// Every string on `n` qubits.
pub fn all_strings(n: usize) -> Vec<PauliString> {
    (0..4usize.pow(n as u32))
        .map(|mut k| {
            let factors: Vec<Pauli> = (0..n)
                .map(|_| {
                    let f = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][k % 4];
                    k /= 4;
                    f
                })
                .collect();
            PauliString::from_factors(&factors)
        })
        .collect()
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Textbook single-qubit matrices, built independently of the crate.
pub fn single(p: Pauli) -> DMatrix<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    match p {
        Pauli::I => DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(1.0)]),
        Pauli::X => DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]),
        Pauli::Y => DMatrix::from_row_slice(2, 2, &[c(0.0), -i, i, c(0.0)]),
        Pauli::Z => DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]),
    }
}

/// Kronecker product with qubit 0 leftmost.
pub fn kron_string(p: &PauliString) -> DMatrix<Complex64> {
    p.factors()
        .fold(DMatrix::from_element(1, 1, c(1.0)), |acc, f| acc.kronecker(&single(f)))
}

pub fn kron_sum(h: &PauliSum) -> DMatrix<Complex64> {
    let dim = 1 << h.num_qubits();
    h.iter().fold(DMatrix::zeros(dim, dim), |acc, t| acc + kron_string(&t.string) * c(t.coeff))
}

pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().fold(0.0, |a, z| a.max(z.norm()))
}

/// `R_y(θ) = cos(θ/2) I − i sin(θ/2) Y`
pub fn ry(theta: f64) -> DMatrix<Complex64> {
    let (s, co) = (theta / 2.0).sin_cos();
    DMatrix::from_row_slice(2, 2, &[c(co), c(-s), c(s), c(co)])
}
