//! Dense reference computations for small systems.
//!
//! Basis index bit `n-1-q` holds qubit `q`, so qubit 0 is the most
//! significant tensor factor. A Pauli string acts on a basis state as
//! `P|b> = i^{#Y} (-1)^{|b ∧ z|} |b ⊕ x>`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliSum};
use crate::stabilizer::StabilizerSet;

pub const DEFAULT_MAX_QUBITS: usize = 14;

/// Above this many qubits `ground_energy` switches from a full dense
/// eigensolve to matrix-free Lanczos.
pub const DENSE_EIGEN_MAX_QUBITS: usize = 7;

const LANCZOS_SEED: u64 = 0x5eed_1a2c_2024;
const LANCZOS_MAX_KRYLOV: usize = 120;
const LANCZOS_MAX_RESTARTS: usize = 50;
const LANCZOS_TOL: f64 = 1e-11;

/// A dense `2^n × 2^n` complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    pub n: usize,
    pub matrix: DMatrix<Complex64>,
}

impl DenseOperator {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let adj = self.matrix.adjoint();
        (&self.matrix - adj).iter().all(|z| z.norm() <= tol)
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Sorted eigenvalues; assumes Hermitian input.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.matrix.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

/// Bit masks of a string in basis-index layout.
#[derive(Copy, Clone, Debug)]
struct Masks {
    x: usize,
    z: usize,
    /// `i^{#Y}`
    y_phase: Complex64,
}

fn masks(p: &PauliString) -> Masks {
    let n = p.num_qubits();
    let (mut x, mut z, mut ys) = (0usize, 0usize, 0u32);
    for (q, f) in p.factors().enumerate() {
        let bit = 1usize << (n - 1 - q);
        match f {
            Pauli::I => {}
            Pauli::X => x |= bit,
            Pauli::Z => z |= bit,
            Pauli::Y => {
                x |= bit;
                z |= bit;
                ys += 1;
            }
        }
    }
    let y_phase = match ys % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    Masks { x, z, y_phase }
}

fn parity_sign(b: usize) -> f64 {
    if b.count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Resource-guarded builder for dense operators and reference energies.
#[derive(Copy, Clone, Debug)]
pub struct ExactOracle {
    pub max_qubits: usize,
}

impl Default for ExactOracle {
    fn default() -> Self {
        ExactOracle {
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

impl ExactOracle {
    pub fn new(max_qubits: usize) -> Self {
        ExactOracle { max_qubits }
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.max_qubits {
            return Err(Error::TooManyQubits {
                n,
                limit: self.max_qubits,
            });
        }
        Ok(())
    }

    pub fn pauli_matrix(&self, p: &PauliString) -> Result<DenseOperator> {
        self.guard(p.num_qubits())?;
        let n = p.num_qubits();
        let dim = 1usize << n;
        let m = masks(p);
        let mut matrix = DMatrix::zeros(dim, dim);
        for b in 0..dim {
            matrix[(b ^ m.x, b)] = m.y_phase * parity_sign(b & m.z);
        }
        Ok(DenseOperator { n, matrix })
    }

    pub fn to_dense(&self, h: &PauliSum) -> Result<DenseOperator> {
        let n = h.num_qubits();
        self.guard(n)?;
        let dim = 1usize << n;
        let mut matrix = DMatrix::zeros(dim, dim);
        for t in h {
            let m = masks(&t.string);
            for b in 0..dim {
                matrix[(b ^ m.x, b)] += m.y_phase * (t.coeff * parity_sign(b & m.z));
            }
        }
        Ok(DenseOperator { n, matrix })
    }

    /// Smallest eigenvalue of `h`.
    pub fn ground_energy(&self, h: &PauliSum) -> Result<f64> {
        let n = h.num_qubits();
        self.guard(n)?;
        if n <= DENSE_EIGEN_MAX_QUBITS {
            Ok(self.to_dense(h)?.eigenvalues()[0])
        } else {
            Ok(lanczos_ground_energy(h))
        }
    }

    /// `Tr(HΠ)/Tr(Π)` with `Π = ∏ (I + s_j g_j)/2` built densely.
    pub fn projector_energy(&self, h: &PauliSum, s: &StabilizerSet) -> Result<f64> {
        let n = h.num_qubits();
        if s.num_qubits() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: s.num_qubits(),
            });
        }
        let projector = self.projector(s)?;
        let dense = self.to_dense(h)?;
        let tr_pi = projector.trace().re;
        assert!(tr_pi > 0.5, "empty code space: inconsistent stabilizer set");
        let tr_h_pi = (&dense.matrix * &projector.matrix).trace().re;
        Ok(tr_h_pi / tr_pi)
    }

    pub fn projector(&self, s: &StabilizerSet) -> Result<DenseOperator> {
        let n = s.num_qubits();
        self.guard(n)?;
        let dim = 1usize << n;
        let id = DMatrix::<Complex64>::identity(dim, dim);
        let mut pi = id.clone();
        for g in s.generators() {
            let gm = self.pauli_matrix(&g.string)?.matrix;
            let factor = (&id + gm * Complex64::new(g.sign.value(), 0.0)) * Complex64::new(0.5, 0.0);
            pi = pi * factor;
        }
        Ok(DenseOperator { n, matrix: pi })
    }
}

pub fn to_dense(h: &PauliSum) -> Result<DenseOperator> {
    ExactOracle::default().to_dense(h)
}

pub fn ground_energy(h: &PauliSum) -> Result<f64> {
    ExactOracle::default().ground_energy(h)
}

pub fn projector_energy(h: &PauliSum, s: &StabilizerSet) -> Result<f64> {
    ExactOracle::default().projector_energy(h, s)
}

/// `out = H·v` without materializing `H`.
fn apply(terms: &[(f64, Masks)], v: &[Complex64], out: &mut [Complex64]) {
    out.iter_mut().for_each(|o| *o = Complex64::new(0.0, 0.0));
    for &(c, m) in terms {
        let w = m.y_phase * c;
        for (b, &amp) in v.iter().enumerate() {
            out[b ^ m.x] += w * parity_sign(b & m.z) * amp;
        }
    }
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Lanczos with full reorthogonalization and restarts from the current
/// lowest Ritz vector. The start vector is drawn from a fixed-seed ChaCha8
/// stream; each restart reuses the previous Ritz vector, so the result is
/// deterministic.
fn lanczos_ground_energy(h: &PauliSum) -> f64 {
    let n = h.num_qubits();
    let dim = 1usize << n;
    let terms: Vec<(f64, Masks)> = h.iter().map(|t| (t.coeff, masks(&t.string))).collect();
    let scale = h.coeff_abs_sum().max(1.0);

    let mut rng = ChaCha8Rng::seed_from_u64(LANCZOS_SEED);
    let mut start: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let mut best = f64::INFINITY;
    let krylov = LANCZOS_MAX_KRYLOV.min(dim);
    let mut w = vec![Complex64::new(0.0, 0.0); dim];

    for _ in 0..LANCZOS_MAX_RESTARTS {
        let nrm = norm(&start);
        let mut basis: Vec<Vec<Complex64>> = vec![start.iter().map(|x| x / nrm).collect()];
        let mut alpha: Vec<f64> = Vec::new();
        let mut beta: Vec<f64> = Vec::new();
        let mut ritz = (f64::INFINITY, DVector::zeros(1));
        let mut converged = false;

        for k in 0..krylov {
            apply(&terms, &basis[k], &mut w);
            let a = dot(&basis[k], &w).re;
            alpha.push(a);
            // Full reorthogonalization, twice for stability.
            for _ in 0..2 {
                for q in &basis {
                    let c = dot(q, &w);
                    w.iter_mut().zip(q).for_each(|(wi, qi)| *wi -= c * qi);
                }
            }
            let b = norm(&w);
            ritz = lowest_ritz(&alpha, &beta);
            let residual = b * ritz.1[k].abs();
            if residual < LANCZOS_TOL * scale || b < LANCZOS_TOL * scale || k + 1 == dim {
                converged = true;
                break;
            }
            if k + 1 < krylov {
                beta.push(b);
                basis.push(w.iter().map(|x| x / b).collect());
            }
        }

        best = ritz.0;
        if converged {
            break;
        }
        let mut next = vec![Complex64::new(0.0, 0.0); dim];
        for (coef, q) in ritz.1.iter().zip(&basis) {
            next.iter_mut().zip(q).for_each(|(ni, qi)| *ni += qi * *coef);
        }
        start = next;
    }
    best
}

/// Lowest eigenpair of the symmetric tridiagonal matrix `(alpha, beta)`.
fn lowest_ritz(alpha: &[f64], beta: &[f64]) -> (f64, DVector<f64>) {
    let k = alpha.len();
    let mut t = DMatrix::<f64>::zeros(k, k);
    for i in 0..k {
        t[(i, i)] = alpha[i];
        if i + 1 < k {
            t[(i, i + 1)] = beta[i];
            t[(i + 1, i)] = beta[i];
        }
    }
    let eig = SymmetricEigen::new(t);
    let (idx, val) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, v)| (i, *v))
        .expect("nonempty tridiagonal");
    (val, eig.eigenvectors.column(idx).into_owned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::SignedPauli;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        a.kronecker(b)
    }

    fn x() -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)])
    }

    fn z() -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)])
    }

    fn h0() -> PauliSum {
        PauliSum::from_pairs(&[(-1.0, "XX"), (-1.0, "XZ"), (-1.0, "ZX"), (1.0, "ZZ")]).unwrap()
    }

    #[test]
    fn single_qubit_matrices() {
        let d = to_dense(&PauliSum::from_pairs(&[(1.0, "Z")]).unwrap()).unwrap();
        assert_eq!(d.matrix, z());
        let d = to_dense(&PauliSum::from_pairs(&[(1.0, "X"), (1.0, "Z")]).unwrap()).unwrap();
        assert_eq!(d.matrix, x() + z());
        let y = ExactOracle::default().pauli_matrix(&"Y".parse().unwrap()).unwrap();
        let expected = DMatrix::from_row_slice(
            2,
            2,
            &[c(0.0), Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), c(0.0)],
        );
        assert_eq!(y.matrix, expected);
    }

    #[test]
    fn chsh_matrix_by_hand() {
        let expected = -kron(&x(), &x()) - kron(&x(), &z()) - kron(&z(), &x()) + kron(&z(), &z());
        let d = to_dense(&h0()).unwrap();
        assert_eq!(d.matrix, expected);
        let diag: Vec<f64> = (0..4).map(|i| d.matrix[(i, i)].re).collect();
        assert_eq!(diag, [1.0, -1.0, -1.0, 1.0]);
        assert!(d.is_hermitian(1e-12));
    }

    #[test]
    fn qubit_zero_is_most_significant() {
        let d = to_dense(&PauliSum::from_pairs(&[(1.0, "ZI")]).unwrap()).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| d.matrix[(i, i)].re).collect();
        assert_eq!(diag, [1.0, 1.0, -1.0, -1.0]);
    }

    #[test]
    fn ground_energy_examples() {
        assert_abs_diff_eq!(ground_energy(&h0()).unwrap(), -2.0 * SQRT_2, epsilon = 1e-10);
        let mid = PauliSum::from_pairs(&[(1.0, "IZ"), (-1.0, "ZI"), (2.0, "XX")]).unwrap();
        assert_abs_diff_eq!(ground_energy(&mid).unwrap(), -2.0 * SQRT_2, epsilon = 1e-10);
        let ising =
            PauliSum::from_pairs(&[(1.0, "XI"), (1.0, "ZI"), (1.0, "IX"), (1.0, "IZ")]).unwrap();
        assert_abs_diff_eq!(ground_energy(&ising).unwrap(), -2.0 * SQRT_2, epsilon = 1e-10);
    }

    #[test]
    fn projector_examples() {
        let gens: Vec<SignedPauli> = ["+XX", "-ZZ"].iter().map(|s| s.parse().unwrap()).collect();
        let s = StabilizerSet::from_generators(2, &gens).unwrap();
        assert_abs_diff_eq!(projector_energy(&h0(), &s).unwrap(), -2.0, epsilon = 1e-12);

        let mid = PauliSum::from_pairs(&[(1.0, "IZ"), (-1.0, "ZI"), (2.0, "XX")]).unwrap();
        let s = StabilizerSet::from_generators(2, &["-XX".parse().unwrap()]).unwrap();
        assert_abs_diff_eq!(projector_energy(&mid, &s).unwrap(), -2.0, epsilon = 1e-12);

        let with_const = PauliSum::from_pairs(&[(0.75, "II"), (1.0, "XY")]).unwrap();
        let e = projector_energy(&with_const, &StabilizerSet::new(2)).unwrap();
        assert_abs_diff_eq!(e, 0.75, epsilon = 1e-12);
    }

    #[test]
    fn resource_guard() {
        let big = PauliSum::from_pairs(&[(1.0, "ZZZZZ")]).unwrap();
        assert_eq!(
            ExactOracle::new(4).ground_energy(&big),
            Err(Error::TooManyQubits { n: 5, limit: 4 })
        );
    }

    #[test]
    fn lanczos_agrees_with_dense() {
        // Open-chain Ising with both fields on 6 qubits, plus a Y coupling so
        // that the matrix is genuinely complex.
        let n = 6;
        let mut pairs: Vec<(f64, String)> = Vec::new();
        for i in 0..n {
            let mut s = vec!['I'; n];
            s[i] = 'X';
            pairs.push((0.7 + 0.1 * i as f64, s.iter().collect()));
            s[i] = 'Z';
            pairs.push((-0.4, s.iter().collect()));
            if i + 1 < n {
                let mut s = vec!['I'; n];
                s[i] = 'Z';
                s[i + 1] = 'Z';
                pairs.push((1.1, s.iter().collect()));
                s[i] = 'X';
                s[i + 1] = 'Y';
                pairs.push((0.3, s.iter().collect()));
            }
        }
        let refs: Vec<(f64, &str)> = pairs.iter().map(|(c, s)| (*c, s.as_str())).collect();
        let h = PauliSum::from_pairs(&refs).unwrap();
        let dense = to_dense(&h).unwrap().eigenvalues()[0];
        let lanczos = lanczos_ground_energy(&h);
        assert_abs_diff_eq!(dense, lanczos, epsilon = 1e-9);
    }
}
