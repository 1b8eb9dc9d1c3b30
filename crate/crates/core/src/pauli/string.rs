//! Pauli strings in packed symplectic form.
//!
//! Qubit `q` (0-based) has factor I/X/Y/Z for `(x_q, z_q)` = (0,0)/(1,0)/(1,1)/(0,1).
//! In text form qubit 0 is the leftmost letter, so `Z₁⊗I₂` reads `"ZI"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A single-qubit Pauli factor.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(ch: char) -> Option<Self> {
        match ch {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A power of `i`: 0 = +1, 1 = +i, 2 = −1, 3 = −i.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: i64) -> Self {
        Phase(k.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }

    /// `Some(±1)` for a real phase.
    pub fn as_real(self) -> Option<f64> {
        match self.0 {
            0 => Some(1.0),
            2 => Some(-1.0),
            _ => None,
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        };
        f.write_str(s)
    }
}

/// An `n`-qubit Pauli operator without phase.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            n,
            x: vec![0; words_for(n)],
            z: vec![0; words_for(n)],
        }
    }

    pub fn from_factors(factors: &[Pauli]) -> Self {
        let mut p = PauliString::identity(factors.len());
        for (q, &f) in factors.iter().enumerate() {
            p.set(q, f);
        }
        p
    }

    /// Build from explicit bit slices; both must have the same length.
    pub fn from_bits(x_bits: &[bool], z_bits: &[bool]) -> Result<Self> {
        if x_bits.len() != z_bits.len() {
            return Err(Error::DimensionMismatch {
                left: x_bits.len(),
                right: z_bits.len(),
            });
        }
        let mut p = PauliString::identity(x_bits.len());
        for (q, (&x, &z)) in x_bits.iter().zip(z_bits).enumerate() {
            p.set(q, Pauli::from_bits(x, z));
        }
        Ok(p)
    }

    /// Single-factor string: `factor` at qubit `q`, identity elsewhere.
    pub fn single(n: usize, q: usize, factor: Pauli) -> Self {
        let mut p = PauliString::identity(n);
        p.set(q, factor);
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn get(&self, q: usize) -> Pauli {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        let (w, b) = (q / WORD, q % WORD);
        Pauli::from_bits((self.x[w] >> b) & 1 == 1, (self.z[w] >> b) & 1 == 1)
    }

    pub fn set(&mut self, q: usize, factor: Pauli) {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        let (w, b) = (q / WORD, q % WORD);
        let (x, z) = factor.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | ((x as u64) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | ((z as u64) << b);
    }

    pub fn x_bit(&self, q: usize) -> bool {
        self.get(q).bits().0
    }

    pub fn z_bit(&self, q: usize) -> bool {
        self.get(q).bits().1
    }

    pub fn x_bits(&self) -> Vec<bool> {
        (0..self.n).map(|q| self.x_bit(q)).collect()
    }

    pub fn z_bits(&self) -> Vec<bool> {
        (0..self.n).map(|q| self.z_bit(q)).collect()
    }

    pub fn factors(&self) -> impl Iterator<Item = Pauli> + '_ {
        (0..self.n).map(move |q| self.get(q))
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    pub fn count(&self, factor: Pauli) -> usize {
        self.factors().filter(|&f| f == factor).count()
    }

    /// Symplectic column `c`: `0..n` are x bits, `n..2n` are z bits.
    pub(crate) fn column(&self, c: usize) -> bool {
        if c < self.n {
            self.x_bit(c)
        } else {
            self.z_bit(c - self.n)
        }
    }

    /// First set column of the symplectic vector, if any.
    pub(crate) fn first_column(&self) -> Option<usize> {
        for (w, &word) in self.x.iter().enumerate() {
            if word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
        }
        for (w, &word) in self.z.iter().enumerate() {
            if word != 0 {
                return Some(self.n + w * WORD + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// The string with qubit `q` deleted (n − 1 qubits).
    pub fn remove_qubit(&self, q: usize) -> PauliString {
        assert!(q < self.n);
        let factors: Vec<Pauli> = self
            .factors()
            .enumerate()
            .filter(|&(i, _)| i != q)
            .map(|(_, f)| f)
            .collect();
        PauliString::from_factors(&factors)
    }

    fn check_dims(&self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Whether the symplectic form with `other` is even.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.commutes_unchecked(other))
    }

    pub(crate) fn commutes_unchecked(&self, other: &PauliString) -> bool {
        let mut parity = 0u32;
        for w in 0..self.x.len() {
            parity ^= ((self.x[w] & other.z[w]) ^ (self.z[w] & other.x[w])).count_ones();
        }
        parity & 1 == 0
    }

    /// Operator product `self · other = phase · r`.
    pub fn multiply(&self, other: &PauliString) -> Result<(Phase, PauliString)> {
        self.check_dims(other)?;
        Ok(self.multiply_unchecked(other))
    }

    pub(crate) fn multiply_unchecked(&self, other: &PauliString) -> (Phase, PauliString) {
        let mut exponent: i64 = 0;
        let mut out = PauliString::identity(self.n);
        for w in 0..self.x.len() {
            let (x1, z1, x2, z2) = (self.x[w], self.z[w], other.x[w], other.z[w]);
            // Y·Z = iX, X·Y = iZ, Z·X = iY and the reversed orders give −i.
            let plus = (x1 & z1 & !x2 & z2) | (x1 & !z1 & x2 & z2) | (!x1 & z1 & x2 & !z2);
            let minus = (x1 & z1 & x2 & !z2) | (x1 & !z1 & !x2 & z2) | (!x1 & z1 & x2 & z2);
            exponent += plus.count_ones() as i64 - minus.count_ones() as i64;
            out.x[w] = x1 ^ x2;
            out.z[w] = z1 ^ z2;
        }
        (Phase::from_exponent(exponent), out)
    }
}

/// Symplectic commutation test.
pub fn commutes(p: &PauliString, q: &PauliString) -> Result<bool> {
    p.commutes(q)
}

/// Operator product `p·q` as `(phase, r)`.
pub fn multiply(p: &PauliString, q: &PauliString) -> Result<(Phase, PauliString)> {
    p.multiply(q)
}

/// Parse a letter string; the leftmost character is qubit 0.
pub fn parse_pauli(text: &str) -> Result<PauliString> {
    if text.is_empty() {
        return Err(Error::EmptyPauli);
    }
    let factors = text
        .chars()
        .enumerate()
        .map(|(i, ch)| Pauli::from_letter(ch).ok_or(Error::IllegalChar { position: i + 1, ch }))
        .collect::<Result<Vec<_>>>()?;
    Ok(PauliString::from_factors(&factors))
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.factors() {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

/// Lexicographic from qubit 0 with I < X < Y < Z; shorter strings first.
impl Ord for PauliString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.factors().cmp(other.factors()))
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
