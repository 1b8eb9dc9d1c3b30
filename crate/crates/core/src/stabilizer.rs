//! Stabilizer groups with sign tracking, greedy selection from a Pauli sum,
//! and code-space-averaged energies.
//!
//! A [`StabilizerSet`] keeps its generators alongside a GF(2) tableau in
//! reduced row-echelon form over the `2n` symplectic columns. Every tableau
//! row is a signed group element, so membership of a string reduces to
//! elimination against the pivots while multiplying the rows' phases in.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gauge::{rotate_frame, GaugeAngles};
use crate::pauli::{parse_pauli, PauliString, PauliSum, Phase};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `Plus` for non-negative input.
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn phase(self) -> Phase {
        match self {
            Sign::Plus => Phase::ONE,
            Sign::Minus => Phase::MINUS_ONE,
        }
    }

    fn from_phase(p: Phase) -> Option<Sign> {
        match p.as_real()? {
            v if v > 0.0 => Some(Sign::Plus),
            _ => Some(Sign::Minus),
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value() as i8)
    }
}

/// `±P`; text form is `"+XX"` / `"-ZZ"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    pub sign: Sign,
    pub string: PauliString,
}

impl SignedPauli {
    pub fn new(sign: Sign, string: PauliString) -> Self {
        SignedPauli { sign, string }
    }

    pub fn plus(string: PauliString) -> Self {
        SignedPauli::new(Sign::Plus, string)
    }

    pub fn minus(string: PauliString) -> Self {
        SignedPauli::new(Sign::Minus, string)
    }
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.string)
    }
}

impl FromStr for SignedPauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (sign, rest) = match s.chars().next() {
            Some('+') => (Sign::Plus, &s[1..]),
            Some('-') => (Sign::Minus, &s[1..]),
            _ => (Sign::Plus, s),
        };
        Ok(SignedPauli::new(sign, parse_pauli(rest)?))
    }
}

impl Serialize for SignedPauli {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Plus,
    Minus,
    Outside,
}

impl Membership {
    /// Expectation value of the string on the code space: ±1 or 0.
    pub fn expectation(self) -> f64 {
        match self {
            Membership::Plus => 1.0,
            Membership::Minus => -1.0,
            Membership::Outside => 0.0,
        }
    }
}

/// Why [`StabilizerSet::try_extend`] refused a candidate.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    Anticommutes,
    ImpliedConsistent,
    ImpliedConflicting,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    Added,
    Rejected(Rejection),
}

#[derive(Clone, Debug)]
struct Row {
    sign: Sign,
    string: PauliString,
    pivot: usize,
}

/// Independent, mutually commuting signed Pauli strings.
#[derive(Clone, Debug)]
pub struct StabilizerSet {
    n: usize,
    generators: Vec<SignedPauli>,
    rows: Vec<Row>,
}

impl PartialEq for StabilizerSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generators == other.generators
    }
}

impl StabilizerSet {
    pub fn new(n: usize) -> Self {
        StabilizerSet {
            n,
            generators: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// Build from generators, failing on the first one `try_extend` rejects.
    pub fn from_generators(n: usize, generators: &[SignedPauli]) -> Result<Self> {
        let mut s = StabilizerSet::new(n);
        for g in generators {
            if let Extension::Rejected(r) = s.try_extend(g.clone())? {
                return Err(Error::InvalidInput(format!("generator {g} rejected: {r:?}")));
            }
        }
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SignedPauli] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }

    fn check_dims(&self, p: &PauliString) -> Result<()> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: p.num_qubits(),
            });
        }
        Ok(())
    }

    /// Eliminate `p` against the tableau. Returns the accumulated phase and
    /// the residual string of `G·p` where `G` is the product of rows used.
    /// Caller guarantees `p` commutes with every row.
    fn eliminate(&self, p: &PauliString) -> (Phase, PauliString) {
        let mut phase = Phase::ONE;
        let mut acc = p.clone();
        for row in &self.rows {
            if acc.column(row.pivot) {
                let (ph, r) = row.string.multiply_unchecked(&acc);
                phase = phase * ph * row.sign.phase();
                acc = r;
            }
        }
        (phase, acc)
    }

    pub fn membership(&self, p: &PauliString) -> Result<Membership> {
        self.check_dims(p)?;
        if !self.rows.iter().all(|r| r.string.commutes_unchecked(p)) {
            return Ok(Membership::Outside);
        }
        let (phase, residual) = self.eliminate(p);
        if !residual.is_identity() {
            return Ok(Membership::Outside);
        }
        // G·p = φ·I with G a signed group element, so φ·p = G is in the group.
        match Sign::from_phase(phase) {
            Some(Sign::Plus) => Ok(Membership::Plus),
            Some(Sign::Minus) => Ok(Membership::Minus),
            None => unreachable!("commuting Hermitian Paulis multiply with a real phase"),
        }
    }

    /// Add `g` when it commutes with the group and is not already implied.
    pub fn try_extend(&mut self, g: SignedPauli) -> Result<Extension> {
        self.check_dims(&g.string)?;
        if g.string.is_identity() {
            return Err(Error::IdentityGenerator);
        }
        if !self.generators.iter().all(|h| h.string.commutes_unchecked(&g.string)) {
            return Ok(Extension::Rejected(Rejection::Anticommutes));
        }
        let (phase, residual) = self.eliminate(&g.string);
        if residual.is_identity() {
            let implied = Sign::from_phase(phase).expect("real phase");
            let rejection = if implied == g.sign {
                Rejection::ImpliedConsistent
            } else {
                Rejection::ImpliedConflicting
            };
            return Ok(Extension::Rejected(rejection));
        }
        // residual·(sign) = g.sign · G·g, a new signed group element.
        let sign = g.sign * Sign::from_phase(phase).expect("real phase");
        let pivot = residual.first_column().expect("non-identity residual");
        for row in &mut self.rows {
            if row.string.column(pivot) {
                let (ph, r) = residual.multiply_unchecked(&row.string);
                let s = Sign::from_phase(ph).expect("real phase");
                row.sign = row.sign * sign * s;
                row.string = r;
            }
        }
        let pos = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(
            pos,
            Row {
                sign,
                string: residual,
                pivot,
            },
        );
        self.generators.push(g);
        Ok(Extension::Added)
    }

    /// Dense-free expectation `Σ c_P e(P)` on the code space.
    pub fn energy(&self, h: &PauliSum) -> Result<f64> {
        if h.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: h.num_qubits(),
            });
        }
        let mut e = 0.0;
        for t in h {
            e += t.coeff * self.membership(&t.string)?.expectation();
        }
        Ok(e)
    }
}

impl fmt::Display for StabilizerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

impl Serialize for StabilizerSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.generators.iter())
    }
}

pub fn membership(s: &StabilizerSet, p: &PauliString) -> Result<Membership> {
    s.membership(p)
}

pub fn stabilizer_energy(h: &PauliSum, s: &StabilizerSet) -> Result<f64> {
    s.energy(h)
}

/// Outcome of greedy selection, including candidates skipped because the
/// group already fixed the opposite sign.
#[derive(Clone, Debug, PartialEq)]
pub struct Selection {
    pub set: StabilizerSet,
    pub conflicts: Vec<SignedPauli>,
}

/// Walk `h` in canonical order and keep `(-sign(c), P)` whenever it extends
/// the group, until `max_k` generators are held.
pub fn greedy_select_logged(h: &PauliSum, max_k: usize) -> Selection {
    let ordered = if h.is_canonical(0.0) { h.clone() } else { h.canonical() };
    let mut set = StabilizerSet::new(h.num_qubits());
    let mut conflicts = Vec::new();
    for t in &ordered {
        if set.len() >= max_k {
            break;
        }
        if t.string.is_identity() {
            continue;
        }
        let candidate = SignedPauli::new(Sign::of(t.coeff).flip(), t.string.clone());
        match set.try_extend(candidate.clone()).expect("dimensions agree") {
            Extension::Rejected(Rejection::ImpliedConflicting) => conflicts.push(candidate),
            Extension::Added | Extension::Rejected(_) => {}
        }
    }
    Selection { set, conflicts }
}

pub fn greedy_select(h: &PauliSum, max_k: usize) -> StabilizerSet {
    greedy_select_logged(h, max_k).set
}

/// Result of scoring a Hamiltonian in a gauged frame.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugedEnergy {
    pub energy: f64,
    pub stabilizers: StabilizerSet,
    pub rotated: PauliSum,
    pub conflicts: Vec<SignedPauli>,
}

/// Rotate by `g`, select greedily, and evaluate on the resulting code space.
pub fn gauged_energy(h: &PauliSum, g: &GaugeAngles, max_k: usize) -> Result<GaugedEnergy> {
    let rotated = rotate_frame(h, g)?;
    let Selection { set, conflicts } = greedy_select_logged(&rotated, max_k);
    let energy = set.energy(&rotated)?;
    Ok(GaugedEnergy {
        energy,
        stabilizers: set,
        rotated,
        conflicts,
    })
}
