//! Qubit-by-qubit gauging: rotate one qubit's frame, fix a single-qubit
//! primed stabilizer there, substitute its eigenvalue and continue on the
//! reduced Hamiltonian.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gauge::{normalize_angle, rotate_qubit, GaugeAngles};
use crate::pauli::{Pauli, PauliString, PauliSum, PauliTerm, DEFAULT_MERGE_EPS};
use crate::stabilizer::{Extension, Sign, SignedPauli, StabilizerSet};

/// One of the two gauged axes a qubit can be fixed along.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PrimedAxis {
    X,
    Z,
}

impl PrimedAxis {
    pub fn pauli(self) -> Pauli {
        match self {
            PrimedAxis::X => Pauli::X,
            PrimedAxis::Z => Pauli::Z,
        }
    }
}

impl fmt::Display for PrimedAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimedAxis::X => "X'",
            PrimedAxis::Z => "Z'",
        })
    }
}

impl Serialize for PrimedAxis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    /// Every qubit gauged at π/4.
    FixedPi4,
    /// Each qubit's angle aligns its local field with a primed axis.
    Analytic,
}

impl std::str::FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed_pi4" => Ok(SweepMode::FixedPi4),
            "analytic" => Ok(SweepMode::Analytic),
            other => Err(Error::InvalidInput(format!("unknown sweep mode {other:?}"))),
        }
    }
}

/// The choice made at one qubit. `qubit` is 1-based in the original indexing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QubitChoice {
    pub qubit: usize,
    pub theta: f64,
    pub op: PrimedAxis,
    pub eigenvalue: Sign,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTrace {
    pub n: usize,
    pub steps: Vec<QubitChoice>,
    /// `reduced_hamiltonians[k]` is the Hamiltonian left after step `k`; the
    /// last one acts on zero qubits.
    pub reduced_hamiltonians: Vec<PauliSum>,
    pub final_energy: f64,
}

impl SweepTrace {
    /// Accumulated per-qubit angles in the original qubit order.
    pub fn angles(&self) -> GaugeAngles {
        let mut g = GaugeAngles::zeros(self.n);
        for s in &self.steps {
            g.set(s.qubit - 1, s.theta);
        }
        g
    }

    /// The single-qubit stabilizers `eigenvalue · op` at each processed qubit.
    pub fn stabilizers(&self) -> StabilizerSet {
        let mut set = StabilizerSet::new(self.n);
        for s in &self.steps {
            let g = SignedPauli::new(s.eigenvalue, PauliString::single(self.n, s.qubit - 1, s.op.pauli()));
            let added = set.try_extend(g).expect("valid single-qubit generator");
            debug_assert_eq!(added, Extension::Added);
        }
        set
    }
}

/// Substitute `eigenvalue` for `op` at `position` (0-based within `h`, which
/// is already expressed in that qubit's gauged frame), drop terms carrying
/// the other axis or Y there, and delete the qubit.
pub fn reduce(h: &PauliSum, position: usize, op: PrimedAxis, eigenvalue: Sign) -> Result<PauliSum> {
    let n = h.num_qubits();
    if position >= n {
        return Err(Error::QubitOutOfRange { index: position, n });
    }
    let terms = h
        .iter()
        .filter_map(|t| {
            let f = t.string.get(position);
            let coeff = if f == Pauli::I {
                t.coeff
            } else if f == op.pauli() {
                t.coeff * eigenvalue.value()
            } else {
                return None;
            };
            Some(PauliTerm::new(coeff, t.string.remove_qubit(position)))
        })
        .collect();
    Ok(PauliSum::from_terms(n - 1, terms)?.canonical())
}

/// Coefficients `(a, b)` of the terms acting as `X` and as `Z` on `position`
/// alone.
fn local_field(h: &PauliSum, position: usize) -> (f64, f64) {
    let n = h.num_qubits();
    let x = PauliString::single(n, position, Pauli::X);
    let z = PauliString::single(n, position, Pauli::Z);
    (h.coeff_of(&x), h.coeff_of(&z))
}

/// Smallest non-negative angle aligning the local field `(a_x, a_z)` with
/// one of the primed axes. Zero for a vanishing field.
pub fn analytic_angle(a_x: f64, a_z: f64) -> f64 {
    if a_x == 0.0 && a_z == 0.0 {
        return 0.0;
    }
    // X' coefficient is a_x cos θ + a_z sin θ, which is ±|a| at θ = atan2(a_z, a_x).
    let theta = a_z.atan2(a_x).rem_euclid(FRAC_PI_2);
    if theta == 0.0 || FRAC_PI_2 - theta < 1e-12 {
        0.0
    } else {
        theta
    }
}

/// Prefer the larger local coefficient; ties go to X'. The eigenvalue is
/// opposite in sign to the coefficient, `+1` when it vanishes.
///
/// Magnitudes within the merge epsilon (relative) count as tied: `sin(π/4)`
/// and `cos(π/4)` differ in the last bit.
fn select(a: f64, b: f64) -> (PrimedAxis, Sign) {
    let tie = DEFAULT_MERGE_EPS * a.abs().max(b.abs()).max(1.0);
    let (op, c) = if a.abs() >= b.abs() - tie {
        (PrimedAxis::X, a)
    } else {
        (PrimedAxis::Z, b)
    };
    let eigenvalue = if c == 0.0 { Sign::Plus } else { Sign::of(c).flip() };
    (op, eigenvalue)
}

/// Validate a 1-based permutation of `1..=n`.
fn check_order(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidInput(format!(
            "order has {} entries for {n} qubits",
            order.len()
        )));
    }
    for &q in order {
        if q == 0 || q > n || seen[q - 1] {
            return Err(Error::InvalidInput(format!(
                "order {order:?} is not a permutation of 1..={n}"
            )));
        }
        seen[q - 1] = true;
    }
    Ok(())
}

/// Run the sweep over `order` (1-based qubit indices).
pub fn sweep(h: &PauliSum, mode: SweepMode, order: &[usize]) -> Result<SweepTrace> {
    let n = h.num_qubits();
    check_order(order, n)?;
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut current = h.canonical();
    let mut steps = Vec::with_capacity(n);
    let mut snapshots = Vec::with_capacity(n);

    for &qubit in order {
        let position = remaining.iter().position(|&q| q == qubit).expect("validated order");
        let theta = match mode {
            SweepMode::FixedPi4 => FRAC_PI_4,
            SweepMode::Analytic => {
                let (a_x, a_z) = local_field(&current, position);
                analytic_angle(a_x, a_z)
            }
        };
        let rotated = rotate_qubit(&current, position, theta)?;
        let (a, b) = local_field(&rotated, position);
        let (op, eigenvalue) = select(a, b);
        current = reduce(&rotated, position, op, eigenvalue)?;
        remaining.remove(position);
        steps.push(QubitChoice {
            qubit,
            theta: normalize_angle(theta),
            op,
            eigenvalue,
        });
        snapshots.push(current.clone());
    }

    Ok(SweepTrace {
        n,
        steps,
        final_energy: current.constant(),
        reduced_hamiltonians: snapshots,
    })
}

/// Sweep in ascending qubit order.
pub fn sweep_ascending(h: &PauliSum, mode: SweepMode) -> Result<SweepTrace> {
    let order: Vec<usize> = (1..=h.num_qubits()).collect();
    sweep(h, mode, &order)
}
