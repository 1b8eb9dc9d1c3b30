//! Per-qubit `R_y(θ)` frame rotations of Pauli sums.
//!
//! Rewriting `H` in the gauged frame substitutes, at every qubit,
//!
//! ```text
//! X -> cos θ X' - sin θ Z'
//! Z -> sin θ X' + cos θ Z'
//! Y -> Y,  I -> I
//! ```
//!
//! so that `θ = π/4` gives `X = (X' - Z')/√2` and `Z = (X' + Z')/√2`, i.e.
//! `X' = (X + Z)/√2` and `Z' = (Z - X)/√2`. The rotated sum, read with the
//! primed letters as ordinary Paulis, is unitarily equivalent to `H`.

use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliSum, PauliTerm, DEFAULT_MERGE_EPS};

/// Reduce an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU || t == 0.0 {
        0.0
    } else {
        t
    }
}

/// One rotation angle per qubit, each in `[0, 2π)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeAngles(Vec<f64>);

impl GaugeAngles {
    pub fn new(angles: Vec<f64>) -> Self {
        GaugeAngles(angles.into_iter().map(normalize_angle).collect())
    }

    pub fn zeros(n: usize) -> Self {
        GaugeAngles(vec![0.0; n])
    }

    pub fn uniform(n: usize, theta: f64) -> Self {
        GaugeAngles::new(vec![theta; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn get(&self, q: usize) -> f64 {
        self.0[q]
    }

    pub fn set(&mut self, q: usize, theta: f64) {
        self.0[q] = normalize_angle(theta);
    }

    pub fn negate(&self) -> GaugeAngles {
        GaugeAngles::new(self.0.iter().map(|t| -t).collect())
    }

    /// Componentwise sum modulo 2π.
    pub fn compose(&self, other: &GaugeAngles) -> Result<GaugeAngles> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(GaugeAngles::new(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Parse a comma-separated list of angle tokens (see [`parse_angle`]).
    pub fn parse_list(text: &str) -> Result<GaugeAngles> {
        let angles = text
            .split(',')
            .map(|tok| parse_angle(tok.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(GaugeAngles::new(angles))
    }
}

impl From<Vec<f64>> for GaugeAngles {
    fn from(v: Vec<f64>) -> Self {
        GaugeAngles::new(v)
    }
}

impl fmt::Display for GaugeAngles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| format!("{t}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn compose(g1: &GaugeAngles, g2: &GaugeAngles) -> Result<GaugeAngles> {
    g1.compose(g2)
}

/// Parse one angle in radians. Accepts plain reals and symbolic forms such as
/// `pi`, `-pi/4`, `3pi/4`, `3*pi/2`.
pub fn parse_angle(token: &str) -> Result<f64> {
    let bad = || Error::InvalidInput(format!("cannot parse angle {token:?}"));
    let tok = token.trim();
    if tok.is_empty() {
        return Err(bad());
    }
    if let Ok(v) = tok.parse::<f64>() {
        return if v.is_finite() { Ok(v) } else { Err(bad()) };
    }
    let lower = tok.to_ascii_lowercase();
    let (negative, body) = match lower.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, lower.strip_prefix('+').unwrap_or(&lower)),
    };
    let (numer, denom) = match body.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (body, None),
    };
    let mult = numer.strip_suffix("pi").ok_or_else(bad)?;
    let mult = mult.strip_suffix('*').unwrap_or(mult);
    let mult: f64 = if mult.is_empty() {
        1.0
    } else {
        mult.parse().map_err(|_| bad())?
    };
    let denom: f64 = match denom {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => 1.0,
    };
    if denom == 0.0 || !mult.is_finite() || !denom.is_finite() {
        return Err(bad());
    }
    let v = mult * PI / denom;
    Ok(if negative { -v } else { v })
}

/// Expansion of an original factor in the primed operators at angle `theta`.
pub fn conjugate_factor(axis: Pauli, theta: f64) -> Vec<(f64, Pauli)> {
    let (s, c) = theta.sin_cos();
    match axis {
        Pauli::X => nonzero(&[(c, Pauli::X), (-s, Pauli::Z)]),
        Pauli::Z => nonzero(&[(s, Pauli::X), (c, Pauli::Z)]),
        Pauli::Y => vec![(1.0, Pauli::Y)],
        Pauli::I => vec![(1.0, Pauli::I)],
    }
}

fn nonzero(pairs: &[(f64, Pauli)]) -> Vec<(f64, Pauli)> {
    pairs.iter().copied().filter(|&(c, _)| c != 0.0).collect()
}

/// Expand one term under per-qubit angles, without merging.
fn expand_term(term: &PauliTerm, angles: impl Fn(usize) -> f64, out: &mut Vec<PauliTerm>) {
    let mut partial = vec![term.clone()];
    for q in 0..term.string.num_qubits() {
        let f = term.string.get(q);
        if matches!(f, Pauli::I | Pauli::Y) {
            continue;
        }
        let theta = angles(q);
        if theta == 0.0 {
            continue;
        }
        let expansion = conjugate_factor(f, theta);
        let mut next = Vec::with_capacity(partial.len() * expansion.len());
        for t in &partial {
            for &(c, p) in &expansion {
                let mut s = t.string.clone();
                s.set(q, p);
                next.push(PauliTerm::new(t.coeff * c, s));
            }
        }
        partial = next;
    }
    out.extend(partial);
}

/// `h` rewritten in the frame gauged by `g`, canonicalized with `eps`.
pub fn rotate_frame_eps(h: &PauliSum, g: &GaugeAngles, eps: f64) -> Result<PauliSum> {
    if g.len() != h.num_qubits() {
        return Err(Error::DimensionMismatch {
            left: h.num_qubits(),
            right: g.len(),
        });
    }
    let mut out = Vec::with_capacity(h.len() * 2);
    for t in h {
        expand_term(t, |q| g.get(q), &mut out);
    }
    Ok(PauliSum::from_terms(h.num_qubits(), out)?.canonicalize(eps))
}

/// `h` rewritten in the frame gauged by `g`.
pub fn rotate_frame(h: &PauliSum, g: &GaugeAngles) -> Result<PauliSum> {
    rotate_frame_eps(h, g, DEFAULT_MERGE_EPS)
}

/// Rotate the frame of a single qubit only.
pub fn rotate_qubit(h: &PauliSum, q: usize, theta: f64) -> Result<PauliSum> {
    let n = h.num_qubits();
    if q >= n {
        return Err(Error::QubitOutOfRange { index: q, n });
    }
    let theta = normalize_angle(theta);
    let mut out = Vec::with_capacity(h.len() * 2);
    for t in h {
        expand_term(t, |i| if i == q { theta } else { 0.0 }, &mut out);
    }
    Ok(PauliSum::from_terms(n, out)?.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, SQRT_2};

    fn h0() -> PauliSum {
        PauliSum::from_pairs(&[(-1.0, "XX"), (-1.0, "XZ"), (-1.0, "ZX"), (1.0, "ZZ")]).unwrap()
    }

    #[test]
    fn factor_expansion() {
        let x = conjugate_factor(Pauli::X, FRAC_PI_4);
        assert_eq!(x.len(), 2);
        assert_eq!((x[0].1, x[1].1), (Pauli::X, Pauli::Z));
        assert_abs_diff_eq!(x[0].0, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(x[1].0, -FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_eq!(conjugate_factor(Pauli::X, 0.0), vec![(1.0, Pauli::X)]);
        assert_eq!(conjugate_factor(Pauli::Y, 1.234), vec![(1.0, Pauli::Y)]);
        assert_eq!(conjugate_factor(Pauli::I, 1.234), vec![(1.0, Pauli::I)]);
    }

    #[test]
    fn chsh_hamiltonian_rewrite() {
        let g = GaugeAngles::new(vec![0.0, FRAC_PI_4]);
        let r = rotate_frame(&h0(), &g).unwrap();
        let expected = PauliSum::from_pairs(&[(-SQRT_2, "XX"), (SQRT_2, "ZZ")]).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.max_coeff_diff(&expected) < 1e-12);
    }

    #[test]
    fn identity_gauge_is_noop() {
        let h = h0();
        assert_eq!(rotate_frame(&h, &GaugeAngles::zeros(2)).unwrap(), h);
    }

    #[test]
    fn single_site_field_aligns() {
        let h = PauliSum::from_pairs(&[(1.0, "X"), (1.0, "Z")]).unwrap();
        let r = rotate_frame(&h, &GaugeAngles::uniform(1, FRAC_PI_4)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.terms()[0].string.to_string(), "X");
        assert_abs_diff_eq!(r.terms()[0].coeff, SQRT_2, epsilon = 1e-12);
    }

    #[test]
    fn compose_examples() {
        let q = GaugeAngles::new(vec![FRAC_PI_4]);
        assert_abs_diff_eq!(q.compose(&q).unwrap().get(0), FRAC_PI_2, epsilon = 1e-15);
        let g = GaugeAngles::new(vec![0.3, 5.0]);
        assert_eq!(g.compose(&GaugeAngles::zeros(2)).unwrap(), g);
        let t = GaugeAngles::new(vec![3.0 * PI / 2.0]);
        assert_abs_diff_eq!(t.compose(&t).unwrap().get(0), PI, epsilon = 1e-12);
        assert!(q.compose(&g).is_err());
    }

    #[test]
    fn length_mismatch() {
        assert!(rotate_frame(&h0(), &GaugeAngles::zeros(3)).is_err());
        assert!(rotate_qubit(&h0(), 2, 0.1).is_err());
    }

    #[test]
    fn rotate_qubit_matches_full_rotation() {
        let g = GaugeAngles::new(vec![0.0, 0.7]);
        let a = rotate_frame(&h0(), &g).unwrap();
        let b = rotate_qubit(&h0(), 1, 0.7).unwrap();
        assert!(a.max_coeff_diff(&b) < 1e-15);
    }

    #[test]
    fn angle_tokens() {
        assert_abs_diff_eq!(parse_angle("pi/4").unwrap(), FRAC_PI_4);
        assert_abs_diff_eq!(parse_angle("-pi/4").unwrap(), -FRAC_PI_4);
        assert_abs_diff_eq!(parse_angle("3pi/4").unwrap(), 3.0 * FRAC_PI_4);
        assert_abs_diff_eq!(parse_angle("3*pi/2").unwrap(), 3.0 * FRAC_PI_2);
        assert_abs_diff_eq!(parse_angle("PI").unwrap(), PI);
        assert_abs_diff_eq!(parse_angle("0.5").unwrap(), 0.5);
        for bad in ["", "pie", "pi/0", "x/4", "inf"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
        let g = GaugeAngles::parse_list("0, pi/4").unwrap();
        assert_eq!(g.as_slice(), &[0.0, FRAC_PI_4]);
    }

    #[test]
    fn normalization_stays_in_range() {
        assert_eq!(normalize_angle(-1e-300), 0.0);
        assert!(normalize_angle(-1e-17) < TAU);
        assert_abs_diff_eq!(normalize_angle(-FRAC_PI_4), TAU - FRAC_PI_4);
    }
}
