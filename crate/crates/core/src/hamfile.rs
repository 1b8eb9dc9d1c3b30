//! Line-oriented Hamiltonian text format.
//!
//! ```text
//! # comment
//! 1   IZ
//! -1  ZI
//! 2.0 XX
//! ```
//!
//! Each term line is a real coefficient, whitespace, then a Pauli string with
//! qubit 1 leftmost. Blank lines and lines starting with `#` are skipped.

use crate::error::{Error, Result};
use crate::pauli::{parse_pauli, PauliSum, PauliTerm};

pub fn parse_hamiltonian(text: &str) -> Result<PauliSum> {
    let mut terms: Vec<PauliTerm> = Vec::new();
    let mut n: Option<usize> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let coeff_tok = fields.next().expect("nonempty line");
        let pauli_tok = fields
            .next()
            .ok_or_else(|| err("expected `<coefficient> <pauli string>`".into()))?;
        if let Some(extra) = fields.next() {
            return Err(err(format!("unexpected trailing token {extra:?}")));
        }
        let coeff: f64 = coeff_tok
            .parse()
            .map_err(|_| err(format!("malformed coefficient {coeff_tok:?}")))?;
        if !coeff.is_finite() {
            return Err(err(format!("non-finite coefficient {coeff_tok:?}")));
        }
        let string = parse_pauli(pauli_tok).map_err(|e| err(e.to_string()))?;
        match n {
            None => n = Some(string.num_qubits()),
            Some(n) if n != string.num_qubits() => {
                return Err(err(format!(
                    "string {pauli_tok} has {} qubits, expected {n}",
                    string.num_qubits()
                )))
            }
            Some(_) => {}
        }
        terms.push(PauliTerm::new(coeff, string));
    }

    let n = n.ok_or(Error::Parse {
        line: last_line.max(1),
        message: "no terms".into(),
    })?;
    Ok(PauliSum::from_terms(n, terms)?.canonical())
}

/// One term per line in canonical order, coefficients with 17 significant digits.
pub fn serialize_hamiltonian(h: &PauliSum) -> String {
    let mut out = String::new();
    for t in h {
        out.push_str(&format!("{:.16e} {}\n", t.coeff, t.string));
    }
    out
}
