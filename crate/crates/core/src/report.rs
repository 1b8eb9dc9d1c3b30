//! JSON-serializable result records.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::gauge::GaugeAngles;
use crate::pauli::PauliSum;
use crate::sequential::{QubitChoice, SweepTrace};
use crate::stabilizer::{SignedPauli, StabilizerSet};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Stab,
    GaugeFixed,
    SweepPi4,
    SweepAnalytic,
    Optimize,
    Exact,
    Chsh,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermReport {
    pub coeff: f64,
    pub pauli: String,
}

pub fn term_reports(h: &PauliSum) -> Vec<TermReport> {
    h.iter()
        .map(|t| TermReport {
            coeff: t.coeff,
            pauli: t.string.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceReport {
    pub steps: Vec<QubitChoice>,
    pub reduced_hamiltonians: Vec<Vec<TermReport>>,
    pub final_energy: f64,
}

impl From<&SweepTrace> for TraceReport {
    fn from(t: &SweepTrace) -> Self {
        TraceReport {
            steps: t.steps.clone(),
            reduced_hamiltonians: t.reduced_hamiltonians.iter().map(term_reports).collect(),
            final_energy: t.final_energy,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OptimizerInfo {
    pub converged: bool,
    pub restart_index: usize,
    pub sweeps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChshInfo {
    pub rule: String,
    pub classical_bias: String,
    pub classical_bias_value: f64,
    pub classical_win_probability: f64,
    pub quantum_bias: f64,
    pub quantum_win_probability: f64,
    pub hamiltonian: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub method: Method,
    pub num_qubits: usize,
    pub energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angles: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilizers: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_energy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    /// Candidates skipped because the group already fixed the opposite sign.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sign_conflicts: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimizer: Option<OptimizerInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chsh: Option<ChshInfo>,
    pub config: BTreeMap<String, String>,
}

impl Report {
    pub fn new(method: Method, num_qubits: usize, energy: f64) -> Self {
        Report {
            method,
            num_qubits,
            energy,
            angles: None,
            stabilizers: None,
            exact_energy: None,
            gap: None,
            sign_conflicts: Vec::new(),
            trace: None,
            optimizer: None,
            chsh: None,
            config: BTreeMap::new(),
        }
    }

    pub fn with_angles(mut self, g: &GaugeAngles) -> Self {
        self.angles = Some(g.as_slice().to_vec());
        self
    }

    pub fn with_stabilizers(mut self, s: &StabilizerSet) -> Self {
        self.stabilizers = Some(s.labels());
        self
    }

    pub fn with_conflicts(mut self, conflicts: &[SignedPauli]) -> Self {
        self.sign_conflicts = conflicts.iter().map(|c| c.to_string()).collect();
        self
    }

    /// Record the exact ground energy and the gap `energy − exact`.
    pub fn with_exact(mut self, exact: f64) -> Self {
        self.exact_energy = Some(exact);
        self.gap = Some(self.energy - exact);
        self
    }

    pub fn with_config<K: Into<String>, V: ToString>(mut self, key: K, value: V) -> Self {
        self.config.insert(key.into(), value.to_string());
        self
    }
}
