//! Continuous gauge-angle search.
//!
//! The objective is the greedy stabilizer energy in the gauged frame. It is
//! only piecewise smooth, because the greedy selection switches discretely
//! as the angles move, so the search is derivative-free: cyclic coordinate
//! descent where each coordinate gets a coarse scan of the full period
//! followed by a golden-section refinement around the best scan point.
//!
//! Restart 0 starts from the ungauged frame. Restart `r > 0` draws its
//! starting angles from ChaCha8 seeded with `seed` on stream `r`, each angle
//! uniform in `[0, 2π)`, so results depend only on the configuration.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauge::{normalize_angle, GaugeAngles};
use crate::pauli::PauliSum;
use crate::stabilizer::{gauged_energy, StabilizerSet};

const SCAN_POINTS: usize = 16;
const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub seed: u64,
    pub max_sweeps: usize,
    pub angle_tol: f64,
    pub energy_tol: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            restarts: 8,
            seed: 0,
            max_sweeps: 200,
            angle_tol: 1e-8,
            energy_tol: 1e-10,
        }
    }
}

impl OptimizerConfig {
    fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_sweeps == 0 {
            return Err(Error::InvalidInput(
                "restarts and max_sweeps must be positive".into(),
            ));
        }
        if !(self.angle_tol > 0.0 && self.energy_tol > 0.0) {
            return Err(Error::InvalidInput("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptResult {
    pub angles: GaugeAngles,
    pub energy: f64,
    pub stabilizers: StabilizerSet,
    pub converged: bool,
    pub restart_index: usize,
    pub sweeps: usize,
}

/// Greedy gauged stabilizer energy with a full-size selection.
pub fn objective(h: &PauliSum, g: &GaugeAngles) -> Result<f64> {
    Ok(gauged_energy(h, g, h.num_qubits())?.energy)
}

fn eval(h: &PauliSum, angles: &[f64]) -> f64 {
    objective(h, &GaugeAngles::new(angles.to_vec())).expect("lengths agree")
}

/// Minimize along coordinate `q`, returning the new angle and energy. Never
/// returns a worse point than the current one.
fn line_search(h: &PauliSum, angles: &mut [f64], q: usize, current: f64, tol: f64) -> (f64, f64) {
    let start = angles[q];
    let mut f = |t: f64| {
        angles[q] = normalize_angle(t);
        eval(h, angles)
    };
    let (mut best_t, mut best_e) = (start, current);
    let step = TAU / SCAN_POINTS as f64;
    for k in 1..SCAN_POINTS {
        let t = start + k as f64 * step;
        let e = f(t);
        if e < best_e {
            best_t = t;
            best_e = e;
        }
    }

    let (mut lo, mut hi) = (best_t - step, best_t + step);
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    while hi - lo > tol {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
    }
    for (t, e) in [(c, fc), (d, fd)] {
        if e < best_e {
            best_t = t;
            best_e = e;
        }
    }
    let mid = 0.5 * (lo + hi);
    let e_mid = f(mid);
    if e_mid < best_e {
        best_t = mid;
        best_e = e_mid;
    }

    angles[q] = normalize_angle(best_t);
    (angles[q], best_e)
}

struct Run {
    angles: Vec<f64>,
    energy: f64,
    converged: bool,
    sweeps: usize,
}

fn descend(h: &PauliSum, start: Vec<f64>, cfg: &OptimizerConfig) -> Run {
    let mut angles = start;
    let mut energy = eval(h, &angles);
    for sweep in 1..=cfg.max_sweeps {
        let before = energy;
        for q in 0..angles.len() {
            energy = line_search(h, &mut angles, q, energy, cfg.angle_tol).1;
        }
        if before - energy < cfg.energy_tol {
            return Run {
                angles,
                energy,
                converged: true,
                sweeps: sweep,
            };
        }
    }
    Run {
        angles,
        energy,
        converged: false,
        sweeps: cfg.max_sweeps,
    }
}

fn starting_angles(n: usize, seed: u64, restart: usize) -> Vec<f64> {
    if restart == 0 {
        return vec![0.0; n];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    (0..n).map(|_| rng.random_range(0.0..TAU)).collect()
}

/// Best of `cfg.restarts` coordinate-descent runs; ties go to the lowest
/// restart index.
pub fn optimize(h: &PauliSum, cfg: &OptimizerConfig) -> Result<OptResult> {
    cfg.validate()?;
    if h.is_empty() {
        return Err(Error::InvalidInput("cannot optimize an empty Hamiltonian".into()));
    }
    let n = h.num_qubits();
    let h = h.canonical();
    let runs: Vec<Run> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| descend(&h, starting_angles(n, cfg.seed, r), cfg))
        .collect();
    let (restart_index, best) = runs
        .into_iter()
        .enumerate()
        .reduce(|a, b| if b.1.energy < a.1.energy { b } else { a })
        .expect("at least one restart");

    let angles = GaugeAngles::new(best.angles);
    let scored = gauged_energy(&h, &angles, n)?;
    Ok(OptResult {
        angles,
        energy: scored.energy,
        stabilizers: scored.stabilizers,
        converged: best.converged,
        restart_index,
        sweeps: best.sweeps,
    })
}
