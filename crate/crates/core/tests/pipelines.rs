mod common;

use approx::assert_abs_diff_eq;
use common::*;
use gaugestab::gauge::rotate_qubit;
use gaugestab::sequential::sweep_ascending;
use gaugestab::{
    classical_bias, game_to_hamiltonian, ground_energy, objective, optimize, reduce,
    rotate_frame, stabilizer_energy, sweep, GaugeAngles, ModelSpec, OptimizerConfig, PauliSum,
    SweepMode, XorGameRule,
};
use rand::seq::SliceRandom;
use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2, TAU};

fn h2_mid() -> PauliSum {
    ModelSpec::H2Mid.build().unwrap()
}

#[test]
fn sweep_snapshots_on_intermediate_h2() {
    let trace = sweep_ascending(&h2_mid(), SweepMode::FixedPi4).unwrap();
    let first = PauliSum::from_pairs(&[(-FRAC_1_SQRT_2, "I"), (1.0, "Z"), (SQRT_2, "X")]).unwrap();
    assert!(trace.reduced_hamiltonians[0].max_coeff_diff(&first) < 1e-12);

    // Gauging the remaining qubit gives (1+√2)/√2 X' + (1−√2)/√2 Z' − 1/√2.
    let second = rotate_qubit(&trace.reduced_hamiltonians[0], 0, std::f64::consts::FRAC_PI_4).unwrap();
    let expected = PauliSum::from_pairs(&[
        (-FRAC_1_SQRT_2, "I"),
        ((1.0 + SQRT_2) / SQRT_2, "X"),
        ((1.0 - SQRT_2) / SQRT_2, "Z"),
    ])
    .unwrap();
    assert!(second.max_coeff_diff(&expected) < 1e-12);

    let last = &trace.reduced_hamiltonians[1];
    assert_eq!(last.num_qubits(), 0);
    assert_abs_diff_eq!(last.constant(), -1.0 - SQRT_2, epsilon = 1e-12);
    assert_abs_diff_eq!(trace.final_energy, -1.0 - SQRT_2, epsilon = 1e-12);
}

#[test]
fn sweep_is_a_gauged_stabilizer_state() {
    let mut rng = rng(31);
    for _ in 0..100 {
        let h = random_hamiltonian(&mut rng, 3, 8);
        let n = h.num_qubits();
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(&mut rng);
        let exact = ground_energy(&h).unwrap();
        for mode in [SweepMode::FixedPi4, SweepMode::Analytic] {
            let trace = sweep(&h, mode, &order).unwrap();
            let rotated = rotate_frame(&h, &trace.angles()).unwrap();
            let e = stabilizer_energy(&rotated, &trace.stabilizers()).unwrap();
            assert_abs_diff_eq!(e, trace.final_energy, epsilon = 1e-9);
            assert!(trace.final_energy >= exact - 1e-9);
            assert_eq!(trace.steps.len(), n);
            assert_eq!(trace.reduced_hamiltonians.last().unwrap().num_qubits(), 0);
        }
    }
}

#[test]
fn snapshots_chain_step_by_step() {
    let mut rng = rng(32);
    for _ in 0..50 {
        let h = random_hamiltonian(&mut rng, 3, 8);
        let trace = sweep_ascending(&h, SweepMode::Analytic).unwrap();
        let mut prev = h.clone();
        for (step, snap) in trace.steps.iter().zip(&trace.reduced_hamiltonians) {
            // Ascending order always processes the leftmost remaining qubit.
            let rotated = rotate_qubit(&prev, 0, step.theta).unwrap();
            let next = reduce(&rotated, 0, step.op, step.eigenvalue).unwrap();
            assert_eq!(&next, snap);
            prev = next;
        }
    }
}

#[test]
fn analytic_sweep_solves_decoupled_fields() {
    let mut rng = rng(33);
    for _ in 0..20 {
        let n = 4;
        let mut pairs = Vec::new();
        for q in 0..n {
            let mut s = vec!['I'; n];
            s[q] = 'X';
            pairs.push((rand::Rng::random_range(&mut rng, -2.0..2.0), s.iter().collect::<String>()));
            s[q] = 'Z';
            pairs.push((rand::Rng::random_range(&mut rng, -2.0..2.0), s.iter().collect::<String>()));
        }
        let refs: Vec<(f64, &str)> = pairs.iter().map(|(c, s)| (*c, s.as_str())).collect();
        let h = PauliSum::from_pairs(&refs).unwrap();
        let trace = sweep_ascending(&h, SweepMode::Analytic).unwrap();
        assert_abs_diff_eq!(trace.final_energy, ground_energy(&h).unwrap(), epsilon = 1e-9);
    }
}

/// Product state fixing Z' on both qubits with eigenvalue +1 has energy
/// `cos b − cos a + 2 sin a sin b`. Minimizing over b first leaves
/// `−cos a − √(1 + 4 sin² a)`, scanned densely over a.
#[test]
fn intermediate_h2_product_minimum_oracle() {
    let steps = 1_000_000;
    let reduced = (0..steps)
        .map(|k| {
            let a = TAU * k as f64 / steps as f64;
            -a.cos() - (1.0 + 4.0 * a.sin().powi(2)).sqrt()
        })
        .fold(f64::INFINITY, f64::min);
    assert_abs_diff_eq!(reduced, -2.5, epsilon = 1e-9);

    // Stationarity: cos a = 1/2 and tan b = 2 sin a.
    let a = (0.5f64).acos();
    let b = std::f64::consts::PI + (2.0 * a.sin()).atan();
    let f = b.cos() - a.cos() + 2.0 * a.sin() * b.sin();
    assert_abs_diff_eq!(f, -2.5, epsilon = 1e-12);

    // A grid over the real objective never goes below the product minimum.
    let h = h2_mid();
    let grid = 120;
    let mut best = f64::INFINITY;
    for i in 0..grid {
        for j in 0..grid {
            let g = GaugeAngles::new(vec![TAU * i as f64 / grid as f64, TAU * j as f64 / grid as f64]);
            best = best.min(objective(&h, &g).unwrap());
        }
    }
    assert!(best >= -2.5 - 1e-9, "{best}");
    assert!(best < -2.49, "{best}");

    let r = optimize(&h, &OptimizerConfig::default()).unwrap();
    assert_abs_diff_eq!(r.energy, -2.5, epsilon = 1e-6);
}

#[test]
fn optimizer_invariants_on_random_instances() {
    let mut rng = rng(34);
    let cfg = OptimizerConfig {
        restarts: 4,
        ..OptimizerConfig::default()
    };
    for _ in 0..40 {
        let h = random_hamiltonian(&mut rng, 3, 8);
        let n = h.num_qubits();
        let r = optimize(&h, &cfg).unwrap();
        let plain = objective(&h, &GaugeAngles::zeros(n)).unwrap();
        let exact = ground_energy(&h).unwrap();
        assert!(r.energy <= plain + cfg.energy_tol, "{} > {plain}", r.energy);
        assert!(r.energy >= exact - 1e-9);
        assert_abs_diff_eq!(r.energy, objective(&h, &r.angles).unwrap(), epsilon = cfg.energy_tol);
    }
}

#[test]
fn optimizer_beats_fixed_sweeps_on_builtin_models() {
    let cfg = OptimizerConfig::default();
    for spec in [ModelSpec::Chsh, ModelSpec::H2Bound, ModelSpec::H2Asym, ModelSpec::H2Mid] {
        let h = spec.build().unwrap();
        let r = optimize(&h, &cfg).unwrap();
        let s = sweep_ascending(&h, SweepMode::FixedPi4).unwrap();
        assert!(r.energy <= s.final_energy + cfg.energy_tol, "{}", spec.kind());
    }
}

#[test]
fn optimizer_is_deterministic() {
    let cfg = OptimizerConfig {
        seed: 99,
        ..OptimizerConfig::default()
    };
    let a = optimize(&h2_mid(), &cfg).unwrap();
    let b = optimize(&h2_mid(), &cfg).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.energy.to_bits(), b.energy.to_bits());
}

#[test]
fn optimizer_on_extremal_ising() {
    let h = ModelSpec::ising_chain(4, 0.0, 1.0, 1.0).build().unwrap();
    let r = optimize(&h, &OptimizerConfig::default()).unwrap();
    assert_abs_diff_eq!(r.energy, -4.0 * SQRT_2, epsilon = 1e-6);
}

#[test]
fn pi_shifted_frames_score_the_same() {
    let mut rng = rng(35);
    for _ in 0..50 {
        let h = random_hamiltonian(&mut rng, 3, 8);
        let g = random_angles(&mut rng, h.num_qubits());
        let shifted = g.compose(&GaugeAngles::uniform(h.num_qubits(), std::f64::consts::PI)).unwrap();
        assert_abs_diff_eq!(
            objective(&h, &g).unwrap(),
            objective(&h, &shifted).unwrap(),
            epsilon = 1e-9
        );
    }
}

/// With the observables pinned to X and Z, the ground energy is minus the
/// sum of singular values of the 2×2 spin table, `√(4 + 2|det|)`.
#[test]
fn game_ground_energy_closed_form() {
    for rule in XorGameRule::all() {
        let s = |i, j| rule.spin(i, j) as f64;
        let det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
        let expected = -(4.0 + 2.0 * det.abs()).sqrt();
        let h = game_to_hamiltonian(&rule);
        assert_abs_diff_eq!(ground_energy(&h).unwrap(), expected, epsilon = 1e-9);

        let beta_c = classical_bias(&rule);
        let classical = *beta_c.numer() as f64 / *beta_c.denom() as f64;
        let odd = (0..4).filter(|k| rule.f(k / 2, k % 2)).count() % 2 == 1;
        if odd {
            assert!(ground_energy(&h).unwrap() <= -4.0 * classical + 1e-9, "{rule}");
        }
    }
}

#[test]
fn optimizer_reaches_chsh_quantum_value() {
    let h = game_to_hamiltonian(&XorGameRule::chsh());
    let beta_q = gaugestab::quantum_bias(
        &XorGameRule::chsh(),
        &gaugestab::QuantumStrategy::chsh_optimal(),
    )
    .unwrap();
    let r = optimize(&h, &OptimizerConfig::default()).unwrap();
    assert_abs_diff_eq!(r.energy, -4.0 * beta_q, epsilon = 1e-6);
}
