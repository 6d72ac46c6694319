use entlaser::engine::{
    apply_loss, apply_phase_mismatch, evolve_rk4, expect_j2, expect_quadratic, CovarianceState, DriftSpec,
};
use entlaser::oracle::{
    apply_loss_channel, build_hamiltonian, build_ideal_state, evolve_exact, expectation, propagate,
    random_spin_state, seeded_rng, spin_vector, FockDensity, FockExpect, FockState,
};
use entlaser::stokes::{arm_number_forms, build_fock_operators, jay_quadratic_forms, number_quadratic_form, FockOperatorSet};
use entlaser::Tolerances;
use std::f64::consts::PI;

struct Moments {
    n: f64,
    j2: f64,
    j: [f64; 3],
}

fn engine(s: &CovarianceState) -> Moments {
    let (jz, jx, jy) = jay_quadratic_forms();
    Moments {
        n: expect_quadratic(s, &number_quadratic_form()),
        j2: expect_j2(s, &Tolerances::default()).unwrap(),
        j: [expect_quadratic(s, &jx), expect_quadratic(s, &jy), expect_quadratic(s, &jz)],
    }
}

fn oracle<S: FockExpect>(s: &S, ops: &FockOperatorSet) -> Moments {
    let tol = Tolerances::default();
    Moments {
        n: expectation(s, &ops.n, &tol).unwrap(),
        j2: expectation(s, &ops.j2, &tol).unwrap(),
        j: spin_vector(s, ops, &tol).unwrap(),
    }
}

/// `⟨N⟩` and `⟨J²⟩` relative, `⟨Jᵢ⟩` on the `⟨N⟩` scale.
fn assert_agree(label: &str, e: &Moments, o: &Moments, tol: f64) {
    assert!(((e.n - o.n) / o.n).abs() < tol, "{label}: N {} vs {}", e.n, o.n);
    assert!(((e.j2 - o.j2) / o.j2).abs() < tol, "{label}: J² {} vs {}", e.j2, o.j2);
    for i in 0..3 {
        assert!((e.j[i] - o.j[i]).abs() / o.n < tol, "{label}: J[{i}] {} vs {}", e.j[i], o.j[i]);
    }
}

#[test]
fn source_mismatch_matches_exact_evolution() {
    let tol = Tolerances::default();
    // J² is small here, so its relative error feels the truncation first
    for (tau, cutoff) in [(0.3, 12), (0.5, 16)] {
        let ops = build_fock_operators(cutoff, tol.max_fock_dim).unwrap();
        for (phi, f) in [(0.3, 1.0), (-0.7, 1.0), (0.0, 0.8), (0.0, 1.2), (0.4, 0.9)] {
            let spec = DriftSpec { phase_mismatch: phi, amplitude_ratio: f, ..DriftSpec::lossless(1.0) };
            let gaussian = evolve_rk4(&CovarianceState::vacuum(), &spec, tau, 1e-4).unwrap();
            let e = engine(&apply_phase_mismatch(&gaussian, phi));
            let h = build_hamiltonian(1.0, phi, f, cutoff, tol.max_fock_dim).unwrap();
            let o = oracle(&evolve_exact(&FockState::vacuum(ops.basis), &h, tau, &tol).unwrap(), &ops);
            assert_agree(&format!("tau={tau} phi={phi} f={f}"), &e, &o, 1e-6);
        }
    }
}

#[test]
fn post_hoc_loss_matches_kraus_channel() {
    let tol = Tolerances::default();
    let ops = build_fock_operators(6, tol.max_fock_dim).unwrap();
    let tau = 0.2;
    let rho = FockDensity::from_pure(&build_ideal_state(tau, 6, tol.max_fock_dim).unwrap());
    let gaussian = evolve_rk4(&CovarianceState::vacuum(), &DriftSpec::lossless(1.0), tau, 1e-4).unwrap();
    for eta in [[0.5; 4], [0.9, 0.9, 0.6, 0.6], [0.9, 0.7, 0.8, 0.6], [1.0, 0.3, 0.5, 0.95]] {
        let e = engine(&apply_loss(&gaussian, eta).unwrap());
        let o = oracle(&apply_loss_channel(&rho, eta).unwrap(), &ops);
        assert_agree(&format!("eta={eta:?}"), &e, &o, 1e-6);
    }
}

#[test]
fn arm_numbers_after_loss() {
    let tol = Tolerances::default();
    let ops = build_fock_operators(6, tol.max_fock_dim).unwrap();
    let rho = FockDensity::from_pure(&build_ideal_state(0.2, 6, tol.max_fock_dim).unwrap());
    let gaussian = evolve_rk4(&CovarianceState::vacuum(), &DriftSpec::lossless(1.0), 0.2, 1e-4).unwrap();
    let eta = [0.8, 0.8, 0.4, 0.4];
    let (na, nb) = arm_number_forms();
    let g = apply_loss(&gaussian, eta).unwrap();
    let lossy = apply_loss_channel(&rho, eta).unwrap();
    let oa = expectation(&lossy, &ops.n_a, &tol).unwrap();
    let ob = expectation(&lossy, &ops.n_b, &tol).unwrap();
    assert!((expect_quadratic(&g, &na) / oa - 1.0).abs() < 1e-6);
    assert!((expect_quadratic(&g, &nb) / ob - 1.0).abs() < 1e-6);
    assert!((oa / ob - 2.0).abs() < 1e-12);
}

#[test]
fn single_arm_loss_law_on_random_states() {
    // ⟨(J^A)²⟩ → η²⟨(J^A)²⟩ + ¾η(1−η)⟨N_A⟩
    let tol = Tolerances::default();
    let ops = build_fock_operators(3, tol.max_fock_dim).unwrap();
    for seed in 0..8 {
        let rho = FockDensity::from_pure(&random_spin_state(ops.basis, &mut seeded_rng(seed, 0)));
        let j2a = expectation(&rho, &ops.ja_sq, &tol).unwrap();
        let na = expectation(&rho, &ops.n_a, &tol).unwrap();
        for eta in [0.1, 0.5, 0.77] {
            let lossy = apply_loss_channel(&rho, [eta, eta, 1.0, 1.0]).unwrap();
            let got = expectation(&lossy, &ops.ja_sq, &tol).unwrap();
            let want = eta * eta * j2a + 0.75 * eta * (1.0 - eta) * na;
            assert!((got - want).abs() < 1e-8, "seed {seed} eta {eta}: {got} vs {want}");
        }
    }
}

#[test]
fn ideal_state_is_rotation_invariant() {
    let tol = Tolerances::default();
    let ops = build_fock_operators(8, tol.max_fock_dim).unwrap();
    let state = build_ideal_state(0.4, 8, tol.max_fock_dim).unwrap();
    let rotate = |s: &FockState| FockState {
        basis: s.basis,
        amplitudes: propagate(&ops.j[1], &s.amplitudes, PI / 7.0, &tol).unwrap(),
    };
    let rotated = rotate(&state);
    assert!(state.distance(&rotated) < 1e-10);
    // the same rotation does move a polarized product state
    let product = FockState::number_state(ops.basis, [2, 0, 0, 2]);
    assert!(product.distance(&rotate(&product)) > 0.1);
    let j2 = |s: &FockState| expectation(s, &ops.j2, &tol).unwrap();
    assert!((j2(&state) - j2(&rotated)).abs() < 1e-10);

    // J_z is diagonal in the Fock basis: bin populations by eigenvalue 2·m
    let histogram = |s: &FockState| {
        let mut bins = vec![0.0; 4 * 8 + 1];
        for (i, p) in s.populations().into_iter().enumerate() {
            let [ah, av, bh, bv] = s.basis.occupations(i);
            bins[(ah + bh + 2 * 8) - (av + bv)] += p;
        }
        bins
    };
    for (a, b) in histogram(&state).iter().zip(histogram(&rotated)) {
        assert!((a - b).abs() < 1e-10);
    }
}

#[test]
fn loss_dynamics_match_beam_splitter() {
    // with negligible gain the moment equation is pure damping towards vacuum,
    // i.e. a beam splitter with intensity transmission e^{−2λt}
    let seed = evolve_rk4(&CovarianceState::vacuum(), &DriftSpec::lossless(1.0), 0.6, 1e-4).unwrap();
    let mut spec = DriftSpec::lossless(1e-300);
    spec.loss_a = 0.07;
    spec.loss_b = 0.02;
    let t = 3.0;
    let damped = evolve_rk4(&seed, &spec, seed.t + t, 1e-3).unwrap();
    let (ea, eb) = ((-2.0 * 0.07 * t).exp(), (-2.0 * 0.02 * t).exp());
    let channel = apply_loss(&seed, [ea, ea, eb, eb]).unwrap();
    assert!((damped.sigma - channel.sigma).amax() < 1e-12);
}
