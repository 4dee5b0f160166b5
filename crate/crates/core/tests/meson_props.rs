use std::f64::consts::{FRAC_1_SQRT_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use realism_core::exec::{meson_grid, Execution, GridAxis};
use realism_core::linalg::{ComplexMatrix2, TwoParticleState, C64, ONE};
use realism_core::meson::*;

const SAMPLES: usize = 1000;

/// Random parameters; `equal` forces `|p| = |q|` with independent phases.
fn random_params(rng: &mut impl Rng, equal: bool) -> MixingParams {
    let phi = if equal {
        PI / 4.0
    } else {
        rng.gen_range(0.2..1.37)
    };
    let p = C64::from_polar(phi.cos(), rng.gen_range(-PI..PI));
    let q = C64::from_polar(phi.sin(), rng.gen_range(-PI..PI));
    let gamma = rng.gen_range(0.05..1.0);
    let dg = rng.gen_range(-1.9..1.9) * gamma;
    let m_l = rng.gen_range(0.0..5.0);
    let dm = rng.gen_range(0.1..3.0);
    MixingParams::new(p, q, m_l, m_l + dm, gamma - dg / 2.0, gamma + dg / 2.0).unwrap()
}

#[test]
fn g_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..SAMPLES {
        let m = random_params(&mut rng, false);
        let (t1, t2) = (rng.gen_range(0.0..4.0), rng.gen_range(0.0..4.0));
        let (dm, dg, gamma) = (m.delta_m(), m.delta_gamma(), m.gamma());
        let g = g_functions(&m, t1);
        let decay = (-gamma * t1).exp() / 2.0;
        let ch = (dg * t1 / 2.0).cosh();
        let sh = (dg * t1 / 2.0).sinh();
        let c = (dm * t1).cos();
        assert!((g.g_plus.norm_sqr() - decay * (ch + c)).abs() < 1e-12);
        assert!((g.g_minus.norm_sqr() - decay * (ch - c)).abs() < 1e-12);
        let cross = g.g_plus.conj() * g.g_minus;
        let expected = C64::new(sh, (dm * t1).sin()) * -decay;
        assert!((cross - expected).norm() < 1e-12);
        let sum = g.g_plus.norm_sqr() + g.g_minus.norm_sqr();
        assert!((sum - (-gamma * t1).exp() * ch).abs() < 1e-12);

        let (a, b, ab) = (g_functions(&m, t2), g, g_functions(&m, t1 + t2));
        assert!((ab.g_plus - (a.g_plus * b.g_plus + a.g_minus * b.g_minus)).norm() < 1e-12);
        assert!((ab.g_minus - (a.g_plus * b.g_minus + a.g_minus * b.g_plus)).norm() < 1e-12);
    }
}

fn s_oracle(m: &MixingParams, t: f64) -> ComplexMatrix2 {
    let (p, q) = (m.p(), m.q());
    let d = ComplexMatrix2::new(q, p, q, -p).scale(ONE / (p * q * 2.0));
    let d_inv = ComplexMatrix2::new(p, p, q, -q);
    let (el, eh) = m.complex_energies();
    let u = ComplexMatrix2::diag((C64::new(0.0, -t) * el).exp(), (C64::new(0.0, -t) * eh).exp());
    d_inv * u * d
}

#[test]
fn s_matrix_group_property_and_factorisation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..SAMPLES {
        let m = random_params(&mut rng, false);
        let (t1, t2) = (rng.gen_range(0.0..4.0), rng.gen_range(0.0..4.0));
        let s12 = s_matrix_single(&m, t1 + t2);
        let product = s_matrix_single(&m, t1) * s_matrix_single(&m, t2);
        assert!(s12.max_abs_diff(&product) < 1e-12);
        assert!(s_matrix_single(&m, t1).max_abs_diff(&s_oracle(&m, t1)) < 1e-12);
    }
}

#[test]
fn closed_forms_agree_with_amplitudes_on_random_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let kinds = [ScenarioKind::Scen32, ScenarioKind::Scen31, ScenarioKind::Scen12];
    for _ in 0..100 {
        let m = random_params(&mut rng, true);
        assert!((m.p().norm() - FRAC_1_SQRT_2).abs() < 1e-15);
        let t3 = rng.gen_range(0.0..5.0);
        let t2 = rng.gen_range(0.0..=t3);
        for kind in kinds {
            let scen = MeasurementScenario::flavor_m(kind, t2, t3);
            let oracle = joint_flavor_probability(&m, &scen).unwrap();
            let closed = closed_form_probability(&m, &scen).unwrap();
            assert!((oracle - closed).abs() < 1e-10, "{kind:?}: {oracle} vs {closed}");
        }
    }
}

#[test]
fn scenario_31_merges_the_middle_evolution() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let psi = bell_state_plus();
    for _ in 0..100 {
        let m = random_params(&mut rng, false);
        let t3 = rng.gen_range(0.0..5.0);
        let t2 = rng.gen_range(0.0..=t3);
        let p1 = Flavor::M.projector();
        let split = {
            let s = psi.apply_first(&p1);
            let a = s_matrix_single(&m, t2);
            let b = s_matrix_single(&m, t3 - t2);
            s.apply(&a, &a).apply(&b, &b).apply_second(&p1)
        };
        let merged = scenario_state(&m, &MeasurementScenario::flavor_m(ScenarioKind::Scen31, t2, t3)).unwrap();
        assert!(split.max_abs_diff(&merged) < 1e-12);
    }
}

#[test]
fn norms_never_grow_under_dissipative_evolution() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut checked = 0;
    for i in 0..400 {
        let m = random_params(&mut rng, i % 2 == 0);
        if !m.is_dissipative() {
            assert!(!m.has_equal_mixing());
            continue;
        }
        checked += 1;
        let mut state = TwoParticleState(std::array::from_fn(|_| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        }));
        let mut norm = state.norm_sqr();
        for _ in 0..4 {
            let s = s_matrix_single(&m, rng.gen_range(0.0..2.0));
            state = state.apply(&s, &s);
            let after = state.norm_sqr();
            assert!(after <= norm * (1.0 + 1e-12), "{after} > {norm}");
            norm = after;
            let f = if rng.gen_bool(0.5) { Flavor::M } else { Flavor::MBar };
            state = if rng.gen_bool(0.5) {
                state.apply_first(&f.projector())
            } else {
                state.apply_second(&f.projector())
            };
            assert!(state.norm_sqr() <= norm * (1.0 + 1e-12));
            norm = state.norm_sqr();
        }
    }
    assert!(checked >= 200);
}

#[test]
fn margin_is_one_minus_cosine_sum_at_zero_kappa() {
    let grid = meson_grid(0.0, GridAxis::new(0.01, 3.13, 80), GridAxis::new(0.01, 3.13, 80), Execution::default());
    let mut min = f64::INFINITY;
    let mut argmin = (0.0, 0.0);
    for p in &grid {
        let Some(r) = p.result else { continue };
        assert!((r.margin - (1.0 - r.cosine_lhs)).abs() < 1e-12);
        if r.margin < min {
            min = r.margin;
            argmin = (p.alpha, p.beta);
        }
    }
    assert!(min <= -0.49);
    // the global minimum -1/2 sits at alpha = beta = pi/3, approached from alpha > beta
    assert!((argmin.0 - PI / 3.0).abs() < 0.1 && (argmin.1 - PI / 3.0).abs() < 0.1);
}

#[test]
fn bs_point_stays_violated() {
    let kappa = preset(Species::Bs).kappa().unwrap();
    let r = lgw2_meson_margin(kappa, 3.0 * PI / 8.0, 3.0 * PI / 10.0).unwrap();
    let r0 = lgw2_meson_margin(0.0, 3.0 * PI / 8.0, 3.0 * PI / 10.0).unwrap();
    assert!(r.violated());
    assert!((r.margin - r0.margin).abs() < 1e-3);
}
