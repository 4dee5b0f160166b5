use std::f64::consts::PI;

use proptest::prelude::*;

use realism_core::linalg::{ComplexMatrix2, Spinor, C64};
use realism_core::outcome::Sign;
use realism_core::spin::*;

fn spinor(a: (f64, f64), b: (f64, f64)) -> Spinor {
    let v = Spinor::new(C64::new(a.0, a.1), C64::new(b.0, b.1));
    v.scale(C64::new(1.0 / v.norm_sqr().sqrt(), 0.0))
}

/// The state orthogonal to `v`.
fn orthogonal(v: &Spinor) -> Spinor {
    Spinor::new(-v.0[1].conj(), v.0[0].conj())
}

fn hermitian(h0: f64, hx: f64, hy: f64, hz: f64) -> ComplexMatrix2 {
    ComplexMatrix2::new(
        C64::new(h0 + hz, 0.0),
        C64::new(hx, -hy),
        C64::new(hx, hy),
        C64::new(h0 - hz, 0.0),
    )
}

fn component() -> impl Strategy<Value = (f64, f64)> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_filter("nonzero", |(a, b)| a.abs() + b.abs() > 0.1)
}

proptest! {
    #[test]
    fn outcome_strings_sum_to_one(
        omega in -5.0..5.0f64,
        gaps in prop::collection::vec(0.01..2.0f64, 1..6),
        thetas in prop::collection::vec(0.0..6.3f64, 6),
        a in component(),
        b in component(),
    ) {
        let m = gaps.len();
        let mut times = vec![0.0];
        for g in &gaps[..m - 1] {
            times.push(times.last().unwrap() + g);
        }
        let axes: Vec<MeasurementAxis> = thetas[..m].iter().map(|&t| MeasurementAxis::new(t)).collect();
        let proto = SpinProtocol::new(omega, times, axes, spinor(a, b)).unwrap();
        let mut total = 0.0;
        for bits in 0..1u32 << m {
            let outcomes: Vec<(usize, Sign)> = (0..m)
                .map(|i| (i, if bits >> i & 1 == 0 { Sign::Plus } else { Sign::Minus }))
                .collect();
            total += proto.sequential_probability(&outcomes).unwrap();
        }
        prop_assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn operators_are_unitary_and_projective(omega in -10.0..10.0f64, dt in 0.0..10.0f64, theta in 0.0..7.0f64) {
        prop_assert!(evolution_operator(omega, dt).is_unitary(1e-12));
        for s in Sign::BOTH {
            let p = projector(MeasurementAxis::new(theta), s);
            prop_assert!(p.is_hermitian(1e-12));
            prop_assert!((p * p).max_abs_diff(&p) < 1e-12);
        }
    }

    #[test]
    fn sigma_is_non_negative(h in (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64), a in component(), b in component()) {
        let h = hermitian(h.0, h.1, h.2, h.3);
        let bra = spinor(a, b);
        let ket = orthogonal(&bra);
        let z = zeno_bound(&h, &bra, &ket, 1.0, 5).unwrap();
        prop_assert!(z.sigma >= -1e-12);
        prop_assert!(z.pair_prob <= z.step * z.step * z.sigma + 1e-12);
    }

    #[test]
    fn short_time_pair_probability_is_quadratic(h in (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64), a in component(), b in component()) {
        let hm = hermitian(h.0, h.1, h.2, h.3);
        let bra = spinor(a, b);
        let ket = orthogonal(&bra);
        // one decade of step sizes
        let steps: Vec<f64> = (0..=10).map(|k| 0.01 * 10f64.powf(k as f64 / 10.0)).collect();
        let scaled: Vec<f64> = steps
            .iter()
            .map(|&d| {
                let r = zeno_bound(&hm, &bra, &ket, d, 2).unwrap();
                (r.pair_prob - d * d * r.sigma).abs() / d.powi(4)
            })
            .collect();
        let c = scaled.iter().cloned().fold(0.0, f64::max);
        let norm2 = h.1 * h.1 + h.2 * h.2 + h.3 * h.3;
        let sigma = zeno_bound(&hm, &bra, &ket, 1.0, 2).unwrap().sigma;
        // fitted constant stays bounded by the quartic Taylor coefficient
        prop_assert!(c <= sigma * norm2 / 3.0 * (1.0 + 1e-3) + 1e-6);
    }
}

#[test]
fn chain_rhs_decreases_to_the_zeno_limit() {
    let mut prev = f64::INFINITY;
    for n in 3..=300 {
        let rhs = lgwn_spin_margin(n).unwrap().rhs;
        assert!(rhs < prev, "n = {n}");
        prev = rhs;
    }
    let rhs = lgwn_spin_margin(1000).unwrap().rhs;
    let limit = PI * PI / 4.0;
    assert!((rhs * 999.0 - limit).abs() / limit < 0.01);
}

#[test]
fn wigner_chain_large_n() {
    let n = 1000;
    let m = wigner_chain_quantum(n, PI, ChainNormalization::Paired).unwrap();
    assert!((m.lhs - 0.5).abs() < 1e-12);
    let expected = PI * PI / (8.0 * (n - 1) as f64);
    assert!((m.rhs - expected).abs() / expected < 0.01);
}

#[test]
fn zeno_rows_track_inverse_chain_length() {
    let mut last: Option<ZenoRow> = None;
    for n in [10, 100, 1000, 10_000] {
        let row = spin_zeno_row(n).unwrap();
        assert!(row.chain_sum <= row.bound);
        if let Some(prev) = last {
            assert!(row.chain_sum < prev.chain_sum);
            let expected = (prev.n - 1) as f64 / (n - 1) as f64;
            assert!((row.chain_sum / prev.chain_sum / expected - 1.0).abs() < 0.05);
        }
        last = Some(row);
    }
}
