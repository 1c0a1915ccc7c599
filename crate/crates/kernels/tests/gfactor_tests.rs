use kernels::{
    curly_g_eps, curly_g_pm, e_eta, g_eta, g_eta_defining_form, Error, RepresentationParameter,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specfun::gamma;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const LN_2PI: f64 = 1.8378770664093453;

#[test]
fn trig_pair_special_values() {
    assert!((e_eta(0, c(0.0, 0.0)) - 2.0).norm() < 1e-15);
    assert!(e_eta(1, c(0.0, 0.0)).norm() < 1e-15);
    assert!(e_eta(0, c(1.0, 0.0)).norm() < 1e-15);
}

#[test]
fn local_factor_symmetric_point() {
    // ratio is of identical completed-gamma values at s = 1/2
    let v = g_eta(0, c(0.5, 0.0)).unwrap();
    assert!((v - 1.0).norm() < 1e-14);
    let v = g_eta(1, c(0.5, 0.0)).unwrap();
    assert!((v - c(0.0, 1.0)).norm() < 1e-14);
}

#[test]
fn local_factor_two_forms_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for _ in 0..30 {
        let s = c(rng.gen_range(0.1..2.5), rng.gen_range(-20.0..20.0));
        if s.im.abs() < 0.05 {
            continue; // keep away from the real-axis poles/zeros
        }
        for eta in 0..2u8 {
            let a = g_eta(eta, s).unwrap();
            let b = g_eta_defining_form(eta, s).unwrap();
            assert!(
                (a - b).norm() <= 1e-11 * a.norm().max(1e-30),
                "eta={eta}, s={s}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn product_collapses_for_trivial_parameter() {
    let rep = RepresentationParameter::new(
        [c(0.0, 0.0); 4],
        [0, 0, 0, 0],
        0.45,
    )
    .unwrap();
    for &im in &[0.3, -1.7, 4.0] {
        let s = c(0.8, im);
        let lhs = curly_g_eps(&rep, 0, s).unwrap();
        let g = g_eta(0, s).unwrap();
        let rhs = g * g * g * g;
        assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
    }
}

#[test]
fn product_is_polynomially_bounded_on_a_vertical_line() {
    let rep = RepresentationParameter::default_test();
    let mut best = 0.0f64;
    let mut outer = 0.0f64;
    let n = 60;
    for i in 0..n {
        let y = 0.5 + 39.5 * i as f64 / (n - 1) as f64;
        let s = c(1.0, y);
        let v = curly_g_eps(&rep, 0, s).unwrap().norm();
        let envelope = (1.0 + s.norm()).powf(4.0 - 2.0);
        let ratio = v / envelope;
        if i < n * 4 / 5 {
            best = best.max(ratio);
        } else {
            outer = outer.max(ratio);
        }
    }
    assert!(best.is_finite() && best > 0.0);
    // envelope already saturated: the top of the line must not exceed the bulk
    assert!(outer <= best * 1.5, "outer {outer} vs bulk {best}");
}

#[test]
fn paired_parameters_match_direct_product_where_finite() {
    // (μ_1, μ_2) = (−(k−1)/2, (k−1)/2) with k = 3, completed by a unitary pair
    let rep = RepresentationParameter::new(
        [c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.3), c(0.0, -0.3)],
        [0, 1, 1, 0],
        0.45,
    )
    .unwrap();
    for &(re, im) in &[(1.3, 0.7), (2.1, -1.4), (1.7, 3.0)] {
        let s = c(re, im);
        for eps in 0..2u8 {
            let fast = curly_g_eps(&rep, eps, s).unwrap();
            let mut direct = Complex64::new(1.0, 0.0);
            for j in 0..4 {
                direct *= g_eta((eps + rep.beta[j]) % 2, s + rep.mu[j]).unwrap();
            }
            assert!(
                (fast - direct).norm() < 1e-9 * direct.norm(),
                "eps={eps}, s={s}: {fast} vs {direct}"
            );
        }
    }
}

#[test]
fn signed_products_match_eps_combination() {
    let rep = RepresentationParameter::default_test();
    let mut rng = ChaCha8Rng::seed_from_u64(402);
    for _ in 0..25 {
        let u = c(rng.gen_range(0.2..1.5), rng.gen_range(-8.0..8.0));
        let g0 = curly_g_eps(&rep, 0, u).unwrap();
        let g1 = curly_g_eps(&rep, 1, u).unwrap();
        let scale = (u * 4.0 * LN_2PI).exp();
        for &plus in &[true, false] {
            let lhs = curly_g_pm(&rep, plus, u).unwrap();
            let rhs = scale * if plus { g0 - g1 } else { g0 + g1 };
            // the reference combination cancels to e^{−π|Im u|} of its two
            // terms, so grant it the corresponding rounding allowance
            let tol = 1e-10 * lhs.norm().max(1e-30)
                + 5e-12 * scale.norm() * (g0.norm() + g1.norm());
            assert!((lhs - rhs).norm() <= tol, "plus={plus}, u={u}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn sum_of_signed_products_is_twice_even_part() {
    let rep = RepresentationParameter::default_test();
    let mut rng = ChaCha8Rng::seed_from_u64(403);
    for _ in 0..20 {
        let u = c(rng.gen_range(0.2..1.2), rng.gen_range(-6.0..6.0));
        let plus = curly_g_pm(&rep, true, u).unwrap();
        let minus = curly_g_pm(&rep, false, u).unwrap();
        let even = curly_g_eps(&rep, 0, u).unwrap() * (u * 4.0 * LN_2PI).exp() * 2.0;
        assert!((plus + minus - even).norm() < 1e-10 * even.norm().max(1e-30));
    }
}

#[test]
fn trivial_parameter_expansion_oracle() {
    // all spectral parameters and parities zero: the bracket reduces to
    // 16(cos^4 ∓ (i sin)^4 ... ) i.e. 16cos(πu) for + and 16(cos^4+sin^4) for −
    let rep = RepresentationParameter::new([c(0.0, 0.0); 4], [0, 0, 0, 0], 0.45).unwrap();
    for &(re, im) in &[(0.6, 0.0), (0.8, 1.0), (1.1, -2.0), (0.3, 0.4), (1.9, 3.3)] {
        let u = c(re, im);
        let g4 = gamma(u).unwrap().powu(4);
        let (s, co) = ((u * std::f64::consts::PI / 2.0).sin(), (u * std::f64::consts::PI / 2.0).cos());
        let plus = 16.0 * g4 * (co.powu(4) - s.powu(4));
        let minus = 16.0 * g4 * (co.powu(4) + s.powu(4));
        let a = curly_g_pm(&rep, true, u).unwrap();
        let b = curly_g_pm(&rep, false, u).unwrap();
        assert!((a - plus).norm() < 1e-10 * plus.norm().max(1e-30), "u={u}");
        assert!((b - minus).norm() < 1e-10 * minus.norm().max(1e-30), "u={u}");
    }
}

#[test]
fn plus_product_has_exponential_decay_in_height() {
    let rep = RepresentationParameter::default_test();
    let mut bulk = 0.0f64;
    let mut outer = 0.0f64;
    for &re in &[0.3, 0.6, 1.0] {
        for i in 0..40 {
            let y = 1.0 + i as f64;
            let u = c(re, y);
            let v = curly_g_pm(&rep, true, u).unwrap().norm();
            let ratio = v * (std::f64::consts::PI * y).exp()
                * (1.0 + u.norm()).powf(2.0 - 4.0 * re);
            if y < 32.0 {
                bulk = bulk.max(ratio);
            } else {
                outer = outer.max(ratio);
            }
        }
    }
    assert!(bulk.is_finite() && bulk > 0.0);
    assert!(outer <= bulk * 1.5, "outer {outer} vs bulk {bulk}");
}

#[test]
fn region_and_validation_errors() {
    let rep = RepresentationParameter::default_test();
    assert!(matches!(curly_g_eps(&rep, 0, c(0.0, 1.0)), Err(Error::Region { .. })));
    assert!(matches!(curly_g_pm(&rep, true, c(-0.2, 1.0)), Err(Error::Region { .. })));
    assert!(RepresentationParameter::new(
        [c(0.1, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        [0, 0, 0, 0],
        0.45
    )
    .is_err());
    assert!(RepresentationParameter::new([c(0.0, 0.0); 4], [1, 0, 0, 0], 0.45).is_err());
    assert!(RepresentationParameter::new([c(0.0, 0.0); 4], [0, 0, 0, 0], 0.7).is_err());
}
