mod common;

use common::{c, stirling_log_gamma};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specfun::{gamma, log_gamma, Error};
use std::f64::consts::PI;

#[test]
fn classical_values() {
    let g = gamma(c(0.5, 0.0)).unwrap();
    assert!((g.re - PI.sqrt()).abs() < 1e-14 && g.im.abs() < 1e-14);
    let g = gamma(c(5.0, 0.0)).unwrap();
    assert!((g.re - 24.0).abs() < 24.0 * 1e-13);
    assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-13);
    assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-13);
}

#[test]
fn two_method_oracle_at_1_plus_i() {
    // Lanczos route vs the Stirling + recurrence route.
    let z = c(1.0, 1.0);
    let a = gamma(z).unwrap();
    let b = stirling_log_gamma(z).exp();
    assert!((a - b).norm() / b.norm() < 1e-13, "{a} vs {b}");
}

#[test]
fn agrees_with_stirling_oracle_across_the_strip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let z = c(rng.gen_range(0.1..60.0), rng.gen_range(-150.0..150.0));
        let a = log_gamma(z).unwrap();
        let b = stirling_log_gamma(z);
        assert!((a - b).norm() < 1e-11 * b.norm().max(1.0), "z={z} {a} vs {b}");
    }
}

#[test]
fn exp_log_gamma_matches_gamma() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let z = c(rng.gen_range(1.0..10.0), rng.gen_range(-50.0..50.0));
        let a = gamma(z).unwrap();
        let b = log_gamma(z).unwrap().exp();
        assert!((a - b).norm() < 1e-12 * a.norm().max(1e-300));
    }
}

#[test]
fn reflection_and_duplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let z = c(rng.gen_range(0.1..0.9), rng.gen_range(-20.0..20.0));
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
        let rhs = PI / (PI * z).sin();
        assert!((lhs - rhs).norm() < 1e-11 * rhs.norm(), "reflection at {z}");
        // duplication: Gamma(z) Gamma(z+1/2) = 2^{1-2z} sqrt(pi) Gamma(2z)
        let w = c(rng.gen_range(0.2..5.0), rng.gen_range(-20.0..20.0));
        let lhs = gamma(w).unwrap() * gamma(w + 0.5).unwrap();
        let rhs = (Complex64::new(2.0f64.ln(), 0.0) * (1.0 - 2.0 * w)).exp()
            * PI.sqrt()
            * gamma(2.0 * w).unwrap();
        assert!((lhs - rhs).norm() < 1e-11 * rhs.norm(), "duplication at {w}");
    }
}

#[test]
fn continuous_along_vertical_lines() {
    // No branch jumps: step along Re z = const and require small increments.
    for &re in &[0.3, 1.0, 4.5] {
        let mut prev = log_gamma(c(re, -40.0)).unwrap();
        let mut y = -40.0 + 0.05;
        while y <= 40.0 {
            let cur = log_gamma(c(re, y)).unwrap();
            assert!(
                (cur - prev).norm() < 1.0,
                "jump at re={re}, y={y}: {prev} -> {cur}"
            );
            prev = cur;
            y += 0.05;
        }
    }
}

#[test]
fn pole_and_overflow_errors() {
    assert!(matches!(gamma(c(0.0, 0.0)), Err(Error::GammaPole(_))));
    assert!(matches!(gamma(c(-3.0, 0.0)), Err(Error::GammaPole(_))));
    assert!(matches!(log_gamma(c(-7.0, 0.0)), Err(Error::GammaPole(_))));
    assert!(matches!(gamma(c(200.0, 0.0)), Err(Error::Overflow)));
    // log_gamma handles what gamma cannot represent
    assert!(log_gamma(c(200.0, 0.0)).is_ok());
}

#[test]
fn left_half_plane_reflection_values() {
    // Gamma(-0.5) = -2 sqrt(pi)
    let g = gamma(c(-0.5, 0.0)).unwrap();
    assert!((g.re + 2.0 * PI.sqrt()).abs() < 1e-12 && g.im.abs() < 1e-12);
    // deep left, off axis: compare against Stirling + reflection done by hand
    let z = c(-30.3, 2.0);
    let direct = log_gamma(z).unwrap().exp();
    let refl = PI / ((PI * z).sin() * stirling_log_gamma(1.0 - z).exp());
    assert!((direct - refl).norm() < 1e-10 * refl.norm());
}
