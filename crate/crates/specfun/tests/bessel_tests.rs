mod common;

use common::{bessel_i_dd_oracle, c, k0_of_1_de_oracle};
use num_complex::Complex64;
use specfun::{bessel_i, bessel_i_scaled, bessel_j, bessel_k, bessel_k_with_strip, Error};
use std::f64::consts::PI;

#[test]
fn k0_at_1_against_de_quadrature_oracle() {
    let oracle = k0_of_1_de_oracle();
    let v = bessel_k(c(0.0, 0.0), 1.0).unwrap().value;
    assert!(v.im.abs() < 1e-14);
    assert!((v.re - oracle).abs() < 1e-12, "{} vs {}", v.re, oracle);
    // and the classical value, as a second independent anchor
    assert!((v.re - 0.421024438240708333).abs() < 1e-12);
}

#[test]
fn k_is_even_in_order() {
    for &(t, x) in &[(3.7, 2.0), (0.9, 0.5), (11.0, 7.5), (40.0, 1.0)] {
        let a = bessel_k(c(0.0, 2.0 * t), x).unwrap().value;
        let b = bessel_k(c(0.0, -2.0 * t), x).unwrap().value;
        assert!((a - b).norm() <= 1e-13 * a.norm().max(1e-300) + 1e-300);
    }
}

#[test]
fn k_i_bridge_identity_on_grid() {
    // 4 cosh(pi t) K_{2it}(x) = (pi i / sinh(pi t)) (I_{2it}(x) - I_{-2it}(x))
    // to 1e-10 absolute on a 20 x 20 grid.
    for i in 0..20 {
        let t = 0.15 + 0.15 * i as f64; // up to 3.0
        for j in 0..20 {
            let x = 0.2 + 0.5 * j as f64; // up to 9.7
            let lhs = 4.0 * (PI * t).cosh() * bessel_k(c(0.0, 2.0 * t), x).unwrap().value;
            let ip = bessel_i(c(0.0, 2.0 * t), x).unwrap().value;
            let im = bessel_i(c(0.0, -2.0 * t), x).unwrap().value;
            let rhs = Complex64::new(0.0, PI) / (PI * t).sinh() * (ip - im);
            assert!(
                (lhs - rhs).norm() < 1e-10 * lhs.norm().max(1.0),
                "t={t} x={x}: {lhs} vs {rhs}"
            );
        }
    }
}

#[test]
fn i_small_argument_limit_and_dd_oracle() {
    // I_0(x) -> 1 as x -> 0+
    let r = bessel_i(c(0.0, 0.0), 1e-8).unwrap();
    assert!((r.value.re - 1.0).abs() < 1e-15);
    // I_1(0.2) against the 20-term double-double oracle
    let r = bessel_i(c(1.0, 0.0), 0.2).unwrap();
    let o = bessel_i_dd_oracle(c(1.0, 0.0), 0.2, 20);
    assert!((r.value - o).norm() < 1e-14);
    assert!(r.tail_bound < 1e-14);
    // complex order
    let nu = c(0.0, 2.6);
    let r = bessel_i(nu, 3.0).unwrap();
    let o = bessel_i_dd_oracle(nu, 3.0, 60);
    assert!((r.value - o).norm() < 1e-13 * o.norm());
}

#[test]
fn i_scaled_matches_unscaled() {
    let nu = c(0.0, 9.0);
    let x = 2.5;
    let plain = bessel_i(nu, x).unwrap().value;
    let scaled = bessel_i_scaled(nu, x, -3.0).unwrap().value;
    assert!((scaled * 3.0f64.exp() - plain).norm() < 1e-12 * plain.norm());
}

#[test]
fn i_bound_in_the_small_argument_regime() {
    // |e^{-pi t} I_{2it}(x)| <= C (1+t)^{-1/2} for 0 < x < sqrt(1+t).
    let mut fitted = 0.0f64;
    let mut last_band = 0.0f64;
    for i in 0..40 {
        let t = 1.0 + i as f64; // 1..40
        let mut band_max = 0.0f64;
        for j in 1..=10 {
            let x = (1.0 + t).sqrt() * j as f64 / 11.0;
            let v = bessel_i_scaled(c(0.0, 2.0 * t), x, -PI * t).unwrap().value;
            band_max = band_max.max(v.norm() * (1.0 + t).sqrt());
        }
        fitted = fitted.max(band_max);
        last_band = band_max;
    }
    assert!(fitted.is_finite() && fitted < 10.0, "fitted C = {fitted}");
    // no growth trend: the last band is not the overall max by a margin
    assert!(last_band < 1.5 * fitted);
}

#[test]
fn j_classical_and_recurrence() {
    // J_0(0+) -> 1
    assert!((bessel_j(c(0.0, 0.0), 1e-9).unwrap().re - 1.0).abs() < 1e-14);
    // three-term recurrence at x = 7: J_2 = (2/x) J_1 - J_0
    let j0 = bessel_j(c(0.0, 0.0), 7.0).unwrap();
    let j1 = bessel_j(c(1.0, 0.0), 7.0).unwrap();
    let j2 = bessel_j(c(2.0, 0.0), 7.0).unwrap();
    let rec = 2.0 / 7.0 * j1 - j0;
    assert!((j2 - rec).norm() < 1e-12);
}

#[test]
fn j_uniform_bound_integer_orders() {
    // |J_k(x)| <= min((2x/k)^k, 1) for k in 2..=30, x in (0, 40].
    for k in 2..=30u32 {
        for step in 1..=80 {
            let x = step as f64 * 0.5;
            let v = bessel_j(c(k as f64, 0.0), x).unwrap().norm();
            let bound = ((2.0 * x / k as f64).powi(k as i32)).min(1.0);
            assert!(v <= bound + 1e-12, "k={k} x={x}: |J|={v} bound={bound}");
        }
    }
}

#[test]
fn j_complex_order_routes_agree() {
    // dd series vs asymptotic expansion in their overlap window
    let nu = c(0.0, 1.4);
    for &x in &[31.0, 36.0, 42.0] {
        let a = bessel_j(nu, x).unwrap(); // asymptotic branch (x >= 3|nu|^2, x >= 30)
        let o = j_series_dd_oracle(nu, x, 400);
        assert!((a - o).norm() < 1e-9 * o.norm().max(1.0), "x={x}: {a} vs {o}");
    }
}

/// Brute-force alternating series in double-double arithmetic.
fn j_series_dd_oracle(nu: Complex64, x: f64, terms: usize) -> Complex64 {
    use specfun::dd::DdC;
    use specfun::dd::Dd;
    let t0 = (nu * (x / 2.0f64).ln() - common::stirling_log_gamma(nu + 1.0)).exp();
    let mut term = DdC::from_c(t0);
    let mut sum = term;
    let q = Dd::from(x / 2.0).mul(Dd::from(x / 2.0)).neg();
    for k in 1..=terms {
        let den = DdC::from_f64(nu.re + k as f64, nu.im).mul(DdC {
            re: Dd::from(k as f64),
            im: Dd::ZERO,
        });
        term = term.mul(DdC { re: q, im: Dd::ZERO }).div(den);
        sum = sum.add(term);
    }
    sum.to_c()
}

#[test]
fn k_derivative_recurrences() {
    // K'_{2it}(x) = -(K_{2it-1}(x) + K_{2it+1}(x))/2, checked against central
    // differences; the second derivative uses the recurrence once more on the
    // already-validated first-derivative combination.
    let h = 1e-5;
    for &(t, x) in &[(0.7, 1.5), (1.3, 0.5), (2.0, 3.0), (0.2, 6.0)] {
        let nu = c(0.0, 2.0 * t);
        let k = |order: Complex64, xx: f64| bessel_k(order, xx).unwrap().value;
        let dnum = (k(nu, x + h) - k(nu, x - h)) / (2.0 * h);
        let drec = -(k(nu - 1.0, x) + k(nu + 1.0, x)) / 2.0;
        assert!((dnum - drec).norm() < 1e-6 * drec.norm().max(1.0), "j=1 t={t} x={x}");
        // j = 2: recurrence applied twice vs central differences of the
        // recurrence form of K'.
        let dp = |xx: f64| -(k(nu - 1.0, xx) + k(nu + 1.0, xx)) / 2.0;
        let d2num = (dp(x + h) - dp(x - h)) / (2.0 * h);
        let d2rec = 0.25 * (k(nu - 2.0, x) + 2.0 * k(nu, x) + k(nu + 2.0, x));
        assert!((d2num - d2rec).norm() < 1e-6 * d2rec.norm().max(1.0), "j=2 t={t} x={x}");
    }
}

#[test]
fn i_derivative_recurrences() {
    // I'_{2it}(x) = (I_{2it-1}(x) + I_{2it+1}(x))/2 against central differences.
    let h = 1e-5;
    for &(t, x) in &[(0.7, 1.5), (1.6, 2.5), (0.3, 4.0)] {
        let nu = c(0.0, 2.0 * t);
        let iv = |order: Complex64, xx: f64| bessel_i(order, xx).unwrap().value;
        let dnum = (iv(nu, x + h) - iv(nu, x - h)) / (2.0 * h);
        let drec = (iv(nu - 1.0, x) + iv(nu + 1.0, x)) / 2.0;
        assert!((dnum - drec).norm() < 1e-6 * drec.norm().max(1.0), "j=1 t={t} x={x}");
        let dp = |xx: f64| (iv(nu - 1.0, xx) + iv(nu + 1.0, xx)) / 2.0;
        let d2num = (dp(x + h) - dp(x - h)) / (2.0 * h);
        let d2rec = 0.25 * (iv(nu - 2.0, x) + 2.0 * iv(nu, x) + iv(nu + 2.0, x));
        assert!((d2num - d2rec).norm() < 1e-6 * d2rec.norm().max(1.0), "j=2 t={t} x={x}");
    }
}

#[test]
fn j_minus_kernel_uniform_bound() {
    // |4 cosh(pi t) K_{2it}(x)| divided by
    // e^{min(0, -x + pi t)} ((1 + t + x)/x)^{1/10} stays bounded by one
    // fitted constant over t in [0, 50], x in [0.1, 60].
    let mut fitted: f64 = 0.0;
    let mut tail_max: f64 = 0.0; // max over the outer 20% in both axes
    for i in 0..=25 {
        let t = 2.0 * i as f64;
        for j in 0..=30 {
            let x = 0.1 + 2.0 * j as f64;
            let v = j_minus(t, x);
            let env = (0.0f64.min(-x + PI * t)).exp() * ((1.0 + t + x) / x).powf(0.1);
            let ratio = v.norm() / env;
            assert!(ratio.is_finite(), "t={t} x={x}");
            fitted = fitted.max(ratio);
            if t > 40.0 && x > 48.0 {
                tail_max = tail_max.max(ratio);
            }
        }
    }
    assert!(fitted < 1e4, "fitted C = {fitted}");
    assert!(tail_max < fitted * 1.01 + 1.0, "growth trend at grid edge");
}

/// Stable J^-: scaled-I route where the series can resolve the imaginary
/// part, K-integral route elsewhere.
fn j_minus(t: f64, x: f64) -> Complex64 {
    if t >= 0.05 && x <= 2.2 * t + 8.0 {
        if let Ok(im) = specfun::bessel_i_scaled_im(t, x) {
            // 4 cosh(pi t) K_{2it}(x) = -4 pi Im(e^{-pi t} I_{2it}(x)) / (1 - e^{-2 pi t})
            return Complex64::new(-4.0 * PI * im / (1.0 - (-2.0 * PI * t).exp()), 0.0);
        }
    }
    4.0 * (PI * t).cosh() * bessel_k_with_strip(c(0.0, 2.0 * t), x, 120.0).unwrap().value
}

#[test]
fn domain_errors_are_typed() {
    assert!(matches!(bessel_k(c(0.0, 0.0), -1.0), Err(Error::NonPositiveArgument(_))));
    assert!(matches!(bessel_i(c(0.0, 0.0), 0.0), Err(Error::NonPositiveArgument(_))));
    assert!(matches!(
        bessel_k(c(0.0, 300.0), 1.0),
        Err(Error::StripExceeded { .. })
    ));
    assert!(bessel_k_with_strip(c(0.0, 300.0), 1.0, 400.0).is_ok());
    // underflow flag for huge argument
    let r = bessel_k(c(0.0, 1.0), 800.0).unwrap();
    assert!(r.underflowed && r.value.norm() == 0.0);
}
