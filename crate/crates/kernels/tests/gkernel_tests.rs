use kernels::{
    g_kernel, g_kernel_series, j_kernel, kernel_k, suggested_contour, KernelSign,
    RepresentationParameter, SpectralPoint,
};
use num_complex::Complex64;
use quad::ContourSpec;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn gspec(abscissa: f64, height: f64) -> ContourSpec {
    ContourSpec::new(abscissa, height, 8.0, 1e-5).unwrap()
}

#[test]
fn series_and_contour_routes_agree() {
    let rep = RepresentationParameter::default_test();
    for &x in &[0.5f64, 2.0, 8.0] {
        let series = g_kernel_series(&rep, x).unwrap();
        let contour = g_kernel(&rep, x, &gspec(0.12, 800.0)).unwrap();
        assert!(
            (series.value - contour).norm() < 2e-3 * series.value.norm().max(1.0),
            "x={x}: series {} vs contour {contour}",
            series.value
        );
    }
}

#[test]
fn contour_path_perturbation_is_harmless() {
    let rep = RepresentationParameter::default_test();
    let x = 0.7f64;
    let a = g_kernel(&rep, x, &gspec(0.09, 800.0)).unwrap();
    let b = g_kernel(&rep, x, &gspec(0.16, 800.0)).unwrap();
    assert!(
        (a - b).norm() < 2e-3 * a.norm().max(1.0),
        "{a} vs {b}"
    );
}

#[test]
fn contour_rejects_paths_outside_the_corridor() {
    let rep = RepresentationParameter::default_test();
    assert!(g_kernel(&rep, 1.0, &gspec(0.02, 400.0)).is_err());
    assert!(matches!(
        g_kernel(&rep, 1.0, &ContourSpec::new(0.3, 400.0, 8.0, 1e-5).unwrap()),
        Err(kernels::Error::ContourOutOfRange { .. })
    ));
}

#[test]
fn small_argument_scaling() {
    // with unitary spectral parameters g(x) oscillates in log x with a very
    // long quasi-period, so the window must span many decades: |g| stays
    // bounded outright, and the fitted constant for the x^{−1/4−ε} envelope
    // is not pushed up by the smallest decades
    let rep = RepresentationParameter::default_test();
    let mut bulk = 0.0f64;
    let mut edge = 0.0f64;
    let mut sup = 0.0f64;
    for i in 0..36 {
        let x = 10f64.powf(-1.0 - 9.0 * i as f64 / 35.0); // 1e-1 down to 1e-10
        let g = g_kernel_series(&rep, x).unwrap();
        sup = sup.max(g.value.norm());
        let ratio = g.value.norm() * x.powf(0.26);
        if x > 1e-8 {
            bulk = bulk.max(ratio);
        } else {
            edge = edge.max(ratio);
        }
    }
    assert!(bulk.is_finite() && bulk > 0.0);
    assert!(sup < 1e4, "unbounded small-argument growth: {sup}");
    assert!(edge <= bulk * 1.2, "edge {edge} vs bulk {bulk}");
}

#[test]
fn double_bessel_integral_reproduces_the_minus_kernel() {
    let rep = RepresentationParameter::default_test();
    let (t, r) = (0.8, 0.5);
    let spec = suggested_contour(&rep, 1.0, 1e-10);
    let reference = kernel_k(&rep, KernelSign::Minus, t, r, &spec).unwrap();

    // ½ ∬ J_t(x) J_r(y) g((xy)²/16) dx dy on a log-mapped truncated square
    let pt = SpectralPoint::maass(t);
    let pr = SpectralPoint::maass(r);
    let (s_lo, s_hi) = (-9.0f64, 13.0f64.ln());
    let n = 560usize;
    // Gauss-Legendre 4-point per panel
    let gx = [0.3399810435848563, 0.8611363115940526];
    let gw = [0.6521451548625461, 0.3478548451374538];
    let panels = n / 4;
    let w = (s_hi - s_lo) / panels as f64;
    let mut nodes = Vec::with_capacity(panels * 4);
    for p in 0..panels {
        let mid = s_lo + (p as f64 + 0.5) * w;
        for i in 0..2 {
            nodes.push((mid + 0.5 * w * gx[i], 0.5 * w * gw[i]));
            nodes.push((mid - 0.5 * w * gx[i], 0.5 * w * gw[i]));
        }
    }
    // per-axis caches: x, quadrature weight in the log variable, kernel value
    let axis = |p: &SpectralPoint| -> Vec<(f64, f64, f64)> {
        nodes
            .iter()
            .map(|&(s, wq)| {
                let x = s.exp();
                let jv = j_kernel(p, KernelSign::Minus, x).unwrap();
                (x, wq * x, jv.re)
            })
            .collect()
    };
    let ax = axis(&pt);
    let ay = axis(&pr);
    let mut total = 0.0f64;
    let mut dropped = 0.0f64;
    for &(x, wx, jx) in &ax {
        for &(y, wy, jy) in &ay {
            let arg = (x * y).powi(2) / 16.0;
            match g_kernel_series(&rep, arg) {
                Ok(g) => total += wx * wy * jx * jy * g.value.re,
                Err(_) => dropped += (wx * wy * jx * jy).abs(),
            }
        }
    }
    total *= 0.5;
    // the dropped far corner carries exponentially small kernel weight
    assert!(dropped < 1e-6, "dropped weight {dropped}");
    assert!(
        (total - reference.re).abs() < 2e-2 * reference.re.abs(),
        "double integral {total} vs kernel {}",
        reference.re
    );
    assert!(reference.im.abs() < 1e-8 * reference.re.abs());
}
