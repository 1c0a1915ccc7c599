use kernels::{g_kernel, g_kernel_series_signed, suggested_contour, RepresentationParameter};
use num_complex::Complex64;
use quad::ContourSpec;
use std::time::Instant;
use transforms::{mellin_h_spectral, phi_eta_contour, HtFamily, TransformPlan};

fn main() {
    let rep = RepresentationParameter::default_test();

    // scalar kernel: series vs contour at overlap, then contour beyond reach
    for z in [100.0f64, 500.0, 1000.0, 2000.0] {
        let s = g_kernel_series_signed(&rep, false, z);
        let spec = suggested_contour(&rep, 1.0, 1e-9);
        let c = g_kernel(&rep, z, &spec);
        match (s, c) {
            (Ok(sv), Ok(cv)) => println!(
                "g-(z={z}): series {:.6e}+{:.6e}i contour {:.6e}+{:.6e}i rel {:.2e}",
                sv.value.re,
                sv.value.im,
                cv.re,
                cv.im,
                (sv.value - cv).norm() / sv.value.norm()
            ),
            (s, c) => println!("g-(z={z}): series {:?} contour {:?}", s.map(|v| v.value), c),
        }
    }
    for z in [3000.0f64, 5000.0, 10000.0, 20000.0, 50000.0, 100000.0] {
        let spec = suggested_contour(&rep, 1.0, 1e-9);
        match g_kernel(&rep, z, &spec) {
            Ok(cv) => println!("g-(z={z}): contour {:.6e}+{:.6e}i |g| {:.3e}", cv.re, cv.im, cv.norm()),
            Err(e) => println!("g-(z={z}): contour ERR {e}"),
        }
    }

    // phi at larger x: cached-line profile vs independent live contour
    let fam10 = HtFamily::new(10.0, 50).unwrap();
    let t0 = Instant::now();
    let plan = TransformPlan::new(rep.clone(), fam10.clone()).unwrap();
    println!("plan [{:?}]", t0.elapsed());
    let hhat = |w: Complex64| mellin_h_spectral(&fam10, w);
    for x in [0.5f64, 1.0, 1.6487, 2.7183] {
        for (sign_plus, name) in [(false, "-"), (true, "+")] {
            let prof = if sign_plus { &plan.phi_plus } else { &plan.phi_minus };
            let spec = ContourSpec::new(0.12, 120.0, 14.0, 1e-9).unwrap();
            let p0 = phi_eta_contour(&rep, 0, x, Complex64::new(0.0, 0.0), &hhat, 9.0, &spec).unwrap();
            let p1 = phi_eta_contour(&rep, 1, x, Complex64::new(0.0, 0.0), &hhat, 9.0, &spec).unwrap();
            let combo = 4.0 * std::f64::consts::PI * std::f64::consts::PI
                * if sign_plus { p0 - p1 } else { p0 + p1 };
            let cached = prof.eval(x);
            println!(
                "phi{name}({x}): live {:.6e}+{:.6e}i cached {:.6e}+{:.6e}i rel {:.2e}",
                combo.re,
                combo.im,
                cached.re,
                cached.im,
                (combo - cached).norm() / combo.norm().max(cached.norm())
            );
        }
    }
}
