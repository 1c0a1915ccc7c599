use kernels::{KernelSign, RepresentationParameter, SpectralPoint};
use num_complex::Complex64;
use quad::ContourSpec;
use std::time::Instant;
use transforms::{
    mellin_h_spectral, phi_eta_contour, step1_h_fourier_deriv, HtFamily, TransformPlan,
};

fn main() {
    let rep = RepresentationParameter::default_test();
    let fam10 = HtFamily::new(10.0, 50).unwrap();
    let fam20 = HtFamily::new(20.0, 50).unwrap();

    // Hhat T-scaling: ratio vs 2^{1+Re u}
    for u in [
        Complex64::new(0.0, 2.0),
        Complex64::new(0.5, 5.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 11.0),
    ] {
        let a = mellin_h_spectral(&fam10, u).unwrap();
        let b = mellin_h_spectral(&fam20, u).unwrap();
        let pred = (2.0f64).powf(1.0 + u.re);
        println!(
            "Hhat ratio u={u}: |H20/H10| = {:.6e}, /2^(1+Re u) = {:.4}",
            (b / a).norm(),
            (b / a).norm() / pred
        );
    }

    // step1 envelope data near the bump, T=10 and 20
    for (fam, t) in [(&fam10, 10.0f64), (&fam20, 20.0)] {
        let tc = fam.support_cutoff(45.0);
        print!("H(T={t}) bump scan:");
        for f in [1.2f64, 1.5, 1.7, 1.9, 2.0, 2.1, 2.2] {
            let x = f * tc;
            let h = step1_h_fourier_deriv(fam, x, 0).unwrap();
            print!(" ({:.0},{:.2e})", x, h.abs());
        }
        println!();
    }

    // plans and h- over the r grid
    let t0 = Instant::now();
    let plan10 = TransformPlan::new(rep.clone(), fam10.clone()).unwrap();
    println!("plan10 [{:?}]", t0.elapsed());
    let t0 = Instant::now();
    let plan20 = TransformPlan::new(rep.clone(), fam20.clone()).unwrap();
    println!("plan20 [{:?}]", t0.elapsed());
    for r in [0.2f64, 0.5, 1.0, 2.0, 4.0, 8.0, 15.0, 30.0] {
        let a = plan10.h_transform(SpectralPoint::maass(r), KernelSign::Minus).unwrap();
        let b = plan20.h_transform(SpectralPoint::maass(r), KernelSign::Minus).unwrap();
        println!("h-(r={r}): T10 {:e}  T20 {:e}  ratio {:.3}", a.norm(), b.norm(), b.norm() / a.norm());
    }
    for r in [0.5f64, 2.0, 8.0] {
        let a = plan10.h_transform(SpectralPoint::maass(r), KernelSign::Plus).unwrap();
        println!("h+(r={r}): T10 {:e}", a.norm());
    }
    for k in [2u32, 6, 12, 24, 40] {
        let a = plan10
            .h_transform(SpectralPoint::holomorphic(k).unwrap(), KernelSign::Hol)
            .unwrap();
        println!("hhol(k={k}): T10 {:e}", a.norm());
    }

    // phi: contour route vs convolution profile
    let hhat = |w: Complex64| mellin_h_spectral(&fam10, w);
    for x in [0.1f64, 0.4] {
        for (sign_plus, name) in [(false, "-"), (true, "+")] {
            let prof = if sign_plus { &plan10.phi_plus } else { &plan10.phi_minus };
            let t0 = Instant::now();
            let spec = ContourSpec::new(0.12, 150.0, 14.0, 1e-9).unwrap();
            let p0 = phi_eta_contour(&rep, 0, x, Complex64::new(0.0, 0.0), &hhat, 9.0, &spec)
                .unwrap();
            let p1 = phi_eta_contour(&rep, 1, x, Complex64::new(0.0, 0.0), &hhat, 9.0, &spec)
                .unwrap();
            let combo = 4.0 * std::f64::consts::PI * std::f64::consts::PI
                * if sign_plus { p0 - p1 } else { p0 + p1 };
            let conv = prof.eval(x);
            println!(
                "phi{name}({x}): contour {:e}+{:e}i conv {:e}+{:e}i rel {:.2e} [{:?}]",
                combo.re,
                combo.im,
                conv.re,
                conv.im,
                (combo - conv).norm() / conv.norm(),
                t0.elapsed()
            );
        }
    }
}
