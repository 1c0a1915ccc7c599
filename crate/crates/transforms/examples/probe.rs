use kernels::{KernelSign, RepresentationParameter, SpectralPoint};
use num_complex::Complex64;
use std::time::Instant;
use transforms::{
    h_spec_fourier, mellin_h_spectral, step1_h_fourier, step1_h_spectral, GProfile, HProfile,
    HtFamily, TransformPlan,
};

fn main() {
    let fam = HtFamily::new(10.0, 50).unwrap();
    let f3 = h_spec_fourier(&fam, 0.3);
    println!("hcheck(0.3) = {:e}", f3);

    // step 1 two routes at x = 5
    let t0 = Instant::now();
    let a = step1_h_fourier(&fam, 5.0).unwrap();
    let ta = t0.elapsed();
    let t0 = Instant::now();
    let b = step1_h_spectral(&fam, 5.0).unwrap();
    println!(
        "step1 x=5: fourier {:e} [{:?}]  spectral {:e} [{:?}]  rel {:.2e}",
        a,
        ta,
        b,
        t0.elapsed(),
        (a - b).abs() / a.abs().max(b.abs())
    );

    // Mellin checks
    let m0 = mellin_h_spectral(&fam, Complex64::new(1.0, 0.0)).unwrap();
    let m1 = mellin_h_spectral(&fam, Complex64::new(1.0, 400.0)).unwrap();
    println!("Hhat(1) = {:e}, |Hhat(1+400i)|/|Hhat(1)| = {:e}", m0.norm(), m1.norm() / m0.norm());

    // H profile
    let t0 = Instant::now();
    let hp = HProfile::build(&fam).unwrap();
    println!(
        "HProfile [{:?}]: peak {:e} support [{}, {}]",
        t0.elapsed(),
        hp.peak,
        hp.y_support_lo,
        hp.y_support_hi
    );
    for y in [5.0f64, 100.0, 180.0, 220.0, 240.0, 260.0, 300.0, 340.0] {
        let direct = step1_h_fourier(&fam, y).unwrap();
        let cached = hp.eval(y);
        println!(
            "  H({y}): cached {:e} fourier {:e} rel(c,f) {:.2e}",
            cached,
            direct,
            (cached - direct).abs() / direct.abs().max(1e-30 * hp.peak),
        );
    }
    // non-conforming small family: bump reachable by both routes
    let fam12 = HtFamily::new(10.0, 12).unwrap();
    let hp12 = HProfile::build(&fam12).unwrap();
    println!("HProfile12 peak {:e} support [{}, {}]", hp12.peak, hp12.y_support_lo, hp12.y_support_hi);
    for y in [5.0f64, 60.0, 80.0, 95.0, 105.0, 120.0] {
        let a = step1_h_fourier(&fam12, y).unwrap();
        let b = step1_h_spectral(&fam12, y).unwrap();
        println!(
            "  H12({y}): fourier {:e} spectral {:e} rel {:.2e} rel-to-peak {:.2e}",
            a,
            b,
            (a - b).abs() / a.abs().max(b.abs()),
            (a - b).abs() / hp12.peak
        );
    }

    // G profiles
    let rep = RepresentationParameter::default_test();
    for plus in [false, true] {
        let t0 = Instant::now();
        let gp = GProfile::build(&rep, plus).unwrap();
        println!(
            "GProfile(plus={plus}) [{:?}]: reach ln_hi={:.2} (z_hi={:.1})",
            t0.elapsed(),
            gp.ln_hi,
            gp.ln_hi.exp()
        );
    }

    // full plan
    let t0 = Instant::now();
    let plan = TransformPlan::new(rep, fam).unwrap();
    println!(
        "plan [{:?}]: phi- peak {:e} support_hi {:.2}  phi+ peak {:e} support_hi {:.2}",
        t0.elapsed(),
        plan.phi_minus.peak,
        plan.phi_minus.ln_support_hi,
        plan.phi_plus.peak,
        plan.phi_plus.ln_support_hi
    );
    for lx in [-40.0f64, -20.0, -5.0, -2.0, -1.0, 0.0, 1.0] {
        let x = lx.exp();
        println!(
            "  phi-({:.3e}) = {:e}   phi+ = {:e}",
            x,
            plan.phi_minus.eval(x).norm(),
            plan.phi_plus.eval(x).norm()
        );
    }

    // minus transform, two routes
    for r in [0.5f64] {
        let t0 = Instant::now();
        let hv = match plan.h_transform(SpectralPoint::maass(r), KernelSign::Minus) {
            Ok(v) => v,
            Err(e) => {
                println!("h-(r={r}) phi route FAILED: {e}");
                continue;
            }
        };
        let ta = t0.elapsed();
        let t0 = Instant::now();
        let hk = match plan.h_transform_kernel_route(SpectralPoint::maass(r), KernelSign::Minus, 1e-7)
        {
            Ok(v) => v,
            Err(e) => {
                println!("h-(r={r}) kernel route FAILED: {e}");
                continue;
            }
        };
        println!(
            "h-(r={r}): phi {:e}+{:e}i [{:?}]  kernel {:e}+{:e}i [{:?}]  rel {:.2e}",
            hv.re,
            hv.im,
            ta,
            hk.re,
            hk.im,
            t0.elapsed(),
            (hv - hk).norm() / hk.norm()
        );
    }
}
