use kernels::{curly_g_pm, RepresentationParameter};
use num_complex::Complex64;
use quad::ContourSpec;
use std::time::Instant;
use transforms::{mellin_h_spectral, phi_eta_contour, HtFamily, TransformPlan};

fn main() {
    let rep = RepresentationParameter::default_test();
    let fam10 = HtFamily::new(10.0, 50).unwrap();
    let plan = TransformPlan::new(rep.clone(), fam10.clone()).unwrap();
    println!("plan done");
    let hhat = |w: Complex64| mellin_h_spectral(&fam10, w);

    // manual line integral using the cached Mellin table, adjustable density
    let line = &plan.hhat_line;
    let v = line.abscissa;
    let manual = |x: f64, nodes_per_unit: f64| -> Complex64 {
        let c = 2.0f64.ln() * 2.0 - x.ln();
        let n = (2.0 * line.ymax * nodes_per_unit).ceil() as usize;
        // plain composite GL16 with panels of 16/nodes_per_unit
        let panels = (n / 16).max(2);
        let w = 2.0 * line.ymax / panels as f64;
        let gl_x: [f64; 8] = [
            0.09501250983763744, 0.2816035507792589, 0.45801677765722737, 0.6178762444026438,
            0.755404408355003, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
        ];
        let gl_w: [f64; 8] = [
            0.189450610455069, 0.18260341504492358, 0.16915651939500254, 0.14959598881657674,
            0.12462897125553388, 0.09515851168249279, 0.062253523938647894, 0.027152459411754095,
        ];
        let f = |y: f64| -> Complex64 {
            let u = Complex64::new(v, y);
            let g = curly_g_pm(&rep, false, (1.0 + u) / 2.0).unwrap();
            line.eval(y) * g * (u * c).exp()
        };
        let mut sum = Complex64::new(0.0, 0.0);
        for p in 0..panels {
            let a = -line.ymax + p as f64 * w;
            let mid = a + 0.5 * w;
            for i in 0..8 {
                sum += gl_w[i] * (f(mid + 0.5 * w * gl_x[i]) + f(mid - 0.5 * w * gl_x[i]));
            }
        }
        sum * (0.5 * w) / (2.0 * std::f64::consts::PI)
    };

    for x in [0.5f64, 1.0] {
        for npu in [16.0f64, 32.0, 64.0, 128.0] {
            let t0 = Instant::now();
            let m = manual(x, npu);
            println!("manual phi-({x}) npu={npu}: {:.8e}+{:.3e}i [{:?}]", m.re, m.im, t0.elapsed());
        }
        println!("cached  phi-({x}): {:.8e}", plan.phi_minus.eval(x).re);
        for (absc, npu) in [(0.12f64, 14.0f64), (0.12, 40.0), (0.3, 40.0)] {
            let t0 = Instant::now();
            let spec = ContourSpec::new(absc, 60.0, npu, 1e-11).unwrap();
            let p0 = phi_eta_contour(&rep, 0, x, Complex64::new(0.0, 0.0), &hhat, 9.0, &spec);
            let p1 = phi_eta_contour(&rep, 1, x, Complex64::new(0.0, 0.0), &hhat, 9.0, &spec);
            match (p0, p1) {
                (Ok(a), Ok(b)) => {
                    let combo = 4.0 * std::f64::consts::PI * std::f64::consts::PI * (a + b);
                    println!(
                        "live phi-({x}) absc={absc} npu={npu}: {:.8e}+{:.3e}i [{:?}]",
                        combo.re, combo.im, t0.elapsed()
                    );
                }
                (a, b) => println!("live phi-({x}) absc={absc}: ERR {a:?} {b:?}"),
            }
        }
    }
}
