use transforms::{step1_h_fourier_deriv, HtFamily};

fn main() {
    for t_scale in [10.0f64, 20.0, 40.0] {
        let fam = HtFamily::new(t_scale, 50).unwrap();
        let d = 50.0f64;
        let tstar = t_scale * (2.0 * d).sqrt();
        println!(
            "T={t_scale}: ln h(t*) = {:.4} at t*={tstar}, tc(45) = {:.1}",
            fam.log_eval_real(tstar),
            fam.support_cutoff(45.0)
        );
        // spectral mass by simple quadrature
        let tc = fam.support_cutoff(60.0);
        let n = 40000usize;
        let dt = tc / n as f64;
        let mut mass = 0.0f64;
        for k in 1..=n {
            mass += fam.h_spec_real(k as f64 * dt);
        }
        mass *= dt;
        println!("  spectral mass = {:.6e}", mass);
        // H scan around the bump x in [1.2 t*, 2.6 t*]
        let mut best = (0.0f64, 0.0f64);
        for i in 0..29 {
            let x = tstar * (1.2 + 0.05 * i as f64);
            let h = step1_h_fourier_deriv(&fam, x, 0).unwrap();
            if h.abs() > best.1 {
                best = (x, h.abs());
            }
            if i % 4 == 0 {
                println!("  H({:.0}) = {:.3e}", x, h);
            }
        }
        println!("  H max ~ {:.4e} at x = {:.0}  (max/mass = {:.3})", best.1, best.0, best.1 / mass);
    }
}
