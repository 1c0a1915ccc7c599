use kernels::{curly_g_pm, RepresentationParameter};
use num_complex::Complex64;
use transforms::{mellin_h_spectral, HtFamily};

fn main() {
    let rep = RepresentationParameter::default_test();
    let fam10 = HtFamily::new(10.0, 50).unwrap();
    let x = 0.5f64;
    for absc in [0.12f64, 0.2] {
        for y in [3.0f64, -3.0, 6.0, -6.0, 10.0, -10.0, 15.0, -15.0, 20.0, -20.0, 26.0, -26.0, 40.0, -40.0, 60.0, -60.0, 90.0, -90.0] {
            let u = Complex64::new(absc, y);
            let hh = mellin_h_spectral(&fam10, -u).unwrap();
            let gm = curly_g_pm(&rep, false, (1.0 + u) / 2.0).unwrap();
            let f = hh * (u * 2.0 * 2.0f64.ln()).exp() * gm * (-u * x.ln()).exp();
            println!(
                "absc={absc} y={y}: |Hhat| {:.3e} |G-| {:.3e} |f| {:.3e}",
                hh.norm(),
                gm.norm(),
                f.norm()
            );
        }
    }
}
