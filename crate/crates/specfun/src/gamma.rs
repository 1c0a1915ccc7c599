use crate::{is_nonpositive_integer, Error, Result, C64};
use num_complex::Complex64;
use std::f64::consts::PI;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_C: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

const LN_SQRT_2PI: f64 = 0.91893853320467274178;

/// log Gamma for Re z >= 0.5 straight from the Lanczos sum. Continuous (it is
/// the analytic log-gamma, not log of gamma) because the shifted base
/// z + g - 1/2 stays in the right half-plane.
fn log_gamma_lanczos(z: C64) -> C64 {
    let zm1 = z - 1.0;
    let mut a = Complex64::new(LANCZOS_C[0], 0.0);
    for (k, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        a += c / (zm1 + k as f64);
    }
    let w = zm1 + LANCZOS_G + 0.5;
    (zm1 + 0.5) * w.ln() - w + LN_SQRT_2PI + a.ln()
}

/// Principal-branch log Gamma, continuous along every vertical line in the
/// right half-plane.
pub fn log_gamma(z: C64) -> Result<C64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::GammaPole(z));
    }
    if is_nonpositive_integer(z, 1e-13) {
        return Err(Error::GammaPole(z));
    }
    if z.re >= 0.5 {
        return Ok(log_gamma_lanczos(z));
    }
    if z.re > -20.0 {
        // Shift right: log G(z) = log G(z+n) - sum log(z+k). Each z+k keeps
        // the sign of Im z, so the principal logs are continuous off the
        // real axis and exact on it.
        let n = (21.0 - z.re).ceil() as usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n {
            acc += (z + k as f64).ln();
        }
        return Ok(log_gamma_lanczos(z + n as f64) - acc);
    }
    // Deep left half-plane: reflection. log sin is assembled from the
    // exponential that decays in the relevant half-plane to avoid overflow.
    let lg = log_gamma(1.0 - z)?;
    let log_sin = if z.im >= 0.0 {
        // sin(pi z) = e^{-i pi z}(e^{2 i pi z} - 1)/(2i)
        let e = (Complex64::new(0.0, 2.0 * PI) * z).exp();
        Complex64::new(0.0, -PI) * z + (e - 1.0).ln() - Complex64::new(0.0, 1.0).ln()
            - std::f64::consts::LN_2
    } else {
        let e = (Complex64::new(0.0, -2.0 * PI) * z).exp();
        Complex64::new(0.0, PI) * z + (Complex64::new(1.0, 0.0) - e).ln()
            - Complex64::new(0.0, 1.0).ln()
            - std::f64::consts::LN_2
    };
    Ok(PI.ln() - log_sin - lg)
}

/// Gamma function. Errors on poles and on overflow of the double range.
pub fn gamma(z: C64) -> Result<C64> {
    let lg = log_gamma(z)?;
    if lg.re > 709.0 {
        return Err(Error::Overflow);
    }
    Ok(lg.exp())
}
