//! The Bessel kernels attached to a spectral point and their closed-form
//! Mellin transforms.

use crate::{C64, Error, KernelSign, Result, SpectralPoint};
use specfun::{bessel_i_scaled_im, bessel_j, bessel_k_with_strip, log_gamma};
use std::f64::consts::PI;

const LN_2: f64 = std::f64::consts::LN_2;

/// 𝒥^−_t(x) = 4cosh(πt)K_{2it}(x), evaluated through the scaled-I imaginary
/// part where the K-integral is ill-conditioned (oscillatory small-x regime)
/// and through the K-integral elsewhere.
fn j_minus(t: f64, x: f64) -> Result<C64> {
    let t = t.abs(); // even in t
    if t >= 0.05 && x <= 2.2 * t + 8.0 {
        if let Ok(im) = bessel_i_scaled_im(t, x) {
            // 4cosh(πt)K_{2it} = −4π·Im(e^{−πt}I_{2it}) / (1 − e^{−2πt})
            let denom = 1.0 - (-2.0 * PI * t).exp();
            return Ok(C64::new(-4.0 * PI * im / denom, 0.0));
        }
    }
    let strip = (2.0 * t + 10.0).max(100.0);
    let k = bessel_k_with_strip(C64::new(0.0, 2.0 * t), x, strip)?;
    Ok(4.0 * (PI * t).cosh() * k.value)
}

/// 𝒥^+_t(x) = πi(J_{2it}(x) − J_{−2it}(x))/sinh(πt). For real t the two J
/// values are conjugates, so this is −2π·Im J_{2it}(x)/sinh(πt).
fn j_plus(t: f64, x: f64) -> Result<C64> {
    if t.abs() < 1e-7 {
        return Err(Error::InvalidSpectralPoint(
            "plus kernel at t = 0 needs the continuity limit; use |t| > 1e-7",
        ));
    }
    let j = bessel_j(C64::new(0.0, 2.0 * t), x)?;
    Ok(C64::new(-2.0 * PI * j.im / (PI * t).sinh(), 0.0))
}

/// 𝒥^hol_k(x) = 2π i^k J_{k−1}(x).
fn j_hol(k: u32, x: f64) -> Result<C64> {
    let j = bessel_j(C64::new((k - 1) as f64, 0.0), x)?;
    Ok(2.0 * PI * C64::new(0.0, 1.0).powu(k % 4) * j)
}

pub fn j_kernel(point: &SpectralPoint, sign: KernelSign, x: f64) -> Result<C64> {
    if x <= 0.0 {
        return Err(Error::SpecialFunction(specfun::Error::NonPositiveArgument(x)));
    }
    match (point, sign) {
        (SpectralPoint::Maass { t }, KernelSign::Minus) => j_minus(*t, x),
        (SpectralPoint::Maass { t }, KernelSign::Plus) => j_plus(*t, x),
        (SpectralPoint::Holomorphic { k }, KernelSign::Hol) => j_hol(*k, x),
        _ => Err(Error::InvalidSpectralPoint("sign does not match the spectral point kind")),
    }
}

fn ln_cosh(a: f64) -> f64 {
    a.abs() + (1.0 + (-2.0 * a.abs()).exp()).ln() - LN_2
}

/// Closed-form Mellin transforms of the Bessel kernels:
///   minus: 2^s Γ(s/2+it)Γ(s/2−it) cosh(πt)
///   plus:  2^s Γ(s/2+it)Γ(s/2−it) cos(πs/2)
///   hol:   i^k 2^s π Γ((s+k−1)/2)/Γ((1+k−s)/2)
/// assembled in log space so no intermediate factor overflows.
pub fn j_kernel_mellin(point: &SpectralPoint, sign: KernelSign, s: C64) -> Result<C64> {
    match (point, sign) {
        (SpectralPoint::Maass { t }, KernelSign::Minus) => {
            let base = s * LN_2
                + log_gamma(s / 2.0 + C64::new(0.0, *t))?
                + log_gamma(s / 2.0 - C64::new(0.0, *t))?;
            Ok((base + ln_cosh(PI * t)).exp())
        }
        (SpectralPoint::Maass { t }, KernelSign::Plus) => {
            let base = s * LN_2
                + log_gamma(s / 2.0 + C64::new(0.0, *t))?
                + log_gamma(s / 2.0 - C64::new(0.0, *t))?;
            // cos(πs/2) split into its two exponentials to stay in log space
            let i = C64::new(0.0, 1.0);
            Ok(0.5 * ((base + i * s * (PI / 2.0)).exp() + (base - i * s * (PI / 2.0)).exp()))
        }
        (SpectralPoint::Holomorphic { k }, KernelSign::Hol) => {
            let kf = *k as f64;
            let lg = s * LN_2 + log_gamma((s + kf - 1.0) / 2.0)? - log_gamma((1.0 + kf - s) / 2.0)?;
            Ok(PI * C64::new(0.0, 1.0).powu(k % 4) * lg.exp())
        }
        _ => Err(Error::InvalidSpectralPoint("sign does not match the spectral point kind")),
    }
}
