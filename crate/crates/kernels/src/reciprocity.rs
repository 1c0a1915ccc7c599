//! Reciprocity kernels 𝒦^±/𝒦^hol as vertical-line integrals, by two routes:
//! the Mellin-product form (primary) and the gamma-product form with the
//! trigonometric multiplier (cross-check), plus the hypergeometric sum for
//! the minus kernel away from its degenerate set.

use crate::{C64, Error, KernelSign, RepresentationParameter, Result, SpectralPoint};
use crate::bessel_kernels::j_kernel_mellin;
use crate::gfactors::curly_g_pm;
use quad::{integrate_vertical_line, ContourSpec};
use specfun::{hyp_4f3_at_1, log_gamma};
use std::cell::RefCell;
use std::f64::consts::PI;

const LN_2: f64 = std::f64::consts::LN_2;

/// Contour prescription with a Stirling-based truncation height: beyond
/// 2·scale the integrand decays at least like e^{−π(|Im u| − 2·scale)}·poly.
pub fn suggested_contour(rep: &RepresentationParameter, scale: f64, tol: f64) -> ContourSpec {
    let height = 2.0 * scale.abs() + 10.0 + (1.0 / tol).ln() * 0.5;
    ContourSpec::new(rep.delta, height, 8.0, tol).expect("valid contour")
}

/// Run a vertical-line integral whose integrand may fail, capturing the
/// first error; the tolerance is interpreted relative to the sampled
/// integrand scale.
fn contour_integral<F>(f: F, spec: &ContourSpec) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let g = |u: C64| -> C64 {
        if failure.borrow().is_some() {
            return C64::new(0.0, 0.0);
        }
        match f(u) {
            Ok(v) => v,
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                C64::new(0.0, 0.0)
            }
        }
    };
    let mut scale = 0.0f64;
    for frac in [0.0, 0.05, 0.125, 0.25, 0.5] {
        scale = scale.max(g(C64::new(spec.abscissa, frac * spec.height_cap)).norm());
    }
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let eff = ContourSpec::new(
        spec.abscissa,
        spec.height_cap,
        spec.nodes_per_unit,
        spec.tol * scale.max(1e-280),
    )?;
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let g = |u: C64| -> C64 {
        if failure.borrow().is_some() {
            return C64::new(0.0, 0.0);
        }
        match f(u) {
            Ok(v) => v,
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                C64::new(0.0, 0.0)
            }
        }
    };
    let result = integrate_vertical_line(&g, &eff);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(result?.value)
}

fn check_abscissa(rep: &RepresentationParameter, spec: &ContourSpec) -> Result<()> {
    if spec.abscissa <= 0.0 || spec.abscissa >= 2.0 * rep.delta {
        return Err(Error::ContourOutOfRange { v: spec.abscissa, max: 2.0 * rep.delta });
    }
    Ok(())
}

/// 𝒦^±(t,r): Mellin-product route
/// ∫_{Re u = v} 𝒥̂^±_r(u) 2^{−u} 𝒥̂^−_t(u) 2^{−u} 𝒢^±((1−u)/2) du/(2πi).
pub fn kernel_k(
    rep: &RepresentationParameter,
    sign: KernelSign,
    t: f64,
    r: f64,
    spec: &ContourSpec,
) -> Result<C64> {
    let sign_plus = match sign {
        KernelSign::Plus => true,
        KernelSign::Minus => false,
        KernelSign::Hol => return Err(Error::InvalidSpectralPoint("use kernel_k_hol for weights")),
    };
    check_abscissa(rep, spec)?;
    let pt = SpectralPoint::maass(t);
    let pr = SpectralPoint::maass(r);
    let jsign = if sign_plus { KernelSign::Plus } else { KernelSign::Minus };
    contour_integral(
        |u| {
            let a = j_kernel_mellin(&pr, jsign, u)?;
            let b = j_kernel_mellin(&pt, KernelSign::Minus, u)?;
            let g = curly_g_pm(rep, sign_plus, (1.0 - u) / 2.0)?;
            Ok(a * b * g * (-2.0 * u * LN_2).exp())
        },
        spec,
    )
}

/// 𝒦^±(t,r): gamma-product route
/// cosh(πt)∫ 𝒢^±((1−u)/2) 𝒞^±(u,r) Γ(u/2±it)Γ(u/2±ir) du/(2πi)
/// with 𝒞^+(u,r) = cos(πu/2) and 𝒞^−(u,r) = cosh(πr).
pub fn kernel_k_gamma_form(
    rep: &RepresentationParameter,
    sign: KernelSign,
    t: f64,
    r: f64,
    spec: &ContourSpec,
) -> Result<C64> {
    let sign_plus = match sign {
        KernelSign::Plus => true,
        KernelSign::Minus => false,
        KernelSign::Hol => return Err(Error::InvalidSpectralPoint("use kernel_k_hol for weights")),
    };
    check_abscissa(rep, spec)?;
    let it = C64::new(0.0, t);
    let ir = C64::new(0.0, r);
    let inner = contour_integral(
        |u| {
            let lg = log_gamma(u / 2.0 + it)?
                + log_gamma(u / 2.0 - it)?
                + log_gamma(u / 2.0 + ir)?
                + log_gamma(u / 2.0 - ir)?;
            let mult = if sign_plus {
                (u * (PI / 2.0)).cos()
            } else {
                C64::new((PI * r).cosh(), 0.0)
            };
            let g = curly_g_pm(rep, sign_plus, (1.0 - u) / 2.0)?;
            Ok(g * mult * lg.exp())
        },
        spec,
    )?;
    Ok((PI * t).cosh() * inner)
}

/// 𝒦^hol(t,k) = 𝒦^+(t, (k−1)/(2i)), with the weight-k Mellin factor
/// substituted analytically into the Mellin-product route.
pub fn kernel_k_hol(
    rep: &RepresentationParameter,
    t: f64,
    k: u32,
    spec: &ContourSpec,
) -> Result<C64> {
    let pk = SpectralPoint::holomorphic(k)?;
    check_abscissa(rep, spec)?;
    let pt = SpectralPoint::maass(t);
    contour_integral(
        |u| {
            let a = j_kernel_mellin(&pk, KernelSign::Hol, u)?;
            let b = j_kernel_mellin(&pt, KernelSign::Minus, u)?;
            let g = curly_g_pm(rep, true, (1.0 - u) / 2.0)?;
            Ok(a * b * g * (-2.0 * u * LN_2).exp())
        },
        spec,
    )
}

/// One term of the hypergeometric representation of the minus kernel.
fn hyp_term(mu: &[C64; 4], t: f64, r: f64, tol: f64) -> Result<C64> {
    let i = C64::new(0.0, 1.0);
    let ir = i * r;
    let mut a = [C64::new(0.0, 0.0); 4];
    for j in 0..4 {
        a[j] = 0.5 + mu[j] - ir;
    }
    let b = [1.0 - 2.0 * ir, 1.0 - i * (r + t), 1.0 - i * (r - t)];
    let f = hyp_4f3_at_1(a, b, tol)?;
    // assemble the prefactor in log space: cosh(pi t) alone overflows for
    // t beyond ~230 even though the full product stays moderate
    let ln_cosh = |x: f64| x.abs() + (-2.0 * x.abs()).exp().ln_1p() - LN_2;
    let mut lp = C64::new((8.0f64).ln() + ln_cosh(PI * t) + ln_cosh(PI * r), 0.0)
        + log_gamma(2.0 * ir)?
        + log_gamma(i * (r + t))?
        + log_gamma(i * (r - t))?;
    for j in 0..4 {
        lp += log_gamma(a[j])?;
    }
    let pre = lp.exp();
    let bracket = (PI * (mu[1] + mu[2])).cos() + (PI * (mu[1] + mu[3])).cos()
        + (PI * (mu[2] + mu[3])).cos()
        - C64::new((2.0 * PI * r).cosh(), 0.0);
    Ok(pre * bracket * f.value)
}

/// Minus kernel by the terminating-contour residue sum: a four-term
/// combination of 4F3 values at unit argument. Valid away from the
/// degenerate set rt(t² − r²) = 0 and only for all-even parity indices.
pub fn kernel_k_minus_4f3(
    rep: &RepresentationParameter,
    t: f64,
    r: f64,
    tol: f64,
) -> Result<C64> {
    if rep.beta.iter().any(|&b| b % 2 != 0) {
        return Err(Error::ParityUnsupported);
    }
    let eps = 1e-6;
    if t.abs() < eps || r.abs() < eps || (t - r).abs() < eps || (t + r).abs() < eps {
        return Err(Error::Degenerate { t, r });
    }
    let inner = tol.clamp(1e-12, 1e-8);
    Ok(hyp_term(&rep.mu, t, r, inner)?
        + hyp_term(&rep.mu, t, -r, inner)?
        + hyp_term(&rep.mu, r, t, inner)?
        + hyp_term(&rep.mu, r, -t, inner)?)
}
