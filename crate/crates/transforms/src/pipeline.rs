//! The transform pipeline proper: Fourier and Mellin views of the weighted
//! test function, the step-1 Bessel integral, the Mellin-side multiplier,
//! the auxiliary weight phi, and a per-family plan that caches the
//! expensive profiles so the final spectral transforms are cheap to
//! evaluate on grids.
//!
//! phi is built through the exact Mellin-convolution identity
//! `phi(x) = (x/2) ∫ H(y) g((xy)^2 / 16) dy`, where H is the step-1 output
//! and g is the scalar inverse-Mellin kernel of the gamma-factor product.
//! The direct vertical-line form of phi is impractical in f64: the Mellin
//! transform of H stays essentially flat out to heights comparable with
//! twice the spectral support (the gamma-pair modulus exactly cancels the
//! cosh weight below that height), so no truncated line captures it.
//!
//! Everything here is linear in the test function, so the enormous common
//! scale of the standard family (around e^{366}) rides along harmlessly in
//! f64; only products with gamma factors are assembled in log space.

use crate::family::HtFamily;
use crate::{C64, Error, Result};
use kernels::{
    curly_g_eps, curly_g_pm, g_kernel_series_signed, j_kernel, kernel_k, kernel_k_hol,
    suggested_contour, KernelSign, RepresentationParameter, SpectralPoint,
};
use num_complex::Complex64;
use quad::ContourSpec;
use specfun::log_gamma;
use std::f64::consts::PI;

const LN_2: f64 = std::f64::consts::LN_2;

/// 16-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
const GL16_X: [f64; 8] = [
    0.09501250983763744,
    0.2816035507792589,
    0.45801677765722737,
    0.6178762444026438,
    0.755404408355003,
    0.8656312023878318,
    0.9445750230732326,
    0.9894009349916499,
];
const GL16_W: [f64; 8] = [
    0.189450610455069,
    0.18260341504492358,
    0.16915651939500254,
    0.14959598881657674,
    0.12462897125553388,
    0.09515851168249279,
    0.062253523938647894,
    0.027152459411754095,
];

/// One Gauss-Legendre panel of a fallible complex integrand.
fn gl_panel<F: FnMut(f64) -> Result<C64>>(f: &mut F, a: f64, b: f64) -> Result<C64> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..8 {
        sum += GL16_W[i] * (f(mid + half * GL16_X[i])? + f(mid - half * GL16_X[i])?);
    }
    Ok(sum * half)
}

/// Composite Gauss-Legendre over [a, b] with a fixed panel width.
fn gl_range<F: FnMut(f64) -> Result<C64>>(
    f: &mut F,
    a: f64,
    b: f64,
    panel_width: f64,
) -> Result<C64> {
    let panels = ((b - a) / panel_width).ceil().max(1.0) as usize;
    let w = (b - a) / panels as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        sum += gl_panel(f, a + p as f64 * w, a + (p + 1) as f64 * w)?;
    }
    Ok(sum)
}

/// Drop (in e-powers) below the peak at which the spectral integrand is
/// treated as zero.
const SUPPORT_DROP: f64 = 45.0;

/// Fourier transform of the weighted test function,
/// `∫ h(t) t tanh(pi t)/(2 pi^2) e^{-i t v} dt` over the real line.
/// The integrand is real and even in t, so the result is real.
pub fn h_spec_fourier(fam: &HtFamily, v: f64) -> f64 {
    h_spec_fourier_deriv(fam, v, 0)
}

/// A priori scale of the Fourier support: the Gaussian factor alone pushes
/// the transform below f64 resolution past roughly 14 / T.
fn nominal_fourier_support(fam: &HtFamily) -> f64 {
    (14.0 / fam.t_scale).min(3.0)
}

/// n-th derivative in v of [`h_spec_fourier`]; each derivative brings down a
/// factor -i t, and by evenness the result stays real.
///
/// Computed as a plain trapezoid sum: the integrand's own Fourier transform
/// is the quantity being computed, which is concentrated in a short
/// interval, so by Poisson summation the trapezoid aliasing error consists
/// of translates evaluated far outside that interval and is negligible at a
/// step chosen from the support estimate. No oscillation needs resolving.
pub fn h_spec_fourier_deriv(fam: &HtFamily, v: f64, n: u32) -> f64 {
    let tc = fam.support_cutoff(SUPPORT_DROP);
    let vs = nominal_fourier_support(fam);
    let dt = 2.0 * PI / (1.4 * vs + v.abs() + 0.5);
    let mut sum = 0.0f64;
    let mut k = 1u64;
    loop {
        let t = k as f64 * dt;
        if t > tc {
            break;
        }
        let base = fam.h_spec_real(t) * t.powi(n as i32);
        let phase = t * v;
        sum += base
            * match n % 4 {
                0 => phase.cos(),
                1 => -phase.sin(),
                2 => -phase.cos(),
                _ => phase.sin(),
            };
        k += 1;
    }
    2.0 * dt * sum
}

/// The same Fourier integral evaluated on the horizontal line
/// Im t = -shift: `∫ h_spec(x - i shift) e^{-i x v} dx`. For an admissible
/// shift (at most the number of forced zero pairs, and away from the
/// half-odd integers where the density has poles) the contour shift is
/// legitimate and the plain transform equals e^{-shift v} times this value,
/// which exhibits its exponential decay in v structurally.
pub fn h_spec_shifted(fam: &HtFamily, v: f64, shift: f64) -> Result<C64> {
    if !(shift > 0.0) || shift > fam.zeros as f64 {
        return Err(Error::Region("shift must lie in (0, zero count]"));
    }
    let frac = (2.0 * shift - (2.0 * shift).round()).abs();
    if (2.0 * shift).round() as i64 % 2 != 0 && frac < 1e-6 {
        return Err(Error::Region("shift sits on a density pole line"));
    }
    let xc = fam.support_cutoff(SUPPORT_DROP) + 2.0 * shift;
    // off-axis the Gaussian factor adds a linear phase of rate 2 shift / T^2
    let rate = 2.0 * shift / (fam.t_scale * fam.t_scale);
    let width = (10.0 / (v.abs() + rate + 6.0)).min(1.0);
    let is = Complex64::new(0.0, shift);
    let mut f = |x: f64| -> Result<C64> {
        let t = Complex64::new(x, 0.0) - is;
        Ok(fam.h_spec(t) * Complex64::new(0.0, -x * v).exp())
    };
    gl_range(&mut f, -xc, xc, width)
}

/// Lower edge of the spectral support: the smallest t at which the weighted
/// test function is within `drop` e-powers of its peak (0 if none).
fn support_lower(fam: &HtFamily, drop: f64) -> f64 {
    let tc = fam.support_cutoff(drop);
    let step = fam.t_scale / 20.0;
    let mut peak = f64::NEG_INFINITY;
    let mut t = step;
    while t <= tc {
        peak = peak.max(fam.log_eval_real(t) + t.ln());
        t += step;
    }
    let mut t = step;
    while t <= tc {
        if fam.log_eval_real(t) + t.ln() >= peak - drop {
            return (t - step).max(0.0);
        }
        t += step;
    }
    0.0
}

/// Step 1 of the pipeline by its defining spectral integral:
/// `H(x) = ∫ J^-_t(x) h(t) t tanh(pi t)/(2 pi^2) dt`.
pub fn step1_h_spectral(fam: &HtFamily, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Region("step 1 needs x > 0"));
    }
    let tc = fam.support_cutoff(SUPPORT_DROP);
    // the minus Bessel kernel oscillates in t roughly like t^{2i t / asinh}
    let width = (12.0 / (2.0 * (tc / x).asinh() + 2.0))
        .min(fam.t_scale / 2.0)
        .min(5.0);
    let mut f = |t: f64| -> Result<C64> {
        let j = j_kernel(&SpectralPoint::maass(t), KernelSign::Minus, x)?;
        Ok(j * fam.h_spec_real(t))
    };
    Ok(2.0 * gl_range(&mut f, 1e-3, tc, width)?.re)
}

/// Scan for the effective support of the Fourier transform: the first v
/// beyond which |transform| stays below 10^{-13} of its maximum. The
/// threshold sits above the quadrature noise floor (relative 1e-12 of the
/// t-integrand scale), and the Gaussian factor of the family guarantees the
/// drop well before the hard cap.
fn fourier_support(fam: &HtFamily) -> f64 {
    let mut peak = 0.0f64;
    let mut below = 0usize;
    let mut v = 0.0f64;
    loop {
        let a = h_spec_fourier(fam, v).abs();
        peak = peak.max(a);
        below = if a < 1e-13 * peak { below + 1 } else { 0 };
        if below >= 3 {
            return v;
        }
        v += 0.05;
        if v > 3.0 {
            return v;
        }
    }
}

/// Step 1 through the Fourier side:
/// `H(x) = ∫ e^{i x sinh(v/2)} (Fourier transform)(v) dv`.
pub fn step1_h_fourier(fam: &HtFamily, x: f64) -> Result<f64> {
    step1_h_fourier_deriv(fam, x, 0)
}

/// Smallest y beyond which |H| is negligible. H concentrates where the
/// phase x sinh(v/2) can be stationary against the carrier oscillation of
/// the Fourier transform, i.e. around twice the spectral peak; past twice
/// the spectral cutoff only a short transition tail survives, so 2.2 times
/// the cutoff (plus slack) bounds the support from above.
fn h_alias_margin(fam: &HtFamily) -> f64 {
    2.2 * fam.support_cutoff(SUPPORT_DROP) + 5.0 * fam.t_scale
}

/// `x^j H^(j)(x)` through the Fourier side for j <= 2, using the exact
/// recurrence that trades each Euler derivative x d/dx for the first-order
/// operator D f = -2 d/dv (tanh(v/2) f) acting on the Fourier transform:
/// j = 1 uses D, and j = 2 uses D^2 - D since x^2 d^2 = (x d)^2 - x d.
pub fn step1_h_fourier_deriv(fam: &HtFamily, x: f64, j: u32) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Region("step 1 needs x > 0"));
    }
    if j > 2 {
        return Err(Error::Region("derivative order must be at most 2"));
    }
    let vmax = 1.2 * fourier_support(fam) + 0.1;
    let q = |v: f64| -> f64 {
        match j {
            0 => h_spec_fourier(fam, v),
            _ => {
                let th = (0.5 * v).tanh();
                let s = 1.0 / (0.5 * v).cosh().powi(2);
                let f0 = h_spec_fourier(fam, v);
                let f1 = h_spec_fourier_deriv(fam, v, 1);
                let d1 = -s * f0 - 2.0 * th * f1;
                if j == 1 {
                    d1
                } else {
                    let f2 = h_spec_fourier_deriv(fam, v, 2);
                    let d2 = (s * s - 2.0 * s * th * th) * f0 + 6.0 * s * th * f1
                        + 4.0 * th * th * f2;
                    d2 - d1
                }
            }
        }
    };
    // Substitute u = sinh(v/2), making this a plain Fourier integral
    // ∫ cos(x u) G(u) du of the even function G(u) = 2 q(v(u)) / cosh(v/2).
    // Its spectrum is the quantity being computed, which is concentrated in
    // |y| below the aliasing margin, so by Poisson summation a trapezoid sum
    // with step 2 pi / (x + margin) is exact to the support threshold.
    let umax = (0.5 * vmax).sinh();
    let du = 2.0 * PI / (x.abs() + h_alias_margin(fam));
    let g = |u: f64| 2.0 * q(2.0 * u.asinh()) / (1.0 + u * u).sqrt();
    let mut sum = 0.5 * g(0.0);
    let mut k = 1u64;
    loop {
        let u = k as f64 * du;
        if u > umax {
            break;
        }
        sum += g(u) * (x * u).cos();
        k += 1;
    }
    Ok(2.0 * du * sum)
}

/// Mellin transform of the step-1 output, computed on the spectral side:
/// the Mellin factor of the minus Bessel kernel integrated against the
/// weighted test function, with the gamma and cosh factors combined in log
/// space. Exact for Re w > 0; for -1 < Re w <= 0 the analytic continuation
/// differs by residue terms that are far below f64 resolution for the
/// standard family (the test function is astronomically small near t = 0
/// compared to its spectral peak), which the tests confirm against an
/// independent route.
pub fn mellin_h_spectral(fam: &HtFamily, w: C64) -> Result<C64> {
    if w.re <= -1.0 {
        return Err(Error::Region("Mellin abscissa must exceed -1"));
    }
    let tc = fam.support_cutoff(SUPPORT_DROP);
    let half_w = 0.5 * w;
    let f = |t: f64| -> Result<C64> {
        // tanh * cosh = sinh, folded into the exponent:
        // ln sinh(pi t) = pi t + ln(1 - e^{-2 pi t}) - ln 2
        let ln_sinh = PI * t + (-(-2.0 * PI * t).exp()).ln_1p() - LN_2;
        let it = Complex64::new(0.0, t);
        let z = w * LN_2
            + log_gamma(half_w + it)?
            + log_gamma(half_w - it)?
            + Complex64::new(ln_sinh + fam.log_eval_real(t), 0.0);
        Ok(z.exp() * (t / (2.0 * PI * PI)))
    };
    // The integrand is even in t with instantaneous frequency ln|t| (the
    // gamma-pair phase), so its spectrum occupies a narrow band below
    // ln(tc + |Im w|/2) plus the Gaussian broadening of the family. A
    // trapezoid step keeping the first Poisson alias beyond twice that band
    // is then exact to f64 for the same reason as in the Fourier routines.
    let dt = 2.0 * PI / (2.0 * (2.0 + tc + 0.5 * w.im.abs()).ln() + 4.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut k = 1u64;
    loop {
        let t = k as f64 * dt;
        if t > tc {
            break;
        }
        sum += f(t)?;
        k += 1;
    }
    Ok(2.0 * dt * sum)
}

/// The Mellin-side multiplier of step 2 at shift s:
/// `(Mellin H)(-u - 4s) (4 pi)^{u + 4s} G_eta((1+u)/2 + s)`,
/// defined for |Re(u + 4s)| < strip and Re(u + 2s) > 0.
pub fn multiplier_heta<F>(
    rep: &RepresentationParameter,
    eta: u8,
    u: C64,
    s: C64,
    hhat: &F,
    strip: f64,
) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    if (u + 4.0 * s).re.abs() >= strip {
        return Err(Error::Region("Re(u + 4s) outside the Mellin strip"));
    }
    if (u + 2.0 * s).re <= 0.0 {
        return Err(Error::Region("need Re(u + 2s) > 0"));
    }
    let arg = -u - 4.0 * s;
    let scale = ((u + 4.0 * s) * (4.0 * PI).ln()).exp();
    let g = curly_g_eps(rep, eta, (1.0 + u) / 2.0 + s)?;
    Ok(hhat(arg)? * scale * g)
}

/// The auxiliary weight at shift s by its defining contour,
/// `phi_eta(x; s) = ∫ multiplier(u; s) (4 pi)^u x^{-u} du/(2 pi i)`.
/// The abscissa is taken from `spec`, whose tolerance is interpreted
/// relative to the sampled integrand scale. Practical only where the
/// supplied Mellin data decays along the line.
pub fn phi_eta_contour<F>(
    rep: &RepresentationParameter,
    eta: u8,
    x: f64,
    s: C64,
    hhat: &F,
    strip: f64,
    spec: &ContourSpec,
) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    if !(x > 0.0) {
        return Err(Error::Region("contour weight needs x > 0"));
    }
    let v = spec.abscissa;
    let lo = -2.0 * s.re - 2.0 * rep.delta;
    let hi = strip - 4.0 * s.re;
    if v <= lo || v >= hi {
        return Err(Error::WindowEmpty { lo, hi });
    }
    let ln4pi = (4.0 * PI).ln();
    let f = |u: C64| -> Result<C64> {
        let m = multiplier_heta(rep, eta, u, s, hhat, strip)?;
        Ok(m * (u * ln4pi - u * x.ln()).exp())
    };
    // sample the integrand to turn the absolute quadrature tolerance into a
    // relative one, then integrate with error capture
    let mut scale = 0.0f64;
    for fr in [0.0, 0.05, 0.2, 0.5] {
        scale = scale.max(f(Complex64::new(v, fr * spec.height_cap))?.norm());
    }
    let eff = ContourSpec::new(
        v,
        spec.height_cap,
        spec.nodes_per_unit,
        spec.tol * scale.max(1e-280),
    )?;
    let failure = std::cell::RefCell::new(None);
    let g = |u: C64| -> C64 {
        if failure.borrow().is_some() {
            return Complex64::new(0.0, 0.0);
        }
        match f(u) {
            Ok(val) => val,
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let res = quad::integrate_vertical_line(&g, &eff);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(res?.value)
}

/// Uniform-grid Catmull-Rom interpolation of complex samples; zero outside.
/// Boundary segments use linearly extrapolated ghost points so the first
/// and last intervals interpolate rather than extrapolate.
fn catmull_rom(vals: &[C64], lo: f64, step: f64, x: f64) -> C64 {
    let n = vals.len();
    let p = (x - lo) / step;
    if p < 0.0 || p > (n - 1) as f64 || n < 2 {
        return Complex64::new(0.0, 0.0);
    }
    let i = (p.floor() as usize).min(n - 2);
    let t = p - i as f64;
    let p1 = vals[i];
    let p2 = vals[i + 1];
    let p0 = if i == 0 { 2.0 * vals[0] - vals[1] } else { vals[i - 1] };
    let p3 = if i + 2 > n - 1 { 2.0 * vals[n - 1] - vals[n - 2] } else { vals[i + 2] };
    0.5 * (2.0 * p1
        + (p2 - p0) * t
        + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t * t
        + (3.0 * p1 - p0 - 3.0 * p2 + p3) * t * t * t)
}

/// The step-1 output as an exact finite cosine sum. After the substitution
/// u = 2 sinh(v/2) the Fourier-side integral becomes a plain Fourier
/// transform of a function whose spectrum is H itself, concentrated below
/// the aliasing margin; a trapezoid sum in u is then exact to that
/// threshold (Poisson summation), and H(y) is the resulting short cosine
/// sum — no interpolation and no tabulation error.
#[derive(Debug, Clone)]
pub struct HProfile {
    pub t_scale: f64,
    /// Largest y at which the cosine-sum representation is alias-free.
    pub y_valid: f64,
    pub peak: f64,
    /// Window outside which |H| sits below the resolvable threshold (the
    /// larger of 10^{-15} of the peak and the f64 round-off floor of the
    /// cosine sum).
    pub y_support_lo: f64,
    pub y_support_hi: f64,
    /// (frequency, coefficient) pairs: H(y) = sum of c cos(u y).
    nodes: Vec<(f64, f64)>,
}

impl HProfile {
    pub fn build(fam: &HtFamily) -> Result<Self> {
        let vmax = 1.2 * fourier_support(fam) + 0.1;
        let umax = (0.5 * vmax).sinh();
        let y_valid = 2.6 * fam.support_cutoff(SUPPORT_DROP);
        let du = 2.0 * PI / (y_valid + h_alias_margin(fam));
        let n = (umax / du).floor() as usize;
        // after u = sinh(v/2) the Fourier integrand is G(u) = 2 h^vee / cosh(v/2)
        let mut nodes = Vec::with_capacity(n + 1);
        nodes.push((0.0, 2.0 * du * h_spec_fourier(fam, 0.0)));
        for k in 1..=n {
            let u = k as f64 * du;
            let v = 2.0 * u.asinh();
            let g = 2.0 * h_spec_fourier(fam, v) / (1.0 + u * u).sqrt();
            nodes.push((u, 2.0 * du * g));
        }
        let mut prof = HProfile {
            t_scale: fam.t_scale,
            y_valid,
            peak: 0.0,
            y_support_lo: 0.0,
            y_support_hi: y_valid,
            nodes,
        };
        // scan magnitudes; the support threshold must sit above the
        // round-off floor of the sum, which the coefficient mass bounds
        let coeff_mass: f64 = prof.nodes.iter().map(|&(_, c)| c.abs()).sum();
        let dy = 0.02 * fam.t_scale;
        let ny = (y_valid / dy) as usize;
        let mags: Vec<f64> = (0..=ny).map(|k| prof.eval(k as f64 * dy).abs()).collect();
        prof.peak = mags.iter().cloned().fold(0.0, f64::max);
        let floor = 1e-16 * coeff_mass * (prof.nodes.len() as f64).sqrt();
        let thresh = (1e-15 * prof.peak).max(30.0 * floor);
        if let Some(k) = mags.iter().position(|&m| m > thresh) {
            prof.y_support_lo = (k.saturating_sub(1)) as f64 * dy;
        }
        if let Some(k) = mags.iter().rposition(|&m| m > thresh) {
            prof.y_support_hi = ((k + 1) as f64 * dy).min(y_valid);
        }
        Ok(prof)
    }

    /// H(y); even in y, alias-free for |y| up to `y_valid`.
    pub fn eval(&self, y: f64) -> f64 {
        self.nodes.iter().map(|&(u, c)| c * (u * y).cos()).sum()
    }

    /// Highest frequency present in the representation (for quadrature
    /// pacing when H appears inside another integral).
    pub fn max_freq(&self) -> f64 {
        self.nodes.last().map_or(0.0, |&(u, _)| u)
    }
}

/// The scalar inverse-Mellin kernel of one sign cached on a logarithmic
/// grid, up to the argument where the residue series loses too many digits
/// to cancellation.
#[derive(Debug, Clone)]
pub struct GProfile {
    pub sign_plus: bool,
    pub ln_lo: f64,
    pub dln: f64,
    /// Last grid abscissa (series reach); treated as zero beyond.
    pub ln_hi: f64,
    vals: Vec<C64>,
}

impl GProfile {
    pub fn build(rep: &RepresentationParameter, sign_plus: bool) -> Result<Self> {
        let (ln_lo, dln, cap) = (-100.0f64, 0.02f64, (60000.0f64).ln());
        let mut vals = Vec::with_capacity(((cap - ln_lo) / dln) as usize + 1);
        let mut l = ln_lo;
        while l <= cap {
            match g_kernel_series_signed(rep, sign_plus, l.exp()) {
                Ok(g) => vals.push(g.value),
                Err(kernels::Error::CancellationLoss { .. }) => break,
                Err(e) => return Err(e.into()),
            }
            l += dln;
        }
        if vals.len() < 8 {
            return Err(Error::Region("scalar kernel series has no usable range"));
        }
        let ln_hi = ln_lo + (vals.len() - 1) as f64 * dln;
        Ok(GProfile { sign_plus, ln_lo, dln, ln_hi, vals })
    }

    pub fn eval(&self, z: f64) -> C64 {
        if !(z > 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        catmull_rom(&self.vals, self.ln_lo, self.dln, z.ln())
    }
}

/// The Mellin transform of the step-1 output cached along one vertical
/// line: values of (Mellin H)(-u) for u = abscissa + i y on a uniform
/// y-grid. Along the line the gamma-factor product of the auxiliary weight
/// only grows polynomially; all the decay of the weight's integrand comes
/// from the Mellin values themselves, which die on the scale set by the
/// relative width of the family's spectral bump. Caching them makes
/// repeated line integrals cheap.
#[derive(Debug, Clone)]
pub struct HhatLine {
    /// Re u of the line.
    pub abscissa: f64,
    pub ymax: f64,
    dy: f64,
    /// (Mellin H)(-(abscissa + i k dy)) for k = 0.. .
    vals: Vec<C64>,
}

impl HhatLine {
    /// Tabulate up the line until the Mellin values have fallen to 1e-10 of
    /// their running maximum (or the hard cap `ymax_cap` is reached). The
    /// weight's gamma factor along the line only grows polynomially, so the
    /// table's reach decides the usable truncation height.
    pub fn build(fam: &HtFamily, abscissa: f64, ymax_cap: f64) -> Result<Self> {
        if !(abscissa > 0.0 && abscissa < 1.0) {
            return Err(Error::Region("line abscissa must lie in (0, 1)"));
        }
        let dy = 0.008f64;
        let n_cap = (ymax_cap / dy).ceil() as usize;
        let mut vals = Vec::new();
        let mut peak = 0.0f64;
        let mut below = 0usize;
        for k in 0..=n_cap {
            let u = Complex64::new(abscissa, k as f64 * dy);
            let v = mellin_h_spectral(fam, -u)?;
            peak = peak.max(v.norm());
            vals.push(v);
            below = if v.norm() < 1e-10 * peak { below + 1 } else { 0 };
            if below > 100 {
                break;
            }
        }
        let ymax = (vals.len() - 1) as f64 * dy;
        Ok(HhatLine { abscissa, ymax, dy, vals })
    }

    /// (Mellin H)(-(abscissa + i y)); the step-1 output is real, so the
    /// negative half-line follows by conjugation.
    pub fn eval(&self, y: f64) -> C64 {
        if y < 0.0 {
            catmull_rom(&self.vals, 0.0, self.dy, -y).conj()
        } else {
            catmull_rom(&self.vals, 0.0, self.dy, y)
        }
    }
}

/// A uniformly sampled complex function of a real variable with Catmull-Rom
/// evaluation; used for per-sign caches along the vertical line.
#[derive(Debug, Clone)]
struct LineTable {
    lo: f64,
    dy: f64,
    vals: Vec<C64>,
}

impl LineTable {
    fn eval(&self, y: f64) -> C64 {
        catmull_rom(&self.vals, self.lo, self.dy, y)
    }
}

/// The auxiliary weight by its vertical-line form,
/// `phi^{±}(x) = ∫ (Mellin H)(-u) 4^u G^{±}((1+u)/2) x^{-u} du/(2 pi i)`,
/// using cached Mellin values and a cached gamma-factor table. Accurate
/// once x is of order one (for tiny x the line integral loses all its
/// digits to cancellation; the convolution form covers that region
/// instead).
fn phi_pm_from_line(x: f64, line: &HhatLine, gtab: &LineTable) -> Result<C64> {
    let v = line.abscissa;
    let c = 2.0 * LN_2 - x.ln();
    let width = 12.0 / (x.ln().abs() + 20.0);
    let mut f = |y: f64| -> Result<C64> {
        let u = Complex64::new(v, y);
        Ok(line.eval(y) * gtab.eval(y) * (u * c).exp())
    };
    Ok(gl_range(&mut f, -line.ymax, line.ymax, width)? / (2.0 * PI))
}

/// Cached profile of the auxiliary weight phi^{±} on a logarithmic grid.
/// Small arguments use the Mellin-convolution identity against the step-1
/// profile (exact there, and free of cancellation); once the product of x
/// with the step-1 support outruns the scalar kernel's series reach, the
/// vertical-line form with cached Mellin values takes over.
#[derive(Debug, Clone)]
pub struct PhiProfile {
    pub sign_plus: bool,
    pub ln_lo: f64,
    pub ln_hi: f64,
    pub dln: f64,
    pub peak: f64,
    /// Largest grid abscissa where |phi| still exceeds 10^{-15} of the peak.
    pub ln_support_hi: f64,
    vals: Vec<C64>,
    /// Arguments up to here use the convolution form; beyond it the
    /// vertical-line form (which needs the gamma-factor table below).
    x_switch: f64,
    gtab: LineTable,
}

impl PhiProfile {
    pub fn build(
        rep: &RepresentationParameter,
        h: &HProfile,
        g: &GProfile,
        line: &HhatLine,
    ) -> Result<Self> {
        let (ln_lo, ln_hi, dln) = (-46.0f64, 5.0f64, 0.02f64);
        let m = ((ln_hi - ln_lo) / dln).round() as usize;
        let mut vals = vec![Complex64::new(0.0, 0.0); m + 1];
        let mut peak = 0.0f64;
        // The convolution is kept only where the scalar kernel stays deep
        // inside its series range (its values near the cancellation cut
        // carry ~1e-3 relative error) and the step-1 support is never
        // truncated; past the switch the vertical-line form takes over. The
        // line form in turn loses digits once phi has decayed far below the
        // line-integrand scale, which happens only for much smaller x.
        let xy_cap = 4.0 * (0.5 * g.ln_hi).exp();
        let x_switch = (0.9 * xy_cap / h.y_support_hi.max(1.0)).min(0.05);
        // gamma factor along the line, sampled finely enough for its
        // logarithmic phase (rate ~ 2 ln y) to interpolate to ~1e-7
        let gtab = {
            let gdy = 0.004f64;
            let n = (line.ymax / gdy).ceil() as i64;
            let mut gvals = Vec::with_capacity(2 * n as usize + 1);
            for k in -n..=n {
                let u = Complex64::new(line.abscissa, k as f64 * gdy);
                gvals.push(curly_g_pm(rep, g.sign_plus, (1.0 + u) / 2.0)?);
            }
            LineTable { lo: -(n as f64) * gdy, dy: gdy, vals: gvals }
        };
        for (idx, slot) in vals.iter_mut().enumerate() {
            let l = ln_lo + idx as f64 * dln;
            let x = l.exp();
            if x > x_switch {
                *slot = phi_pm_from_line(x, line, &gtab)?;
            } else {
                *slot = phi_conv(x, h, g, xy_cap)?;
            }
            peak = peak.max(slot.norm());
        }
        let mut ln_support_hi = ln_hi;
        for idx in (0..=m).rev() {
            if vals[idx].norm() > 1e-15 * peak {
                ln_support_hi = ln_lo + idx as f64 * dln;
                break;
            }
        }
        Ok(PhiProfile {
            sign_plus: g.sign_plus,
            ln_lo,
            ln_hi,
            dln,
            peak,
            ln_support_hi,
            vals,
            x_switch,
            gtab,
        })
    }

    pub fn eval(&self, x: f64) -> C64 {
        if !(x > 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        catmull_rom(&self.vals, self.ln_lo, self.dln, x.ln())
    }

    /// Recompute the weight at `x` from the cached line and step-1 data
    /// instead of interpolating the profile grid. The profile interpolation
    /// is adequate for size estimates, but the weight oscillates in log x at
    /// a rate growing like sqrt(x), so interpolation on a fixed grid loses
    /// several digits at moderate x; reference computations use this.
    pub fn eval_precise(
        &self,
        x: f64,
        h: &HProfile,
        g: &GProfile,
        line: &HhatLine,
    ) -> Result<C64> {
        if !(x > 0.0) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if x > self.x_switch {
            phi_pm_from_line(x, line, &self.gtab)
        } else {
            phi_conv(x, h, g, 4.0 * (0.5 * g.ln_hi).exp())
        }
    }
}

/// The convolution form of the auxiliary weight,
/// `phi(x) = (x/2) ∫ H(y) g^{±}((xy)^2/16) dy`, valid while the scalar
/// kernel's argument stays inside its series range over the whole step-1
/// support.
fn phi_conv(x: f64, h: &HProfile, g: &GProfile, xy_cap: f64) -> Result<C64> {
    let y_lo = h.y_support_lo.max(1e-3);
    let y_cap = h.y_support_hi.min(xy_cap / x);
    if y_cap <= y_lo {
        return Ok(Complex64::new(0.0, 0.0));
    }
    // H oscillates at rate at most its top frequency; the scalar
    // kernel at argument (xy)^2/16 adds roughly sqrt(x/y) on top
    let rate = h.max_freq() + 1.0 + 1.5 * (x / y_lo).max(0.0).sqrt();
    let width = (12.0 / rate).min(h.t_scale / 2.0);
    let mut f = |y: f64| -> Result<C64> {
        let z = (x * y / 4.0).powi(2);
        Ok(g.eval(z) * h.eval(y))
    };
    Ok(gl_range(&mut f, y_lo, y_cap, width)? * (0.5 * x))
}

/// A per-family bundle: the representation data, the test-function family,
/// and the cached profiles. Building one performs all the expensive
/// quadrature once; the spectral transforms then reduce to one-dimensional
/// integrals against cached profiles.
#[derive(Debug, Clone)]
pub struct TransformPlan {
    pub rep: RepresentationParameter,
    pub family: HtFamily,
    pub h_profile: HProfile,
    pub hhat_line: HhatLine,
    pub g_plus: GProfile,
    pub g_minus: GProfile,
    pub phi_plus: PhiProfile,
    pub phi_minus: PhiProfile,
}

impl TransformPlan {
    pub fn new(rep: RepresentationParameter, family: HtFamily) -> Result<Self> {
        let h_profile = HProfile::build(&family)?;
        let hhat_line = HhatLine::build(&family, 0.2, 250.0)?;
        let g_plus = GProfile::build(&rep, true)?;
        let g_minus = GProfile::build(&rep, false)?;
        let phi_plus = PhiProfile::build(&rep, &h_profile, &g_plus, &hhat_line)?;
        let phi_minus = PhiProfile::build(&rep, &h_profile, &g_minus, &hhat_line)?;
        Ok(TransformPlan {
            rep,
            family,
            h_profile,
            hhat_line,
            g_plus,
            g_minus,
            phi_plus,
            phi_minus,
        })
    }

    pub fn phi(&self, sign: KernelSign) -> &PhiProfile {
        match sign {
            KernelSign::Minus => &self.phi_minus,
            _ => &self.phi_plus,
        }
    }

    /// The spectral transform by the weight route:
    /// `(1/8 pi^2) ∫ J_point(x) phi(x) dx/x` over the cached support.
    pub fn h_transform(&self, point: SpectralPoint, sign: KernelSign) -> Result<C64> {
        check_point(point, sign)?;
        let prof = self.phi(sign);
        let freq = match point {
            SpectralPoint::Maass { t } => 2.0 * t.abs(),
            SpectralPoint::Holomorphic { k } => k as f64,
        };
        // the minus kernel dies exponentially once x outruns its parameter
        let hard_hi = match (sign, point) {
            (KernelSign::Minus, SpectralPoint::Maass { t }) => (2.2 * t.abs() + 45.0).ln(),
            _ => f64::INFINITY,
        };
        let hi = (prof.ln_support_hi + 0.5).min(prof.ln_hi).min(hard_hi);
        let lo = prof.ln_lo;
        let y_hi = self.h_profile.y_support_hi;
        let mut total = Complex64::new(0.0, 0.0);
        let mut l = lo;
        while l < hi {
            // phi oscillates in ln x at rate up to sqrt(x y) over the
            // step-1 support (the scalar kernel's phase grows like the
            // square root of its argument's square root)
            let x_scale = if l > -2.0 { (1.2 * l.exp() * y_hi).sqrt() } else { 0.0 };
            let w = (12.0 / (freq + 4.0 + x_scale)).min(0.6).min(hi - l);
            let mut f = |u: f64| -> Result<C64> {
                let x = u.exp();
                Ok(j_kernel(&point, sign, x)? * prof.eval(x))
            };
            total += gl_panel(&mut f, l, l + w)?;
            l += w;
        }
        Ok(total / (8.0 * PI * PI))
    }

    /// The weight-route transform with the weight recomputed exactly at
    /// every quadrature node instead of interpolated from the profile grid.
    /// Slower (milliseconds per node) but several digits more accurate;
    /// used as the reference side of route-agreement checks.
    pub fn h_transform_precise(&self, point: SpectralPoint, sign: KernelSign) -> Result<C64> {
        check_point(point, sign)?;
        let prof = self.phi(sign);
        let g = match sign {
            KernelSign::Minus => &self.g_minus,
            _ => &self.g_plus,
        };
        let freq = match point {
            SpectralPoint::Maass { t } => 2.0 * t.abs(),
            SpectralPoint::Holomorphic { k } => k as f64,
        };
        let hard_hi = match (sign, point) {
            (KernelSign::Minus, SpectralPoint::Maass { t }) => (2.2 * t.abs() + 45.0).ln(),
            _ => f64::INFINITY,
        };
        let hi = (prof.ln_support_hi + 0.5).min(prof.ln_hi).min(hard_hi);
        let lo = prof.ln_lo;
        let y_hi = self.h_profile.y_support_hi;
        let mut total = Complex64::new(0.0, 0.0);
        let mut l = lo;
        while l < hi {
            let x_scale = if l > -2.0 { (1.2 * l.exp() * y_hi).sqrt() } else { 0.0 };
            let w = (12.0 / (freq + 4.0 + x_scale)).min(0.6).min(hi - l);
            let mut f = |u: f64| -> Result<C64> {
                let x = u.exp();
                let phi = prof.eval_precise(x, &self.h_profile, g, &self.hhat_line)?;
                Ok(j_kernel(&point, sign, x)? * phi)
            };
            total += gl_panel(&mut f, l, l + w)?;
            l += w;
        }
        Ok(total / (8.0 * PI * PI))
    }

    /// The same transform by the direct kernel route:
    /// `(1/8 pi^2) ∫ K(t, point) h_spec(t) dt` over the spectral line. Slow
    /// for the plus and holomorphic flavors (each kernel value is itself a
    /// contour integral); the minus flavor uses the terminating
    /// hypergeometric sum and is fast.
    pub fn h_transform_kernel_route(
        &self,
        point: SpectralPoint,
        sign: KernelSign,
        kernel_tol: f64,
    ) -> Result<C64> {
        check_point(point, sign)?;
        let tc = self.family.support_cutoff(SUPPORT_DROP);
        let width = if sign == KernelSign::Minus { 1.0 } else { 1.7 };
        // the unit-argument hypergeometric route for the minus kernel
        // converges too slowly once the spectral parameter is large, so the
        // contour form serves every flavor here
        let mut f = |t0: f64| -> Result<C64> {
            let k = match (sign, point) {
                (KernelSign::Minus | KernelSign::Plus, SpectralPoint::Maass { t: r }) => {
                    let spec = suggested_contour(&self.rep, t0.max(r), kernel_tol);
                    kernel_k(&self.rep, sign, t0, r, &spec)?
                }
                (KernelSign::Hol, SpectralPoint::Holomorphic { k }) => {
                    let spec = suggested_contour(&self.rep, t0.max(k as f64), kernel_tol);
                    kernel_k_hol(&self.rep, t0, k, &spec)?
                }
                _ => unreachable!("checked above"),
            };
            Ok(k * self.family.h_spec_real(t0))
        };
        // the kernel is expensive, so integrate only over the spectral
        // support window of the family
        let t_lo = support_lower(&self.family, SUPPORT_DROP).max(1e-3);
        let total = gl_range(&mut f, t_lo, tc, width)?;
        Ok(2.0 * total / (8.0 * PI * PI))
    }
}

fn check_point(point: SpectralPoint, sign: KernelSign) -> Result<()> {
    match (sign, point) {
        (KernelSign::Hol, SpectralPoint::Holomorphic { .. }) => Ok(()),
        (KernelSign::Plus | KernelSign::Minus, SpectralPoint::Maass { .. }) => Ok(()),
        _ => Err(Error::Region("spectral point does not match the kernel flavor")),
    }
}
