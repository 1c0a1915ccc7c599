//! The scalar kernel g(x): inverse-Mellin-type integral of the minus-signed
//! gamma-factor product, evaluated by a piecewise-vertical contour (honest
//! but slowly converging) and by a superexponentially convergent residue
//! series (the workhorse for double-integral identities).

use crate::{C64, Error, RepresentationParameter, Result};
use crate::gfactors::{curly_g_pm, detect_pairs, trig_bracket};
use num_complex::Complex64;
use quad::ContourSpec;
use specfun::gamma;

/// Series value with a cancellation-based error estimate.
#[derive(Debug, Clone, Copy)]
pub struct GValue {
    pub value: C64,
    pub abs_error_estimate: f64,
}

// Composite 16-point Gauss-Legendre along the straight segment [za, zb].
const GL16_X: [f64; 8] = [
    0.09501250983763744,
    0.2816035507792589,
    0.45801677765722739,
    0.61787624440264375,
    0.75540440835500303,
    0.86563120238783174,
    0.94457502307323258,
    0.98940093499164993,
];
const GL16_W: [f64; 8] = [
    0.189450610455068496,
    0.182603415044923589,
    0.169156519395002532,
    0.149595988816576732,
    0.124628971255533872,
    0.095158511682492785,
    0.062253523938647893,
    0.027152459411754095,
];

fn segment<F: Fn(C64) -> C64>(f: &F, za: C64, zb: C64, panels: usize) -> C64 {
    let dz = zb - za;
    let w = 1.0 / panels as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * w;
        let half = 0.5 * w;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..8 {
            acc += GL16_W[i]
                * (f(za + dz * (mid + half * GL16_X[i])) + f(za + dz * (mid - half * GL16_X[i])));
        }
        sum += acc * half;
    }
    sum * dz
}

/// g(x) = ∫_𝒞 𝒢^−(u) x^{−u} du/(2πi) over a piecewise-vertical contour:
/// close to the real axis the path runs right of the pole region, and at
/// height it moves left (Re u < 1/4) so the integrand decays.
/// `spec.height_cap` truncates the outer rays; the power-law tail there is
/// the accuracy limit, so tolerances should be loose.
pub fn g_kernel(rep: &RepresentationParameter, x: f64, spec: &ContourSpec) -> Result<C64> {
    if x <= 0.0 {
        return Err(Error::SpecialFunction(specfun::Error::NonPositiveArgument(x)));
    }
    // outer-ray abscissa comes from the spec: anywhere in the pole-free
    // corridor right of 1/2 − delta and left of 1/4 is legitimate
    let c_high = spec.abscissa;
    if c_high <= 0.5 - rep.delta + 0.01 || c_high >= 0.25 {
        return Err(Error::ContourOutOfRange { v: c_high, max: 0.25 });
    }
    let c_low = (0.5 - rep.delta + 0.05).max(c_high + 0.02);
    let y0 = 3.0;
    let ymax = spec.height_cap.max(y0 + 1.0);
    let lx = x.ln();

    let failure: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);
    let f = |u: C64| -> C64 {
        if failure.borrow().is_some() {
            return C64::new(0.0, 0.0);
        }
        match curly_g_pm(rep, false, u) {
            Ok(g) => g * (-u * lx).exp(),
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                C64::new(0.0, 0.0)
            }
        }
    };
    let waypoints = [
        C64::new(c_high, -ymax),
        C64::new(c_high, -y0),
        C64::new(c_low, -y0),
        C64::new(c_low, y0),
        C64::new(c_high, y0),
        C64::new(c_high, ymax),
    ];
    // enough nodes per unit to resolve both the x^{-iy} and the gamma phases
    let density = spec.nodes_per_unit + 0.8 * (lx.abs() + 4.0 * ymax.ln());
    let mut prev = C64::new(f64::NAN, 0.0);
    let mut value = C64::new(0.0, 0.0);
    let mut mult = 1.0f64;
    for round in 0..4 {
        let mut total = C64::new(0.0, 0.0);
        for w in waypoints.windows(2) {
            let len = (w[1] - w[0]).norm();
            let panels = ((len * density * mult / 16.0).ceil() as usize).max(1);
            total += segment(&f, w[0], w[1], panels);
        }
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        value = total / Complex64::new(0.0, 2.0 * std::f64::consts::PI);
        if round > 0 && (value - prev).norm() < spec.tol * (1.0 + value.norm()) {
            return Ok(value);
        }
        prev = value;
        mult *= 2.0;
    }
    Ok(value)
}

/// g(x) as the sum of residues at u = −μ_j − n, n ≥ 0. Requires the four
/// spectral parameters to be pairwise distinct modulo the integers (simple
/// poles). Converges superexponentially; the error estimate tracks the
/// floating-point cancellation of the largest term.
pub fn g_kernel_series(rep: &RepresentationParameter, x: f64) -> Result<GValue> {
    g_kernel_series_signed(rep, false, x)
}

/// [`g_kernel_series`] generalized to either sign of the gamma-factor
/// combination; the minus sign reproduces `g_kernel_series`.
pub fn g_kernel_series_signed(
    rep: &RepresentationParameter,
    sign_plus: bool,
    x: f64,
) -> Result<GValue> {
    if x <= 0.0 {
        return Err(Error::SpecialFunction(specfun::Error::NonPositiveArgument(x)));
    }
    if !detect_pairs(rep).pairs.is_empty() {
        return Err(Error::InvalidRepresentation(
            "series route needs spectral parameters distinct modulo integers",
        ));
    }
    for j in 0..4 {
        for k in 0..4 {
            if k == j {
                continue;
            }
            let d = rep.mu[k] - rep.mu[j];
            if d.im.abs() < 1e-8 && (d.re - d.re.round()).abs() < 1e-8 {
                return Err(Error::InvalidRepresentation(
                    "series route needs spectral parameters distinct modulo integers",
                ));
            }
        }
    }
    let lx = x.ln();
    let mut sum = C64::new(0.0, 0.0);
    let mut max_term = 0.0f64;
    for j in 0..4 {
        // base_n = (−1)^n/n! · Π_{k≠j} Γ(μ_k − μ_j − n) · x^{μ_j + n}
        let mut base = (rep.mu[j] * lx).exp();
        for k in 0..4 {
            if k != j {
                base *= gamma(rep.mu[k] - rep.mu[j])?;
            }
        }
        for n in 0..600u32 {
            let u = -rep.mu[j] - n as f64;
            let term = base * trig_bracket(rep, sign_plus, u);
            sum += term;
            max_term = max_term.max(term.norm());
            if n > 8 && term.norm() < 1e-20 * max_term.max(1e-280) {
                break;
            }
            let mut ratio = C64::new(-x / (n as f64 + 1.0), 0.0);
            for k in 0..4 {
                if k != j {
                    ratio /= rep.mu[k] - rep.mu[j] - (n as f64 + 1.0);
                }
            }
            base *= ratio;
        }
    }
    let est = 3e-16 * max_term;
    if est > 1e-3 * sum.norm().max(1e-280) && est > 1e-6 {
        return Err(Error::CancellationLoss { est });
    }
    Ok(GValue { value: sum, abs_error_estimate: est })
}
