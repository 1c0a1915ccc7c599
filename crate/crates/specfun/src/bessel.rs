use crate::dd::{Dd, DdC};
use crate::{log_gamma, Error, KResult, Result, SeriesResult, C64};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const DEFAULT_K_STRIP: f64 = 100.0;

const SERIES_CAP: usize = 20_000;

/// Ascending power series for I (or J when `alternating`), with an external
/// log-scale applied to every term: computes e^{log_scale} * I_nu(x).
/// Returns the series result plus the largest term magnitude seen, which is
/// what the caller needs to judge cancellation loss.
fn power_series(
    nu: C64,
    x: f64,
    log_scale: f64,
    alternating: bool,
) -> Result<(SeriesResult, f64)> {
    let lg = log_gamma(nu + 1.0)?;
    let log_t0 = nu * (x / 2.0).ln() + log_scale - lg;
    if log_t0.re > 700.0 {
        return Err(Error::Overflow);
    }
    let mut term = log_t0.exp();
    let q = (x / 2.0) * (x / 2.0) * if alternating { -1.0 } else { 1.0 };
    let mut sum = term;
    let mut comp = Complex64::new(0.0, 0.0); // Kahan compensation
    let mut max_term = term.norm();
    let mut small_streak = 0usize;
    let mut k = 1usize;
    loop {
        term = term * q / ((k as f64) * (nu + k as f64));
        let t = term - comp;
        let s = sum + t;
        comp = (s - sum) - t;
        sum = s;
        let tn = term.norm();
        if !tn.is_finite() {
            return Err(Error::Overflow);
        }
        max_term = max_term.max(tn);
        if tn <= sum.norm() * 1e-17 + 1e-305 {
            small_streak += 1;
            if small_streak >= 2 {
                break;
            }
        } else {
            small_streak = 0;
        }
        k += 1;
        if k > SERIES_CAP {
            return Err(Error::NonConvergence { terms: k, max_term });
        }
    }
    // Ratio-test tail: the term ratio magnitude is monotone decreasing here.
    let rho = (q.abs() / ((k as f64 + 1.0) * (nu + (k as f64 + 1.0)).norm())).min(0.5);
    let tail = term.norm() * rho / (1.0 - rho);
    Ok((
        SeriesResult { value: sum, terms_used: k, tail_bound: tail },
        max_term,
    ))
}

/// Same series in double-double arithmetic (about 32 significant digits).
fn power_series_dd(
    nu: C64,
    x: f64,
    log_scale: f64,
    alternating: bool,
) -> Result<(SeriesResult, f64)> {
    let lg = log_gamma(nu + 1.0)?;
    let log_t0 = nu * (x / 2.0).ln() + log_scale - lg;
    if log_t0.re > 700.0 {
        return Err(Error::Overflow);
    }
    let mut term = DdC::from_c(log_t0.exp());
    let xh = Dd::from(x / 2.0);
    let q = xh.mul(xh).mul(Dd::from(if alternating { -1.0 } else { 1.0 }));
    let mut sum = term;
    let mut max_term = term.norm();
    let mut small_streak = 0usize;
    let mut k = 1usize;
    loop {
        let denom = DdC::from_f64(nu.re + k as f64, nu.im).mul(DdC {
            re: Dd::from(k as f64),
            im: Dd::ZERO,
        });
        term = term.mul(DdC { re: q, im: Dd::ZERO }).div(denom);
        sum = sum.add(term);
        let tn = term.norm();
        if !tn.is_finite() {
            return Err(Error::Overflow);
        }
        max_term = max_term.max(tn);
        if tn <= sum.norm() * 1e-33 + 1e-305 {
            small_streak += 1;
            if small_streak >= 2 {
                break;
            }
        } else {
            small_streak = 0;
        }
        k += 1;
        if k > SERIES_CAP {
            return Err(Error::NonConvergence { terms: k, max_term });
        }
    }
    let rho = (q.abs() / ((k as f64 + 1.0) * (nu + (k as f64 + 1.0)).norm())).min(0.5);
    let tail = term.norm() * rho / (1.0 - rho);
    Ok((
        SeriesResult { value: sum.to_c(), terms_used: k, tail_bound: tail },
        max_term,
    ))
}

/// Modified Bessel function I_nu(x) by its power series, with a ratio-test
/// tail bound. Errors if the terms are still growing at the series cap.
pub fn bessel_i(order: C64, x: f64) -> Result<SeriesResult> {
    if x <= 0.0 {
        return Err(Error::NonPositiveArgument(x));
    }
    Ok(power_series(order, x, 0.0, false)?.0)
}

/// e^{log_scale} * I_nu(x). The scale rides inside the series so quantities
/// like e^{-pi t} I_{2it}(x) never overflow on the way out. If plain doubles
/// would lose more than ~7 digits to cancellation the summation silently
/// escalates to double-double arithmetic.
pub fn bessel_i_scaled(order: C64, x: f64, log_scale: f64) -> Result<SeriesResult> {
    if x <= 0.0 {
        return Err(Error::NonPositiveArgument(x));
    }
    let (r, max_term) = power_series(order, x, log_scale, false)?;
    if max_term * 3e-16 <= 1e-10 * r.value.norm().max(1e-280) {
        return Ok(r);
    }
    let (r, max_term) = power_series_dd(order, x, log_scale, false)?;
    let est = max_term * 1e-31;
    if est > 1e-9 * r.value.norm().max(1e-280) {
        return Err(Error::CancellationLoss { est });
    }
    Ok(r)
}

/// Im(e^{-pi t} I_{2it}(x)) for real t > 0, x > 0, with cancellation
/// escalation targeted at the imaginary part (which is the piece that
/// carries sinh(pi t) K_{2it}(x); the real part can dwarf it without being
/// wanted). Errors with CancellationLoss when even double-double summation
/// cannot resolve the imaginary part, signalling the caller to switch to the
/// K-integral representation.
pub fn bessel_i_scaled_im(t: f64, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::NonPositiveArgument(x));
    }
    let nu = Complex64::new(0.0, 2.0 * t);
    let ls = -PI * t;
    let (r, max_term) = power_series(nu, x, ls, false)?;
    if max_term * 3e-16 <= 1e-11 * r.value.im.abs().max(1e-280) {
        return Ok(r.value.im);
    }
    let (r, max_term) = power_series_dd(nu, x, ls, false)?;
    let est = max_term * 1e-31;
    if est > 1e-10 * r.value.im.abs().max(1e-280) {
        return Err(Error::CancellationLoss { est });
    }
    Ok(r.value.im)
}

/// K_nu(x) = ∫_0^∞ e^{-x cosh u} cosh(nu u) du on a trapezoid mesh. The step
/// is tied to |Im nu| (the oscillation rate); the cutoff U is chosen so the
/// discarded tail is far below the 1e-10 * max(1, e^{-x}) target.
pub fn bessel_k_with_strip(order: C64, x: f64, strip: f64) -> Result<KResult> {
    if x <= 0.0 {
        return Err(Error::NonPositiveArgument(x));
    }
    if order.im.abs() > strip {
        return Err(Error::StripExceeded { im: order.im.abs(), strip });
    }
    if x > 705.0 {
        return Ok(KResult { value: Complex64::new(0.0, 0.0), underflowed: true });
    }
    let re_nu = order.re.abs();
    let mut u_max: f64 = 2.0;
    for _ in 0..60 {
        u_max = ((x + 40.0 + re_nu * u_max + u_max.ln().max(0.0)) / x).acosh();
    }
    let mut h = 1.885 / (32.0 + 0.32 * order.im.abs() + 0.5 * re_nu);
    let mut prev = integrate_k(order, x, u_max, h);
    let tol = 1e-12 * (-x).exp().max(1e-14);
    for _ in 0..4 {
        h *= 0.5;
        let cur = integrate_k(order, x, u_max, h);
        if (cur - prev).norm() < tol {
            return Ok(KResult { value: cur, underflowed: false });
        }
        prev = cur;
    }
    Ok(KResult { value: prev, underflowed: false })
}

fn integrate_k(nu: C64, x: f64, u_max: f64, h: f64) -> C64 {
    let n = (u_max / h).ceil() as usize;
    let mut sum = Complex64::new(0.5 * (-x).exp(), 0.0); // u = 0 endpoint, weight 1/2
    let mut comp = Complex64::new(0.0, 0.0);
    for k in 1..=n {
        let u = k as f64 * h;
        let decay = (-x * u.cosh()).exp();
        if decay == 0.0 {
            break;
        }
        let t = decay * (nu * u).cosh() - comp;
        let s = sum + t;
        comp = (s - sum) - t;
        sum = s;
    }
    sum * h
}

/// Bessel K with the default strip width for the order's imaginary part.
pub fn bessel_k(order: C64, x: f64) -> Result<KResult> {
    bessel_k_with_strip(order, x, DEFAULT_K_STRIP)
}

/// J_n(x) for integer n >= 0 via the theta integral
/// (1/pi) ∫_0^pi cos(n t - x sin t) dt, exact for integer order. The
/// integrand extends to a smooth even periodic function, so the trapezoid
/// rule converges spectrally.
fn bessel_j_int_theta(n: i64, x: f64) -> f64 {
    let m = 64 + 2 * ((x + n.unsigned_abs() as f64) as usize);
    let h = PI / m as f64;
    // Endpoints: cos(0) = 1 at theta = 0, cos(n pi) = (-1)^n at theta = pi.
    let mut sum = 0.5 + 0.5 * if n % 2 == 0 { 1.0 } else { -1.0 };
    for k in 1..m {
        let th = k as f64 * h;
        sum += (n as f64 * th - x * th.sin()).cos();
    }
    sum * h / PI
}

/// Large-argument Poincare expansion, adequate for x >= 30 and x >= 3|nu|^2.
fn bessel_j_asymptotic(nu: C64, x: f64) -> C64 {
    let omega = Complex64::new(x - PI / 4.0, 0.0) - nu * (PI / 2.0);
    let nu2_4 = 4.0 * nu * nu;
    let mut p = Complex64::new(1.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    let mut a = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..=24usize {
        let j = (2 * k - 1) as f64;
        a = a * (nu2_4 - j * j) / (k as f64 * 8.0 * x);
        let an = a.norm();
        if an > last {
            break;
        }
        last = an;
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        if an < 1e-18 {
            break;
        }
    }
    (2.0 / (PI * x)).sqrt() * (omega.cos() * p - omega.sin() * q)
}

/// Bessel J of complex (or integer) order and positive argument.
pub fn bessel_j(order: C64, x: f64) -> Result<C64> {
    if x <= 0.0 {
        return Err(Error::NonPositiveArgument(x));
    }
    // Integer order: series for small x, theta integral otherwise.
    if order.im.abs() < 1e-14 && (order.re - order.re.round()).abs() < 1e-12 {
        let n = order.re.round() as i64;
        let (n_abs, sign) = if n < 0 {
            (-n, if n % 2 == 0 { 1.0 } else { -1.0 })
        } else {
            (n, 1.0)
        };
        if x <= 8.0 && n_abs <= 40 {
            let (r, _) = power_series(Complex64::new(n_abs as f64, 0.0), x, 0.0, true)?;
            return Ok(sign * r.value);
        }
        return Ok(Complex64::new(sign * bessel_j_int_theta(n_abs, x), 0.0));
    }
    let nrm = order.norm();
    if x >= 30.0 && x >= 3.0 * nrm * nrm {
        return Ok(bessel_j_asymptotic(order, x));
    }
    if x <= f64::max(8.0, 0.5 * nrm) {
        let (r, max_term) = power_series(order, x, 0.0, true)?;
        if max_term * 3e-16 <= 1e-11 * r.value.norm().max(1.0) {
            return Ok(r.value);
        }
    }
    let (r, max_term) = power_series_dd(order, x, 0.0, true)?;
    let est = max_term * 1e-31;
    if est > 1e-9 * r.value.norm().max(1.0) {
        return Err(Error::CancellationLoss { est });
    }
    Ok(r.value)
}
