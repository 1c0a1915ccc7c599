use crate::{is_nonpositive_integer, Error, Result, SeriesResult, C64};
use num_complex::Complex64;

const HYP_CAP: usize = 4_000_000;

/// 4F3(a1..a4; b1..b3; 1) by term recurrence.
///
/// Convergence at unit argument needs Re(sum b - sum a) > 0; the terms then
/// decay like k^{-p} with p = 1 + sum b - sum a. A fitted power-law tail
/// correction (the integral of the asymptotic term law) is added once the
/// terms settle, which turns the O(K^{1-p}) raw truncation error into
/// O(K^{-p}); the reported tail bound covers the correction's own error.
pub fn hyp_4f3_at_1(a: [C64; 4], b: [C64; 3], tol: f64) -> Result<SeriesResult> {
    for bj in b {
        if is_nonpositive_integer(bj, 1e-13) {
            return Err(Error::LowerParameterPole(bj));
        }
    }
    let excess = b.iter().sum::<C64>() - a.iter().sum::<C64>();
    let terminating = a.iter().any(|ai| is_nonpositive_integer(*ai, 1e-13));
    if !terminating && excess.re <= 0.0 {
        return Err(Error::Divergent(excess.re));
    }
    // t_k ~ C k^{-p_c} with complex exponent p_c; used for the tail.
    let p_c = excess + 1.0;

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut comp = Complex64::new(0.0, 0.0);
    let mut decreasing_streak = 0usize;
    let mut prev_norm = f64::INFINITY;
    let mut k = 0usize;
    loop {
        let kf = k as f64;
        let num = (a[0] + kf) * (a[1] + kf) * (a[2] + kf) * (a[3] + kf);
        let den = (b[0] + kf) * (b[1] + kf) * (b[2] + kf) * (kf + 1.0);
        term = term * num / den;
        if term.norm() == 0.0 {
            // Terminating series (some a is a non-positive integer).
            return Ok(SeriesResult { value: sum, terms_used: k + 1, tail_bound: 0.0 });
        }
        let t = term - comp;
        let s = sum + t;
        comp = (s - sum) - t;
        sum = s;
        k += 1;

        let tn = term.norm();
        if tn < prev_norm {
            decreasing_streak += 1;
        } else {
            decreasing_streak = 0;
        }
        prev_norm = tn;

        if decreasing_streak >= 3 && k >= 16 {
            let kf = k as f64;
            // Integral of the fitted power law C j^{-p_c} over j > k.
            let correction = term * (kf / (p_c - 1.0));
            // Error of the correction: next order in 1/k, plus one raw term.
            let bound = correction.norm() * (16.0 / kf).min(1.0) + tn;
            if bound < tol {
                return Ok(SeriesResult {
                    value: sum + correction,
                    terms_used: k,
                    tail_bound: bound,
                });
            }
        }
        if k > HYP_CAP {
            let tail = tn * (k as f64) / (p_c - 1.0).norm().max(1e-3);
            return Err(Error::SlowConvergence { terms: k, tail, tol });
        }
    }
}
