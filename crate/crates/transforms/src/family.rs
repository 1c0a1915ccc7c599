//! The standard even test-function family h_T(t) = e^{-(t/T)^2} P_T(t),
//! where P_T is the squared product of (t^2 + ((2n-1)/2)^2) over n <= D,
//! scaled by T^{-4D}. The squared factors force double zeros at the
//! half-odd-integer points of the imaginary axis, which is what lets every
//! contour shift in the pipeline pass the poles of tanh and 1/cosh.

use crate::{C64, Error, Result};
use num_complex::Complex64;
use std::sync::Arc;

/// Parameters of one member of the family: the width `t_scale` (T) and the
/// number of forced zero pairs `zeros` (D).
#[derive(Debug, Clone, Copy)]
pub struct HtFamily {
    pub t_scale: f64,
    pub zeros: u32,
    /// True when the zero count meets the default requirement (D >= 50).
    /// Lower values are accepted for cheaper runs but flagged here.
    pub conforming: bool,
}

impl HtFamily {
    pub fn new(t_scale: f64, zeros: u32) -> Result<Self> {
        if !(t_scale > 1.0) {
            return Err(Error::InvalidFamily("width parameter must exceed 1"));
        }
        if zeros < 7 {
            return Err(Error::InvalidFamily("need at least 7 forced zero pairs"));
        }
        Ok(HtFamily { t_scale, zeros, conforming: zeros >= 50 })
    }

    /// h_T at a complex spectral point, via a log-space product. Summing
    /// principal logarithms is safe here: exp removes any 2 pi i ambiguity.
    pub fn eval(&self, t: C64) -> C64 {
        let mut log = -(t / self.t_scale) * (t / self.t_scale)
            - 4.0 * self.zeros as f64 * self.t_scale.ln();
        for n in 1..=self.zeros {
            let c = (2 * n - 1) as f64 / 2.0;
            let factor = t * t + c * c;
            if factor.norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            log += 2.0 * factor.ln();
        }
        log.exp()
    }

    /// log of h_T at real t > 0 (all factors positive there).
    pub fn log_eval_real(&self, t: f64) -> f64 {
        let mut log = -(t / self.t_scale).powi(2) - 4.0 * self.zeros as f64 * self.t_scale.ln();
        for n in 1..=self.zeros {
            let c = (2 * n - 1) as f64 / 2.0;
            log += 2.0 * (t * t + c * c).ln();
        }
        log
    }

    /// h_T(t) times the spectral-measure density t tanh(pi t) / (2 pi^2).
    pub fn h_spec(&self, t: C64) -> C64 {
        self.eval(t) * spec_density(t)
    }

    /// Same at real t, avoiding complex arithmetic in hot loops.
    pub fn h_spec_real(&self, t: f64) -> f64 {
        self.log_eval_real(t).exp() * t * (std::f64::consts::PI * t).tanh()
            / (2.0 * std::f64::consts::PI * std::f64::consts::PI)
    }

    /// Smallest t beyond which the spectral integrand is negligible
    /// relative to its peak (drop of e^{-drop_log}).
    pub fn support_cutoff(&self, drop_log: f64) -> f64 {
        let step = self.t_scale / 10.0;
        let mut peak = f64::NEG_INFINITY;
        let mut t = step;
        loop {
            let v = self.log_eval_real(t) + t.max(1e-10).ln();
            peak = peak.max(v);
            if v < peak - drop_log {
                return t;
            }
            t += step;
            if t > 1e4 * self.t_scale {
                return t;
            }
        }
    }
}

/// The spectral-measure density t tanh(pi t) / (2 pi^2), with the tanh
/// written through e^{-2|Re z|} so it saturates instead of overflowing far
/// from the imaginary axis.
pub fn spec_density(t: C64) -> C64 {
    let z = t * std::f64::consts::PI;
    let w = if z.re >= 0.0 { z } else { -z };
    let e = (-2.0 * w).exp();
    let th = (1.0 - e) / (1.0 + e);
    let th = if z.re >= 0.0 { th } else { -th };
    t * th / (2.0 * std::f64::consts::PI * std::f64::consts::PI)
}

/// An even test function on the spectral line, with the regularity data the
/// transform pipeline relies on: the holomorphy strip half-width, a nominal
/// polynomial decay exponent, and the number of forced zeros at the
/// half-odd-integer points of the imaginary axis.
#[derive(Clone)]
pub struct TestFunction {
    pub strip: f64,
    pub decay_exp: f64,
    pub required_zero_count: u32,
    pub family: Option<HtFamily>,
    eval: Arc<dyn Fn(C64) -> C64 + Send + Sync>,
}

impl TestFunction {
    pub fn from_closure(
        eval: impl Fn(C64) -> C64 + Send + Sync + 'static,
        strip: f64,
        decay_exp: f64,
        required_zero_count: u32,
    ) -> Self {
        TestFunction {
            strip,
            decay_exp,
            required_zero_count,
            family: None,
            eval: Arc::new(eval),
        }
    }

    pub fn eval(&self, t: C64) -> C64 {
        (self.eval)(t)
    }
}

impl std::fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TestFunction")
            .field("strip", &self.strip)
            .field("decay_exp", &self.decay_exp)
            .field("required_zero_count", &self.required_zero_count)
            .field("family", &self.family)
            .finish()
    }
}

/// Build the standard family member as a [`TestFunction`]. The function is
/// entire, so the strip is limited only by how many forced zeros are
/// available for contour shifts.
pub fn make_ht(t_scale: f64, zeros: u32) -> Result<TestFunction> {
    let fam = HtFamily::new(t_scale, zeros)?;
    Ok(TestFunction {
        strip: zeros as f64,
        decay_exp: zeros as f64,
        required_zero_count: zeros,
        family: Some(fam),
        eval: Arc::new(move |t| fam.eval(t)),
    })
}
