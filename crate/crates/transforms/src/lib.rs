//! The three-step spectral transform pipeline h -> h^{+}, h^{-}, h^{hol}:
//! an even test function h on the spectral line is pushed through a Bessel
//! integral (step 1), a Mellin-side multiplier built from the gamma-factor
//! products (step 2), and an inverse Kuznetsov-type Bessel integral
//! (step 3). The same output is also computable directly as an integral of
//! the reciprocity kernel against h, which gives every quantity here two
//! independent evaluation routes.
//!
//! Magnitudes: the polynomial factor in the standard test-function family
//! peaks around e^{366} for the default parameters. All products that mix a
//! family value with gamma factors are therefore assembled in log space, and
//! everything downstream is linear in h, so f64 carries the common scale
//! without loss.

use num_complex::Complex64;
use thiserror::Error;

pub type C64 = Complex64;

mod family;
mod pipeline;
mod verify;

pub use family::{make_ht, HtFamily, TestFunction};
pub use pipeline::{
    h_spec_fourier, h_spec_fourier_deriv, h_spec_shifted, mellin_h_spectral, multiplier_heta,
    phi_eta_contour, step1_h_fourier, step1_h_fourier_deriv, step1_h_spectral, GProfile,
    HProfile, HhatLine, PhiProfile, TransformPlan,
};
pub use verify::{verify_decay_suite, DecaySuiteOptions, FitEntry, VerificationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid test-function family: {0}")]
    InvalidFamily(&'static str),
    #[error("argument outside the holomorphy region: {0}")]
    Region(&'static str),
    #[error("empty abscissa window: need {lo} < v < {hi}")]
    WindowEmpty { lo: f64, hi: f64 },
    #[error("test function decays too slowly for this route: {0}")]
    Admissibility(&'static str),
    #[error(transparent)]
    Quadrature(#[from] quad::Error),
    #[error(transparent)]
    Kernel(#[from] kernels::Error),
    #[error(transparent)]
    SpecialFunction(#[from] specfun::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
