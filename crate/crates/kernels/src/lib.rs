//! Gamma-factor layer and reciprocity kernels.
//!
//! The building blocks are the trigonometric pair ℰ_0/ℰ_1, the local factor
//! G_η(s) = (2π)^{−s}Γ(s)ℰ_η(s), the degree-4 products 𝒢_ε and 𝒢^±, the
//! Bessel kernels 𝒥^±/𝒥^hol with their closed-form Mellin transforms, and the
//! reciprocity kernels 𝒦^±/𝒦^hol as vertical-line integrals of Mellin data.
//! Each nontrivial object has two independent evaluation routes so the test
//! suite can cross-verify them.

mod gfactors;
mod bessel_kernels;
mod reciprocity;
mod gkernel;

use num_complex::Complex64;
use thiserror::Error;

pub type C64 = Complex64;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid representation parameter: {0}")]
    InvalidRepresentation(&'static str),
    #[error("argument outside holomorphy region: Re = {re}, need > {min}")]
    Region { re: f64, min: f64 },
    #[error("invalid spectral point: {0}")]
    InvalidSpectralPoint(&'static str),
    #[error("degenerate spectral configuration (t, r) = ({t}, {r})")]
    Degenerate { t: f64, r: f64 },
    #[error("hypergeometric route requires all parity indices zero")]
    ParityUnsupported,
    #[error("contour abscissa {v} outside (0, {max})")]
    ContourOutOfRange { v: f64, max: f64 },
    #[error("pole of a gamma factor at {0}")]
    Pole(C64),
    #[error("series cancellation too severe (est. error {est:e})")]
    CancellationLoss { est: f64 },
    #[error(transparent)]
    Quadrature(#[from] quad::Error),
    #[error(transparent)]
    SpecialFunction(#[from] specfun::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Archimedean parameter of the degree-4 representation: four spectral
/// parameters summing to zero, four parity indices with even sum, and a
/// holomorphy margin delta for the associated gamma factors.
#[derive(Debug, Clone)]
pub struct RepresentationParameter {
    pub mu: [C64; 4],
    pub beta: [u8; 4],
    pub delta: f64,
}

impl RepresentationParameter {
    pub fn new(mu: [C64; 4], beta: [u8; 4], delta: f64) -> Result<Self> {
        let sum: C64 = mu.iter().sum();
        if sum.norm() > 1e-10 {
            return Err(Error::InvalidRepresentation("spectral parameters must sum to zero"));
        }
        if beta.iter().any(|&b| b > 1) {
            return Err(Error::InvalidRepresentation("parity indices must be 0 or 1"));
        }
        if beta.iter().map(|&b| b as u32).sum::<u32>() % 2 != 0 {
            return Err(Error::InvalidRepresentation("parity indices must have even sum"));
        }
        if !(delta > 0.0 && delta < 0.5) {
            return Err(Error::InvalidRepresentation("holomorphy margin must lie in (0, 1/2)"));
        }
        let rep = RepresentationParameter { mu, beta, delta };
        // the gamma-factor products must be finite throughout the claimed region
        for &im in &[0.0, 3.0, -7.0] {
            let s = C64::new(0.5 - delta + 0.05, im);
            for eps in 0..2u8 {
                let v = gfactors::curly_g_eps(&rep, eps, s)?;
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::InvalidRepresentation(
                        "gamma-factor product not finite in the holomorphy region",
                    ));
                }
            }
        }
        Ok(rep)
    }

    /// Unitary sum-zero configuration with all parities even and a wide
    /// holomorphy margin; the default fixture for kernel tests.
    pub fn default_test() -> Self {
        RepresentationParameter::new(
            [
                C64::new(0.0, 0.1),
                C64::new(0.0, -0.1),
                C64::new(0.0, 0.2),
                C64::new(0.0, -0.2),
            ],
            [0, 0, 0, 0],
            0.45,
        )
        .expect("default representation parameter is valid")
    }
}

/// A point of the spectral decomposition: either a Maass parameter t or an
/// even holomorphic weight k >= 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectralPoint {
    Maass { t: f64 },
    Holomorphic { k: u32 },
}

impl SpectralPoint {
    pub fn holomorphic(k: u32) -> Result<Self> {
        if k < 2 || k % 2 != 0 {
            return Err(Error::InvalidSpectralPoint("weight must be even and at least 2"));
        }
        Ok(SpectralPoint::Holomorphic { k })
    }

    pub fn maass(t: f64) -> Self {
        SpectralPoint::Maass { t }
    }
}

/// Sign selector for the kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelSign {
    Plus,
    Minus,
    Hol,
}

pub use bessel_kernels::{j_kernel, j_kernel_mellin};
pub use gfactors::{curly_g_eps, curly_g_pm, e_eta, g_eta, g_eta_defining_form};
pub use gkernel::{g_kernel, g_kernel_series, g_kernel_series_signed, GValue};
pub use reciprocity::{
    kernel_k, kernel_k_gamma_form, kernel_k_hol, kernel_k_minus_4f3, suggested_contour,
};
