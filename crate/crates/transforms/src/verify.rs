//! Envelope-fitting checks for the decay laws the pipeline depends on.
//!
//! Each check fits the constant C := max |quantity| / envelope over a grid.
//! Where the grid lies inside the f64-measurable window of the quantity and
//! the envelope's sharp regime is active there, a growth trend of the ratio
//! across the outer fifth of the grid (the signature of a wrong envelope
//! exponent) fails the fit. Where the sharp regime provably begins beyond
//! the grid — the spectral transforms are essentially flat until the
//! argument reaches the spectral-cutoff scale of the family — the trend
//! diagnostic is still reported, but the gate is the finiteness of the
//! constant together with its stability under doubling of the family width,
//! which is the quantity the envelope actually constrains on such grids.

use crate::family::HtFamily;
use crate::pipeline::{step1_h_fourier_deriv, TransformPlan};
use crate::Result;
use kernels::{KernelSign, RepresentationParameter, SpectralPoint};
use serde::Serialize;

/// Options for [`verify_decay_suite`]. The defaults run the full-size
/// family; smaller zero counts make quick runs possible at the cost of the
/// envelope exponents being checked for a non-conforming family member.
#[derive(Debug, Clone)]
pub struct DecaySuiteOptions {
    pub rep: RepresentationParameter,
    /// Forced zero pairs of the family (D).
    pub zeros: u32,
    /// Widths used for the step-1 envelope fits and their stability check.
    pub step1_scales: [f64; 2],
    /// Widths used for the transform-size scaling and the uniform surrogate.
    pub transform_scales: Vec<f64>,
    /// Spectral grid for the minus-flavor transform size checks.
    pub r_grid: Vec<f64>,
    /// Holomorphic weights for the holomorphic-flavor envelope.
    pub k_grid: Vec<u32>,
}

impl Default for DecaySuiteOptions {
    fn default() -> Self {
        let r_grid = (0..15)
            .map(|i| 0.2 * (30.0f64 / 0.2).powf(i as f64 / 14.0))
            .collect();
        DecaySuiteOptions {
            rep: RepresentationParameter::default_test(),
            zeros: 50,
            step1_scales: [10.0, 20.0],
            transform_scales: vec![10.0, 20.0, 40.0],
            r_grid,
            k_grid: vec![2, 4, 6, 10, 16, 24, 32, 40],
        }
    }
}

/// One fitted envelope constant.
#[derive(Debug, Clone, Serialize)]
pub struct FitEntry {
    pub name: String,
    pub scale: f64,
    pub order: u32,
    pub constant: f64,
    pub points: usize,
    /// Max ratio over the outer fifth of the grid divided by the max over
    /// the rest; values well above 1 indicate the quantity outgrows the
    /// envelope toward the grid edge.
    pub edge_to_bulk: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<FitEntry>,
    pub pass: bool,
}

/// Fit C = max ratio; `gate_trend` adds the outer-fifth growth check to the
/// pass condition.
fn fit(name: String, scale: f64, order: u32, ratios: &[f64], gate_trend: bool) -> FitEntry {
    let n = ratios.len();
    let split = n - (n / 5).max(1);
    let bulk = ratios[..split].iter().cloned().fold(0.0f64, f64::max);
    let edge = ratios[split..].iter().cloned().fold(0.0f64, f64::max);
    let constant = bulk.max(edge);
    let edge_to_bulk = if bulk > 0.0 { edge / bulk } else { f64::INFINITY };
    let mut pass = constant.is_finite() && constant > 0.0;
    if gate_trend {
        pass = pass && edge_to_bulk <= 1.5;
    }
    FitEntry { name, scale, order, constant, points: n, edge_to_bulk, pass }
}

/// A direct ratio comparison reported in the same shape.
fn ratio_entry(name: String, scale: f64, value: f64, lo: f64, hi: f64) -> FitEntry {
    FitEntry {
        name,
        scale,
        order: 0,
        constant: value,
        points: 2,
        edge_to_bulk: 1.0,
        pass: value.is_finite() && value >= lo && value <= hi,
    }
}

/// Run the decay checks: step-1 envelopes (width-uniform exponent 10 for
/// j <= 2 and the sharp half-zero-count exponent for j <= 1, with stability
/// of the constants across widths), the spectral-transform envelopes for
/// the minus and holomorphic flavors with width-doubling stability, the
/// width scaling of the minus-flavor transform, and the width-uniform
/// surrogate bound on its spectral decay.
pub fn verify_decay_suite(opts: &DecaySuiteOptions) -> Result<VerificationReport> {
    let mut entries: Vec<FitEntry> = Vec::new();

    // Step-1 envelopes on x/scale in [15, 28]: the step-1 output is
    // concentrated around twice the spectral peak (x/scale = 2 sqrt(2 D) for
    // D zero pairs), which in units of the width is the same window for
    // every width; outside it the true values sit below the f64 round-off
    // floor of any evaluation route and a fit would measure noise.
    let grid: Vec<f64> = (0..10)
        .map(|i| 15.0 * (28.0f64 / 15.0).powf(i as f64 / 9.0))
        .collect();
    let mut uniform_c = [[0.0f64; 3]; 2];
    let mut sharp_c = [[0.0f64; 2]; 2];
    for (si, &t_scale) in opts.step1_scales.iter().enumerate() {
        let fam = HtFamily::new(t_scale, opts.zeros)?;
        let half = opts.zeros as f64 / 2.0;
        for j in 0..3u32 {
            let mut uniform = Vec::with_capacity(grid.len());
            let mut sharp = Vec::with_capacity(grid.len());
            for &z in &grid {
                let x = z * t_scale;
                let q = step1_h_fourier_deriv(&fam, x, j)?.abs();
                uniform.push(q / (t_scale * z.powi(10).min(z.powi(-10))));
                sharp.push(q / (t_scale * z.powf(half).min(z.powf(-half))));
            }
            let e = fit(format!("step1-envelope-uniform-j{j}"), t_scale, j, &uniform, true);
            uniform_c[si][j as usize] = e.constant;
            entries.push(e);
            if j < 2 {
                let e = fit(format!("step1-envelope-sharp-j{j}"), t_scale, j, &sharp, true);
                sharp_c[si][j as usize] = e.constant;
                entries.push(e);
            }
        }
    }
    for j in 0..3usize {
        entries.push(ratio_entry(
            format!("step1-envelope-constant-stability-j{j}"),
            opts.step1_scales[1] / opts.step1_scales[0],
            uniform_c[1][j] / uniform_c[0][j],
            1.0 / 3.0,
            3.0,
        ));
    }
    for j in 0..2usize {
        entries.push(ratio_entry(
            format!("step1-envelope-sharp-stability-j{j}"),
            opts.step1_scales[1] / opts.step1_scales[0],
            sharp_c[1][j] / sharp_c[0][j],
            1.0 / 3.0,
            3.0,
        ));
    }

    // Spectral-transform envelopes and sizes across widths. The transforms
    // are nearly flat until the spectral parameter reaches the cutoff scale
    // of the family (~15 scale units), so on these grids the sharp tail
    // exponents are not active and the envelope constants are gated on
    // finiteness plus width-doubling stability; the trend ratio is reported.
    let mut max_over_r = Vec::new();
    let mut surrogate = Vec::new();
    let mut minus_c = Vec::new();
    let mut hol_c = Vec::new();
    for &t_scale in &opts.transform_scales {
        let fam = HtFamily::new(t_scale, opts.zeros)?;
        let plan = TransformPlan::new(opts.rep.clone(), fam)?;
        let mut m = 0.0f64;
        let mut s = 0.0f64;
        let mut ratios = Vec::with_capacity(opts.r_grid.len());
        for &r in &opts.r_grid {
            let v = plan
                .h_transform(SpectralPoint::maass(r), KernelSign::Minus)?
                .norm();
            m = m.max(v / t_scale);
            s = s.max(v * (1.0 + r) / t_scale);
            ratios.push(v / (t_scale * r.powi(-1).min(r.powi(-5))));
        }
        let e = fit("transform-minus-envelope".to_string(), t_scale, 0, &ratios, false);
        minus_c.push(e.constant);
        entries.push(e);
        let mut kratios = Vec::with_capacity(opts.k_grid.len());
        for &k in &opts.k_grid {
            let v = plan
                .h_transform(SpectralPoint::holomorphic(k)?, KernelSign::Hol)?
                .norm();
            kratios.push(v / (t_scale * (k as f64).powi(-5)));
        }
        let e = fit("transform-hol-envelope".to_string(), t_scale, 0, &kratios, false);
        hol_c.push(e.constant);
        entries.push(e);
        max_over_r.push(m);
        surrogate.push(s);
    }
    for i in 1..opts.transform_scales.len() {
        let sc = opts.transform_scales[i];
        entries.push(ratio_entry(
            "transform-minus-envelope-stability".to_string(),
            sc,
            minus_c[i] / minus_c[i - 1],
            0.5,
            2.0,
        ));
        entries.push(ratio_entry(
            "transform-hol-envelope-stability".to_string(),
            sc,
            hol_c[i] / hol_c[i - 1],
            0.5,
            2.0,
        ));
        entries.push(ratio_entry(
            "transform-size-width-scaling".to_string(),
            sc,
            max_over_r[i] / max_over_r[i - 1],
            0.5,
            2.0,
        ));
    }
    let s_max = surrogate.iter().cloned().fold(0.0f64, f64::max);
    let s_min = surrogate.iter().cloned().fold(f64::INFINITY, f64::min);
    entries.push(ratio_entry(
        "transform-decay-surrogate-uniformity".to_string(),
        0.0,
        s_max / s_min,
        0.0,
        4.0,
    ));

    let pass = entries.iter().all(|e| e.pass);
    Ok(VerificationReport { entries, pass })
}
