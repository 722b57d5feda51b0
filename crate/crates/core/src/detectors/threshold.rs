//! Threshold solvers and closed-form error probabilities.

use super::{ArrivalVector, ChannelConfig, Decision};
use crate::densities::NoiseDensity;
use crate::diversity::{linear_balance, LinearBalance};
use crate::numeric::roots::{bisect, BisectOptions, Bracketed};
use crate::{Error, Result};

fn bisect_options(delta: f64) -> BisectOptions {
    BisectOptions { max_iter: 200, x_tol: 1e-12 * delta.max(1.0) }
}

/// Sample-mean threshold `μ + α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearThreshold {
    pub value: f64,
    /// Set when the threshold came from the median fallback for laws with no
    /// finite mean. Such a detector has no standard exponent.
    pub nonstandard: bool,
}

impl LinearThreshold {
    /// Decide `0` iff the sample mean is below the threshold.
    pub fn decide(&self, y: &ArrivalVector) -> Decision {
        let mean = y.iter().sum::<f64>() / y.len() as f64;
        if mean < self.value {
            Decision::Zero
        } else {
            Decision::Delta
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LinearOptions {
    /// For infinite-mean laws, use `median + Δ/2` instead of failing.
    pub median_fallback: bool,
}

fn median<D: NoiseDensity + ?Sized>(law: &D) -> f64 {
    let s = law.support();
    let mut hi = s.lower + law.scale();
    while law.cdf(hi) < 0.5 {
        hi = s.lower + 2.0 * (hi - s.lower);
    }
    match bisect(|z| law.cdf(z) - 0.5, s.lower, hi, BisectOptions::default()) {
        Bracketed::Root(z) => z,
        Bracketed::NoSignChange => hi,
    }
}

pub fn solve_linear_threshold<D: NoiseDensity + ?Sized>(
    law: &D,
    cfg: &ChannelConfig,
    opts: LinearOptions,
) -> Result<LinearThreshold> {
    let standard = |value| LinearThreshold { value, nonstandard: false };
    match linear_balance(law, cfg.delta)? {
        LinearBalance::Alpha { alpha, .. } => Ok(standard(law.mean() + alpha)),
        LinearBalance::Separated => {
            // Any point between the two supports separates them.
            let s = law.support();
            Ok(standard(0.5 * (s.upper + cfg.delta + s.lower)))
        }
        LinearBalance::Degenerate if opts.median_fallback => {
            Ok(LinearThreshold { value: median(law) + 0.5 * cfg.delta, nonstandard: true })
        }
        LinearBalance::Degenerate => Err(Error::InfiniteMean),
    }
}

/// First-arrival threshold `θ_M ≥ Δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaThreshold {
    pub theta: f64,
}

impl FaThreshold {
    /// Decide `0` iff the first arrival precedes `θ_M`.
    pub fn decide(&self, y: &ArrivalVector) -> Decision {
        let first = y.iter().copied().fold(f64::INFINITY, f64::min);
        if first < self.theta {
            Decision::Zero
        } else {
            Decision::Delta
        }
    }
}

/// Log-domain difference of the two first-arrival densities at `y`:
/// positive where release time `0` is more likely.
pub fn fa_threshold_residual<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig, y: f64) -> f64 {
    let d = cfg.delta;
    let k = (cfg.m - 1) as f64;
    let dens = law.ln_pdf(y) - law.ln_pdf(y - d);
    if k == 0.0 {
        dens
    } else {
        dens - k * (law.ln_sf(y - d) - law.ln_sf(y))
    }
}

/// Crossing point of the two first-arrival densities on `[Δ, Δ + m_Z]`,
/// or `Δ` when they do not cross there.
pub fn solve_fa_threshold<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig) -> FaThreshold {
    let d = cfg.delta;
    let s = law.support();
    let mode = law.mode().lower;
    if mode <= s.lower {
        return FaThreshold { theta: d };
    }
    let r = bisect(|y| fa_threshold_residual(law, cfg, y), d + s.lower + 1e-12, d + mode, bisect_options(d));
    match r {
        Bracketed::Root(theta) => FaThreshold { theta },
        Bracketed::NoSignChange => FaThreshold { theta: d },
    }
}

/// `½((1−F(θ))^M + 1 − (1−F(θ−Δ))^M)`.
pub fn fa_error_probability<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig, theta: FaThreshold) -> f64 {
    let m = cfg.m as f64;
    let miss_zero = (m * law.ln_sf(theta.theta)).exp();
    let miss_delta = -(m * law.ln_sf(theta.theta - cfg.delta)).exp_m1();
    0.5 * (miss_zero + miss_delta)
}

/// Last-arrival threshold `ϑ_M ≤ τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaThreshold {
    pub vartheta: f64,
}

impl LaThreshold {
    /// Decide `0` iff the last arrival precedes `ϑ_M`.
    pub fn decide(&self, y: &ArrivalVector) -> Decision {
        let last = y.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if last < self.vartheta {
            Decision::Zero
        } else {
            Decision::Delta
        }
    }
}

/// Log-domain difference of the two last-arrival densities at `y`.
pub fn la_threshold_residual<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig, y: f64) -> f64 {
    let d = cfg.delta;
    let k = (cfg.m - 1) as f64;
    let dens = law.ln_pdf(y) - law.ln_pdf(y - d);
    if k == 0.0 {
        dens
    } else {
        dens - k * (law.ln_cdf(y - d) - law.ln_cdf(y))
    }
}

/// Crossing point of the two last-arrival densities on `[Δ, τ]`, or `τ`
/// when they do not cross there.
pub fn solve_la_threshold<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig) -> Result<LaThreshold> {
    let s = law.support();
    if !s.is_bounded() {
        return Err(Error::InfiniteSupport);
    }
    let d = cfg.delta;
    let tau = s.upper;
    if law.mode().upper >= tau || d + s.lower >= tau {
        return Ok(LaThreshold { vartheta: tau });
    }
    let r = bisect(|y| la_threshold_residual(law, cfg, y), d + s.lower + 1e-12, tau - 1e-12, bisect_options(d));
    Ok(match r {
        Bracketed::Root(vartheta) => LaThreshold { vartheta },
        Bracketed::NoSignChange => LaThreshold { vartheta: tau },
    })
}

/// `½(F(ϑ−Δ)^M + 1 − F(ϑ)^M)`.
pub fn la_error_probability<D: NoiseDensity + ?Sized>(
    law: &D,
    cfg: &ChannelConfig,
    vartheta: LaThreshold,
) -> Result<f64> {
    if !law.support().is_bounded() {
        return Err(Error::InfiniteSupport);
    }
    let m = cfg.m as f64;
    let miss_zero = -(m * law.ln_cdf(vartheta.vartheta)).exp_m1();
    let miss_delta = (m * law.ln_cdf(vartheta.vartheta - cfg.delta)).exp();
    Ok(0.5 * (miss_delta + miss_zero))
}
