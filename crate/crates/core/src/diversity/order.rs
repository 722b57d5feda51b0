//! Exponents of the first- and last-arrival detectors, and the clip point
//! at which they coincide.

use super::Gain;
use crate::densities::{Law, NoiseDensity};
use crate::numeric::roots::{bisect, BisectOptions, Bracketed};
use crate::{Error, Result};

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")))
    }
}

/// `−ln(1 − F(Δ))`.
pub fn fa_diversity<D: NoiseDensity + ?Sized>(law: &D, delta: f64) -> Result<Gain> {
    check_delta(delta)?;
    let ln_sf = law.ln_sf(delta);
    if ln_sf == f64::NEG_INFINITY {
        return Err(Error::InfiniteGain);
    }
    Ok(Gain::Finite(-ln_sf))
}

/// `−ln F(τ − Δ)`; zero for laws on a half-line.
pub fn la_diversity<D: NoiseDensity + ?Sized>(law: &D, delta: f64) -> Result<Gain> {
    check_delta(delta)?;
    let s = law.support();
    if !s.is_bounded() {
        return Ok(Gain::Finite(0.0));
    }
    let ln_cdf = law.ln_cdf(s.upper - delta);
    if ln_cdf == f64::NEG_INFINITY {
        return Err(Error::InfiniteGain);
    }
    Ok(Gain::Finite(-ln_cdf))
}

/// Search limits for [`crossover_tau`].
#[derive(Debug, Clone, Copy)]
pub struct CrossoverOptions {
    /// Largest clip point tried, as a multiple of the law's scale beyond `Δ`.
    pub max_scales: f64,
}

impl Default for CrossoverOptions {
    fn default() -> Self {
        Self { max_scales: 1e4 }
    }
}

/// `F(τ) − F(Δ) − F(τ − Δ)` for the untruncated law.
pub fn crossover_residual<D: NoiseDensity + ?Sized>(base: &D, delta: f64, tau: f64) -> f64 {
    base.cdf(tau) - base.cdf(delta) - base.cdf(tau - delta)
}

/// Clip point `τ*` at which the first- and last-arrival exponents of the
/// truncated law are equal. Below it the last-arrival detector is better.
pub fn crossover_tau(base: &Law, delta: f64, opts: CrossoverOptions) -> Result<f64> {
    check_delta(delta)?;
    if base.support().is_bounded() || matches!(base, Law::Truncated(_)) {
        return Err(Error::InvalidParameter(format!("{base} must live on a half-line")));
    }
    let scale = base.scale();
    let lower = base.support().lower;
    let h = |tau: f64| crossover_residual(base, delta, tau);
    let lo = delta + lower + 1e-9 * scale.max(delta);
    let tau_max = delta + lower + opts.max_scales * scale;
    if !(h(lo) > 0.0) {
        return Err(Error::NoCrossover(tau_max));
    }
    let mut hi = delta + lower + 0.01 * scale;
    while !(h(hi) < 0.0) {
        if hi >= tau_max {
            return Err(Error::NoCrossover(tau_max));
        }
        hi = (delta + lower + 2.0 * (hi - delta - lower)).min(tau_max);
    }
    let opts = BisectOptions { max_iter: 300, x_tol: 1e-15 * hi };
    match bisect(h, lo, hi, opts) {
        Bracketed::Root(t) => Ok(t),
        Bracketed::NoSignChange => Err(Error::NoCrossover(tau_max)),
    }
}
