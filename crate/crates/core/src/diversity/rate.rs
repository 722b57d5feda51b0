//! Cumulant generating function, its Legendre transform and the balance
//! point that sets the sample-mean detector's threshold.

use super::Gain;
use crate::densities::NoiseDensity;
use crate::numeric::optimize::maximize_concave;
use crate::numeric::quadrature::{integrate, integrate_to_infinity, QuadOptions};
use crate::numeric::roots::{bisect, BisectOptions, Bracketed};
use crate::{Error, Result};

/// `ln E[e^{ρZ}]`, from a closed form when the law has one and by quadrature
/// otherwise.
pub fn cumulant<D: NoiseDensity + ?Sized>(law: &D, rho: f64) -> Result<f64> {
    if !law.cumulant_domain().contains(rho) || rho.is_nan() {
        return Err(Error::OutsideDomain(rho));
    }
    if let Some(v) = law.cumulant_closed_form(rho) {
        return Ok(v);
    }
    if rho == 0.0 {
        return Ok(0.0);
    }
    let s = law.support();
    // Factor out e^{ρ·z_ref} at the end of the support where e^{ρz} peaks.
    let z_ref = if rho > 0.0 { s.upper } else { s.lower };
    if !z_ref.is_finite() {
        return Err(Error::OutsideDomain(rho));
    }
    let integrand = |z: f64| {
        let lp = law.ln_pdf(z);
        if lp == f64::NEG_INFINITY {
            0.0
        } else {
            (lp + rho * (z - z_ref)).exp()
        }
    };
    let opts = QuadOptions::with_rel_tol(1e-12);
    let r = if s.is_bounded() {
        integrate(integrand, s.lower, s.upper, opts)?
    } else {
        integrate_to_infinity(integrand, s.lower, law.scale(), opts)?
    };
    Ok(r.value.ln() + rho * z_ref)
}

/// Legendre transform `sup_λ {λv − Λ(λ)}` by concave maximization,
/// ignoring any closed form.
pub fn rate_function_numeric<D: NoiseDensity + ?Sized>(law: &D, v: f64) -> Result<f64> {
    let s = law.support();
    if !(v > s.lower && v < s.upper) {
        return Err(Error::OutsideDomain(v));
    }
    let dom = law.cumulant_domain();
    let objective = |l: f64| match cumulant(law, l) {
        Ok(c) => l * v - c,
        Err(_) => f64::NAN,
    };
    let hi = if dom.inclusive { dom.max + f64::EPSILON * dom.max.abs().max(1.0) } else { dom.max };
    let m = maximize_concave(objective, f64::NEG_INFINITY, hi, 0.0, 1e-12);
    if m.value.is_nan() {
        return Err(Error::OutsideDomain(v));
    }
    Ok(m.value.max(0.0))
}

/// Rate (Cramér) function of the law at `v`.
pub fn rate_function<D: NoiseDensity + ?Sized>(law: &D, v: f64) -> Result<f64> {
    let s = law.support();
    if !(v > s.lower && v < s.upper) {
        return Err(Error::OutsideDomain(v));
    }
    match law.rate_closed_form(v) {
        Some(r) => Ok(r),
        None => rate_function_numeric(law, v),
    }
}

/// The point where the two tails of the sample-mean statistic decay at the
/// same rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LinearBalance {
    /// Threshold offset `α`: decide `0` when the sample mean is below `μ + α`.
    Alpha { alpha: f64, gain: f64 },
    /// The two hypotheses' sample means never overlap.
    Separated,
    /// The law has no finite mean or variance.
    Degenerate,
}

fn rate_or_infinity<D: NoiseDensity + ?Sized>(law: &D, v: f64) -> f64 {
    rate_function(law, v).unwrap_or(f64::INFINITY)
}

/// Solves `Λ*(μ+α) = Λ*(μ−Δ+α)` for `α ∈ (max{Δ−μ, 0}, Δ)`.
pub fn linear_balance<D: NoiseDensity + ?Sized>(law: &D, delta: f64) -> Result<LinearBalance> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")));
    }
    let mu = law.mean();
    if !mu.is_finite() || !law.variance().is_finite() {
        return Ok(LinearBalance::Degenerate);
    }
    let lo = (delta - mu).max(0.0).max(1e-12);
    let h = |a: f64| rate_or_infinity(law, mu + a) - rate_or_infinity(law, mu - delta + a);
    let opts = BisectOptions { max_iter: 200, x_tol: 1e-10 };
    match bisect(h, lo, delta, opts) {
        Bracketed::Root(alpha) => {
            let gain = rate_function(law, mu + alpha)?;
            Ok(LinearBalance::Alpha { alpha, gain })
        }
        Bracketed::NoSignChange => Ok(LinearBalance::Separated),
    }
}

/// Exponent of the sample-mean detector.
pub fn linear_diversity<D: NoiseDensity + ?Sized>(law: &D, delta: f64) -> Result<Gain> {
    Ok(match linear_balance(law, delta)? {
        LinearBalance::Alpha { gain, .. } => Gain::Finite(gain),
        LinearBalance::Separated => Gain::Infinite,
        LinearBalance::Degenerate => Gain::Degenerate,
    })
}
