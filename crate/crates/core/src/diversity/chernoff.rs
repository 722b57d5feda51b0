use super::Gain;
use crate::densities::NoiseDensity;
use crate::numeric::optimize::seeded_minimize;
use crate::numeric::quadrature::{integrate_span, QuadOptions};
use crate::{Error, Result};

/// Outcome of the Chernoff minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffResult {
    pub gain: Gain,
    /// Minimizing exponent `s`.
    pub s: f64,
}

/// `ln ∫ f(y)^s f(y−Δ)^{1−s} dy` over the overlap of the two shifted
/// supports. Returns `-∞` when the supports do not overlap.
pub fn chernoff_objective<D: NoiseDensity + ?Sized>(law: &D, delta: f64, s: f64) -> Result<f64> {
    let sup = law.support();
    let a = sup.lower + delta;
    if a >= sup.upper {
        return Ok(f64::NEG_INFINITY);
    }
    let integrand = |y: f64| {
        let shifted = law.ln_pdf(y - delta);
        let log_v = if s <= 0.0 {
            shifted
        } else if s >= 1.0 {
            law.ln_pdf(y)
        } else {
            s * law.ln_pdf(y) + (1.0 - s) * shifted
        };
        if log_v == f64::NEG_INFINITY {
            0.0
        } else {
            log_v.exp()
        }
    };
    let r = integrate_span(integrand, a, sup.upper, law.scale(), QuadOptions::with_rel_tol(1e-10))?;
    Ok(r.value.ln())
}

/// Chernoff information between `f(y)` and `f(y−Δ)`: the exponent of the
/// maximum-likelihood detector.
pub fn chernoff_diversity<D: NoiseDensity + ?Sized>(law: &D, delta: f64) -> Result<ChernoffResult> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")));
    }
    let mut failure = None;
    let m = seeded_minimize(
        |s| match chernoff_objective(law, delta, s) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        },
        0.0,
        1.0,
        21,
        1e-8,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let gain = if m.value == f64::NEG_INFINITY {
        Gain::Infinite
    } else {
        // The objective is ≤ 0 at both ends; round-off can push it just above.
        Gain::Finite((-m.value).max(0.0))
    };
    Ok(ChernoffResult { gain, s: m.x })
}
