use super::{Law, Mode, NoiseDensity, Support};
use crate::numeric::quadrature::{integrate, QuadOptions};
use crate::numeric::roots::{bisect, BisectOptions, Bracketed};
use crate::{Error, Result};
use rand::Rng;

/// Below this acceptance rate the sampler switches from rejection to
/// inverse-CDF bisection.
const MIN_ACCEPTANCE: f64 = 0.1;

/// A half-line law clipped at `τ` and renormalized: particles that have not
/// arrived by `τ` are discarded.
#[derive(Debug, Clone, PartialEq)]
pub struct Truncated {
    base: Box<Law>,
    tau: f64,
    norm: f64,
    ln_norm: f64,
    mean: f64,
    variance: f64,
}

impl Truncated {
    pub fn new(base: Law, tau: f64) -> Result<Self> {
        if matches!(base, Law::Truncated(_)) || base.support().is_bounded() {
            return Err(Error::InvalidParameter(format!("truncation needs a base law on a half-line, got {base}")));
        }
        let lower = base.support().lower;
        if !(tau > lower && tau.is_finite()) {
            return Err(Error::InvalidParameter(format!("tau must exceed {lower}, got {tau}")));
        }
        let norm = base.cdf(tau);
        if !(norm > 0.0) {
            return Err(Error::InvalidParameter(format!("{base} has no mass below tau = {tau}")));
        }
        let opts = QuadOptions::with_rel_tol(1e-11);
        let m1 = integrate(|z| z * base.pdf(z), lower, tau, opts)?.value / norm;
        let m2 = integrate(|z| (z - m1).powi(2) * base.pdf(z), lower, tau, opts)?.value / norm;
        Ok(Self { base: Box::new(base), tau, norm, ln_norm: norm.ln(), mean: m1, variance: m2 })
    }

    pub fn base(&self) -> &Law {
        &self.base
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Probability mass the base law puts below `τ`.
    pub fn retained_mass(&self) -> f64 {
        self.norm
    }

    fn inverse_cdf(&self, u: f64) -> f64 {
        let target = u * self.norm;
        let lower = self.base.support().lower;
        let opts = BisectOptions { max_iter: 200, x_tol: 1e-14 * self.tau.max(1.0) };
        match bisect(|z| self.base.cdf(z) - target, lower, self.tau, opts) {
            Bracketed::Root(z) => z,
            Bracketed::NoSignChange => self.tau,
        }
    }
}

impl NoiseDensity for Truncated {
    fn support(&self) -> Support {
        Support { lower: self.base.support().lower, upper: self.tau }
    }

    fn mode(&self) -> Mode {
        let m = self.base.mode();
        Mode { lower: m.lower.min(self.tau), upper: m.upper.min(self.tau) }
    }

    fn mean(&self) -> f64 {
        self.mean
    }

    fn variance(&self) -> f64 {
        self.variance
    }

    fn ln_pdf(&self, z: f64) -> f64 {
        if z > self.tau {
            f64::NEG_INFINITY
        } else {
            self.base.ln_pdf(z) - self.ln_norm
        }
    }

    fn score(&self, z: f64) -> f64 {
        self.base.score(z)
    }

    fn cdf(&self, z: f64) -> f64 {
        if z >= self.tau {
            1.0
        } else {
            (self.base.cdf(z) / self.norm).min(1.0)
        }
    }

    fn sf(&self, z: f64) -> f64 {
        if z >= self.tau {
            0.0
        } else {
            ((self.base.sf(z) - self.base.sf(self.tau)) / self.norm).clamp(0.0, 1.0)
        }
    }

    fn ln_cdf(&self, z: f64) -> f64 {
        if z >= self.tau {
            0.0
        } else {
            (self.base.ln_cdf(z) - self.ln_norm).min(0.0)
        }
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        if self.norm >= MIN_ACCEPTANCE {
            loop {
                let z = self.base.sample(rng);
                if z <= self.tau {
                    return z;
                }
            }
        }
        self.inverse_cdf(rng.random::<f64>())
    }

    fn scale(&self) -> f64 {
        self.tau - self.base.support().lower
    }
}
