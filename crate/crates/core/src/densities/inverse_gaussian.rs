use super::{check_positive, CumulantDomain, Mode, NoiseDensity, Support};
use crate::numeric::special::{ln_norm_cdf, norm_cdf};
use crate::Result;
use rand::Rng;
use rand_distr::Distribution;
use std::f64::consts::PI;

/// Inverse-Gaussian delay with mean `μ` and shape `b` (diffusion with drift).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseGaussian {
    mu: f64,
    shape: f64,
    sampler: rand_distr::InverseGaussian<f64>,
}

impl InverseGaussian {
    pub fn new(mu: f64, shape: f64) -> Result<Self> {
        check_positive("mu", mu)?;
        check_positive("b", shape)?;
        let sampler =
            rand_distr::InverseGaussian::new(mu, shape).map_err(|e| crate::Error::InvalidParameter(e.to_string()))?;
        Ok(Self { mu, shape, sampler })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    fn arguments(&self, z: f64) -> (f64, f64) {
        let r = (self.shape / z).sqrt();
        (r * (z / self.mu - 1.0), -r * (z / self.mu + 1.0))
    }

    /// `e^{2b/μ} Φ(x)`, evaluated in the log domain.
    fn reflected_term(&self, x: f64) -> f64 {
        (2.0 * self.shape / self.mu + ln_norm_cdf(x)).exp()
    }

    /// Closed form of `f'(z)/f(z)²`.
    pub fn g_closed_form(&self, z: f64) -> f64 {
        let (mu, b) = (self.mu, self.shape);
        (PI / (2.0 * mu.powi(4) * b * z)).sqrt()
            * (b * (z - mu).powi(2) / (2.0 * mu * mu * z)).exp()
            * (b * (mu * mu - z * z) - 3.0 * mu * mu * z)
    }

    /// Closed form of `d/dz [f'(z)/f(z)²]`; negative for every finite `z > 0`.
    pub fn g_slope_closed_form(&self, z: f64) -> f64 {
        let (mu, b) = (self.mu, self.shape);
        let poly = 3.0 * mu.powi(4) * z * z
            + b * b * (mu * mu - z * z).powi(2)
            + b * (6.0 * mu * mu * z.powi(3) - 2.0 * mu.powi(4) * z);
        -(PI / (8.0 * mu.powi(8) * b * z.powi(5))).sqrt() * (b * (z - mu).powi(2) / (2.0 * mu * mu * z)).exp() * poly
    }
}

impl NoiseDensity for InverseGaussian {
    fn support(&self) -> Support {
        Support { lower: 0.0, upper: f64::INFINITY }
    }

    fn mode(&self) -> Mode {
        let (mu, b) = (self.mu, self.shape);
        Mode::point(mu * ((1.0 + 9.0 * mu * mu / (4.0 * b * b)).sqrt() - 3.0 * mu / (2.0 * b)))
    }

    fn mean(&self) -> f64 {
        self.mu
    }

    fn variance(&self) -> f64 {
        self.mu.powi(3) / self.shape
    }

    fn ln_pdf(&self, z: f64) -> f64 {
        if z <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let (mu, b) = (self.mu, self.shape);
        0.5 * (b / (2.0 * PI * z.powi(3))).ln() - b * (z - mu).powi(2) / (2.0 * mu * mu * z)
    }

    fn score(&self, z: f64) -> f64 {
        let (mu, b) = (self.mu, self.shape);
        (b * (mu * mu - z * z) - 3.0 * mu * mu * z) / (2.0 * mu * mu * z * z)
    }

    fn cdf(&self, z: f64) -> f64 {
        if z <= 0.0 {
            return 0.0;
        }
        let (x1, x2) = self.arguments(z);
        (norm_cdf(x1) + self.reflected_term(x2)).min(1.0)
    }

    fn sf(&self, z: f64) -> f64 {
        if z <= 0.0 {
            return 1.0;
        }
        let (x1, x2) = self.arguments(z);
        (norm_cdf(-x1) - self.reflected_term(x2)).max(0.0)
    }

    fn ln_cdf(&self, z: f64) -> f64 {
        if z <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let (x1, x2) = self.arguments(z);
        // Both terms are positive; combine as log-sum-exp.
        let a = ln_norm_cdf(x1);
        let c = 2.0 * self.shape / self.mu + ln_norm_cdf(x2);
        let m = a.max(c);
        if m == f64::NEG_INFINITY {
            m
        } else {
            m + ((a - m).exp() + (c - m).exp()).ln()
        }
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.sampler.sample(rng)
    }

    fn cumulant_domain(&self) -> CumulantDomain {
        CumulantDomain { max: self.shape / (2.0 * self.mu * self.mu), inclusive: true }
    }

    fn cumulant_closed_form(&self, rho: f64) -> Option<f64> {
        let (mu, b) = (self.mu, self.shape);
        let inner = 1.0 - 2.0 * mu * mu * rho / b;
        (inner >= 0.0).then(|| b / mu * (1.0 - inner.sqrt()))
    }

    fn rate_closed_form(&self, v: f64) -> Option<f64> {
        let (mu, b) = (self.mu, self.shape);
        (v > 0.0).then(|| b * (v - mu).powi(2) / (2.0 * mu * mu * v))
    }

    fn scale(&self) -> f64 {
        self.mu
    }
}
