use super::{check_positive, CumulantDomain, Mode, NoiseDensity, Support};
use crate::Result;
use rand::Rng;
use rand_distr::{Distribution, Exp1};

/// Exponential delay with rate `b`; mode at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponential {
    rate: f64,
}

impl Exponential {
    pub fn new(rate: f64) -> Result<Self> {
        check_positive("b", rate)?;
        Ok(Self { rate })
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }
}

impl NoiseDensity for Exponential {
    fn support(&self) -> Support {
        Support { lower: 0.0, upper: f64::INFINITY }
    }

    fn mode(&self) -> Mode {
        Mode::point(0.0)
    }

    fn mean(&self) -> f64 {
        1.0 / self.rate
    }

    fn variance(&self) -> f64 {
        1.0 / (self.rate * self.rate)
    }

    fn ln_pdf(&self, z: f64) -> f64 {
        if z < 0.0 {
            f64::NEG_INFINITY
        } else {
            self.rate.ln() - self.rate * z
        }
    }

    fn score(&self, _z: f64) -> f64 {
        -self.rate
    }

    fn cdf(&self, z: f64) -> f64 {
        if z <= 0.0 {
            0.0
        } else {
            -(-self.rate * z).exp_m1()
        }
    }

    fn sf(&self, z: f64) -> f64 {
        if z <= 0.0 {
            1.0
        } else {
            (-self.rate * z).exp()
        }
    }

    fn ln_sf(&self, z: f64) -> f64 {
        if z <= 0.0 {
            0.0
        } else {
            -self.rate * z
        }
    }

    fn ln_cdf(&self, z: f64) -> f64 {
        self.cdf(z).ln()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let e: f64 = Exp1.sample(rng);
        e / self.rate
    }

    fn cumulant_domain(&self) -> CumulantDomain {
        CumulantDomain { max: self.rate, inclusive: false }
    }

    fn cumulant_closed_form(&self, rho: f64) -> Option<f64> {
        if rho < self.rate {
            Some(-(-rho / self.rate).ln_1p())
        } else {
            None
        }
    }

    fn rate_closed_form(&self, v: f64) -> Option<f64> {
        (v > 0.0).then(|| {
            let bv = self.rate * v;
            bv - 1.0 - bv.ln()
        })
    }

    fn scale(&self) -> f64 {
        1.0 / self.rate
    }
}
