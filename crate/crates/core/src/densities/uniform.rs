use super::{check_positive, Mode, NoiseDensity, Support};
use crate::Result;
use rand::Rng;

/// Uniform delay on `[0, τ]`. Every point of the support is modal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Uniform {
    tau: f64,
}

impl Uniform {
    pub fn new(tau: f64) -> Result<Self> {
        check_positive("tau", tau)?;
        Ok(Self { tau })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }
}

/// `ln((e^x - 1)/x)` without cancellation near zero or overflow for large |x|.
fn ln_expm1_over_x(x: f64) -> f64 {
    if x.abs() < 1e-5 {
        x / 2.0 + x * x / 24.0
    } else if x > 30.0 {
        x + (-(-x).exp()).ln_1p() - x.ln()
    } else if x > 0.0 {
        (x.exp_m1() / x).ln()
    } else {
        (-x.exp_m1()).ln() - (-x).ln()
    }
}

impl NoiseDensity for Uniform {
    fn support(&self) -> Support {
        Support { lower: 0.0, upper: self.tau }
    }

    fn mode(&self) -> Mode {
        Mode { lower: 0.0, upper: self.tau }
    }

    fn mean(&self) -> f64 {
        self.tau / 2.0
    }

    fn variance(&self) -> f64 {
        self.tau * self.tau / 12.0
    }

    fn ln_pdf(&self, z: f64) -> f64 {
        if (0.0..=self.tau).contains(&z) {
            -self.tau.ln()
        } else {
            f64::NEG_INFINITY
        }
    }

    fn score(&self, _z: f64) -> f64 {
        0.0
    }

    fn pdf_derivative(&self, _z: f64) -> f64 {
        0.0
    }

    fn cdf(&self, z: f64) -> f64 {
        (z / self.tau).clamp(0.0, 1.0)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        rng.random::<f64>() * self.tau
    }

    fn cumulant_closed_form(&self, rho: f64) -> Option<f64> {
        Some(ln_expm1_over_x(rho * self.tau))
    }

    fn scale(&self) -> f64 {
        self.tau
    }
}
