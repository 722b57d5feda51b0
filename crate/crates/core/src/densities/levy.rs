use super::{check_positive, CumulantDomain, Mode, NoiseDensity, Support};
use crate::numeric::special::{erf, erfc, ln_erfc};
use crate::{Error, Result};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use std::f64::consts::PI;

/// Lévy delay with location `μ` and scale `b` (diffusion without drift).
/// The mean is infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Levy {
    location: f64,
    scale: f64,
}

impl Levy {
    pub fn new(location: f64, scale: f64) -> Result<Self> {
        if !(location >= 0.0 && location.is_finite()) {
            return Err(Error::InvalidParameter(format!("mu must be finite and non-negative, got {location}")));
        }
        check_positive("b", scale)?;
        Ok(Self { location, scale })
    }

    pub fn location(&self) -> f64 {
        self.location
    }

    pub fn scale_param(&self) -> f64 {
        self.scale
    }

    fn cdf_argument(&self, z: f64) -> f64 {
        (self.scale / (2.0 * (z - self.location))).sqrt()
    }

    /// Closed form of `f'(z)/f(z)²` (location zero, shifted otherwise).
    pub fn g_closed_form(&self, z: f64) -> f64 {
        let (c, x) = (self.scale, z - self.location);
        (PI / (2.0 * c * x)).sqrt() * (c / (2.0 * x)).exp() * (c - 3.0 * x)
    }

    /// Closed form of `d/dz [f'(z)/f(z)²]`; negative for every finite `z`.
    pub fn g_slope_closed_form(&self, z: f64) -> f64 {
        let (c, x) = (self.scale, z - self.location);
        -(PI / (8.0 * c * x.powi(5))).sqrt() * (c / (2.0 * x)).exp() * (c * c - 2.0 * c * x + 3.0 * x * x)
    }
}

impl NoiseDensity for Levy {
    fn support(&self) -> Support {
        Support { lower: self.location, upper: f64::INFINITY }
    }

    fn mode(&self) -> Mode {
        Mode::point(self.location + self.scale / 3.0)
    }

    fn mean(&self) -> f64 {
        f64::INFINITY
    }

    fn variance(&self) -> f64 {
        f64::INFINITY
    }

    fn ln_pdf(&self, z: f64) -> f64 {
        let x = z - self.location;
        if x <= 0.0 {
            return f64::NEG_INFINITY;
        }
        0.5 * (self.scale / (2.0 * PI)).ln() - self.scale / (2.0 * x) - 1.5 * x.ln()
    }

    fn score(&self, z: f64) -> f64 {
        let x = z - self.location;
        (self.scale - 3.0 * x) / (2.0 * x * x)
    }

    fn cdf(&self, z: f64) -> f64 {
        if z <= self.location {
            0.0
        } else {
            erfc(self.cdf_argument(z))
        }
    }

    fn sf(&self, z: f64) -> f64 {
        if z <= self.location {
            1.0
        } else {
            erf(self.cdf_argument(z))
        }
    }

    fn ln_cdf(&self, z: f64) -> f64 {
        if z <= self.location {
            f64::NEG_INFINITY
        } else {
            ln_erfc(self.cdf_argument(z))
        }
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let n: f64 = StandardNormal.sample(rng);
        self.location + self.scale / (n * n)
    }

    fn cumulant_domain(&self) -> CumulantDomain {
        CumulantDomain { max: 0.0, inclusive: true }
    }

    fn cumulant_closed_form(&self, rho: f64) -> Option<f64> {
        (rho <= 0.0).then(|| rho * self.location - (-2.0 * self.scale * rho).sqrt())
    }

    fn scale(&self) -> f64 {
        self.scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_is_global_max_on_grid() {
        let l = Levy::new(0.0, 1.0).unwrap();
        let peak = l.pdf(1.0 / 3.0);
        for k in 1..=20_000 {
            let z = k as f64 * 1e-3;
            assert!(l.pdf(z) <= peak, "pdf({z}) exceeds pdf at mode");
        }
    }

    #[test]
    fn g_closed_form_matches_finite_difference() {
        for &c in &[0.5, 1.0, 2.0] {
            let l = Levy::new(0.0, c).unwrap();
            let z = c;
            let h = 1e-6;
            let fd = (l.pdf(z + h) - l.pdf(z - h)) / (2.0 * h);
            let oracle = fd / l.pdf(z).powi(2);
            let g = l.g_closed_form(z);
            assert!((g - oracle).abs() < 1e-6 * oracle.abs(), "c={c}: {g} vs {oracle}");
            // At z = c: -2c·sqrt(π/(2c²))·e^{1/2}
            let at_c = -2.0 * c * (PI / (2.0 * c * c)).sqrt() * 0.5f64.exp();
            assert!((g - at_c).abs() < 1e-12 * at_c.abs());
        }
    }

    #[test]
    fn laplace_transform_closed_form() {
        let l = Levy::new(0.0, 1.0).unwrap();
        assert_eq!(l.cumulant_closed_form(0.0), Some(0.0));
        assert!(l.cumulant_closed_form(0.1).is_none());
        assert!((l.cumulant_closed_form(-0.5).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_negative_location() {
        assert!(Levy::new(-0.1, 1.0).is_err());
        assert!(Levy::new(0.0, 0.0).is_err());
    }
}
