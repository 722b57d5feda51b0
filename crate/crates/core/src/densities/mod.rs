//! Propagation-delay laws.
//!
//! Every law is right-sided, continuous, differentiable on the interior of
//! its support and unimodal. Densities are evaluated in the log domain
//! (`ln_pdf`) so heavy tails and near-boundary values do not underflow; the
//! plain `pdf` is derived from it.

mod exponential;
mod inverse_gaussian;
mod levy;
mod spec;
mod truncated;
mod uniform;
pub mod unimodality;

pub use exponential::Exponential;
pub use inverse_gaussian::InverseGaussian;
pub use levy::Levy;
pub use spec::parse_law;
pub use truncated::Truncated;
pub use uniform::Uniform;
pub use unimodality::{
    check_fa_unimodality_condition, check_la_unimodality_condition, g_ratio, min_particles_unimodal,
};

use rand::Rng;
use std::fmt;

/// Default tolerance on `∫ pdf = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-6;
/// Default relative tolerance between `pdf_derivative` and a finite difference.
pub const DERIVATIVE_TOL: f64 = 1e-5;

/// Support `(lower, upper)`; `upper` may be `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub lower: f64,
    pub upper: f64,
}

impl Support {
    pub fn is_bounded(&self) -> bool {
        self.upper.is_finite()
    }

    pub fn contains(&self, z: f64) -> bool {
        z >= self.lower && z <= self.upper
    }
}

/// The set of maximizers of a unimodal density; a single point when
/// `lower == upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    pub lower: f64,
    pub upper: f64,
}

impl Mode {
    pub fn point(z: f64) -> Self {
        Self { lower: z, upper: z }
    }
}

/// Feasible set of the cumulant generating function argument: `ρ < max`
/// or `ρ ≤ max` when `inclusive`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CumulantDomain {
    pub max: f64,
    pub inclusive: bool,
}

impl CumulantDomain {
    pub const ALL: Self = Self { max: f64::INFINITY, inclusive: false };

    pub fn contains(&self, rho: f64) -> bool {
        if self.inclusive {
            rho <= self.max
        } else {
            rho < self.max
        }
    }
}

/// A right-sided unimodal noise density.
pub trait NoiseDensity {
    fn support(&self) -> Support;
    fn mode(&self) -> Mode;
    /// `+∞` when the mean does not exist.
    fn mean(&self) -> f64;
    fn variance(&self) -> f64;

    /// Natural log of the density, `-∞` outside the support.
    fn ln_pdf(&self, z: f64) -> f64;
    /// `d/dz ln f(z)` on the interior of the support.
    fn score(&self, z: f64) -> f64;
    fn cdf(&self, z: f64) -> f64;

    fn pdf(&self, z: f64) -> f64 {
        self.ln_pdf(z).exp()
    }

    fn pdf_derivative(&self, z: f64) -> f64 {
        let p = self.pdf(z);
        if p == 0.0 {
            0.0
        } else {
            self.score(z) * p
        }
    }

    fn sf(&self, z: f64) -> f64 {
        1.0 - self.cdf(z)
    }

    fn ln_cdf(&self, z: f64) -> f64 {
        self.cdf(z).ln()
    }

    fn ln_sf(&self, z: f64) -> f64 {
        self.sf(z).ln()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64;

    fn cumulant_domain(&self) -> CumulantDomain {
        CumulantDomain::ALL
    }

    /// Closed-form `ln E[e^{ρZ}]`, when the law has one.
    fn cumulant_closed_form(&self, _rho: f64) -> Option<f64> {
        None
    }

    /// Closed-form rate function, when the law has one.
    fn rate_closed_form(&self, _v: f64) -> Option<f64> {
        None
    }

    /// Length scale used to split half-line integrals.
    fn scale(&self) -> f64;
}

/// Any of the shipped laws. This is what the text grammar produces.
#[derive(Debug, Clone, PartialEq)]
pub enum Law {
    Exponential(Exponential),
    Uniform(Uniform),
    InverseGaussian(InverseGaussian),
    Levy(Levy),
    Truncated(Truncated),
}

macro_rules! delegate {
    ($self:ident, $inner:ident => $body:expr) => {
        match $self {
            Law::Exponential($inner) => $body,
            Law::Uniform($inner) => $body,
            Law::InverseGaussian($inner) => $body,
            Law::Levy($inner) => $body,
            Law::Truncated($inner) => $body,
        }
    };
}

impl NoiseDensity for Law {
    fn support(&self) -> Support {
        delegate!(self, l => l.support())
    }
    fn mode(&self) -> Mode {
        delegate!(self, l => l.mode())
    }
    fn mean(&self) -> f64 {
        delegate!(self, l => l.mean())
    }
    fn variance(&self) -> f64 {
        delegate!(self, l => l.variance())
    }
    fn ln_pdf(&self, z: f64) -> f64 {
        delegate!(self, l => l.ln_pdf(z))
    }
    fn score(&self, z: f64) -> f64 {
        delegate!(self, l => l.score(z))
    }
    fn cdf(&self, z: f64) -> f64 {
        delegate!(self, l => l.cdf(z))
    }
    fn pdf(&self, z: f64) -> f64 {
        delegate!(self, l => l.pdf(z))
    }
    fn pdf_derivative(&self, z: f64) -> f64 {
        delegate!(self, l => l.pdf_derivative(z))
    }
    fn sf(&self, z: f64) -> f64 {
        delegate!(self, l => l.sf(z))
    }
    fn ln_cdf(&self, z: f64) -> f64 {
        delegate!(self, l => l.ln_cdf(z))
    }
    fn ln_sf(&self, z: f64) -> f64 {
        delegate!(self, l => l.ln_sf(z))
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        delegate!(self, l => l.sample(rng))
    }
    fn cumulant_domain(&self) -> CumulantDomain {
        delegate!(self, l => l.cumulant_domain())
    }
    fn cumulant_closed_form(&self, rho: f64) -> Option<f64> {
        delegate!(self, l => l.cumulant_closed_form(rho))
    }
    fn rate_closed_form(&self, v: f64) -> Option<f64> {
        delegate!(self, l => l.rate_closed_form(v))
    }
    fn scale(&self) -> f64 {
        delegate!(self, l => l.scale())
    }
}

impl From<Exponential> for Law {
    fn from(l: Exponential) -> Self {
        Law::Exponential(l)
    }
}

impl From<Uniform> for Law {
    fn from(l: Uniform) -> Self {
        Law::Uniform(l)
    }
}

impl From<InverseGaussian> for Law {
    fn from(l: InverseGaussian) -> Self {
        Law::InverseGaussian(l)
    }
}

impl From<Levy> for Law {
    fn from(l: Levy) -> Self {
        Law::Levy(l)
    }
}

impl From<Truncated> for Law {
    fn from(l: Truncated) -> Self {
        Law::Truncated(l)
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Exponential(l) => write!(f, "exp(b={})", l.rate()),
            Law::Uniform(l) => write!(f, "unif(tau={})", l.tau()),
            Law::InverseGaussian(l) => write!(f, "ig(mu={},b={})", l.mu(), l.shape()),
            Law::Levy(l) => write!(f, "levy(mu={},b={})", l.location(), l.scale_param()),
            Law::Truncated(l) => write!(f, "trunc({},tau={})", l.base(), l.tau()),
        }
    }
}

impl std::str::FromStr for Law {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_law(s)
    }
}

pub(crate) fn check_positive(name: &str, v: f64) -> crate::Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::InvalidParameter(format!("{name} must be positive and finite, got {v}")))
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;
    use crate::numeric::quadrature::{integrate, QuadOptions};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pdf_integrates_to_one() {
        for law in shipped_laws() {
            let total = integral_of_pdf(&law);
            assert!((total - 1.0).abs() < NORMALIZATION_TOL, "{law}: {total}");
        }
    }

    #[test]
    fn cdf_matches_integral_of_pdf() {
        for law in shipped_laws() {
            let s = law.support();
            let hi = if s.is_bounded() { s.upper } else { s.lower + 10.0 * law.scale() };
            for k in 1..=9 {
                let z = s.lower + (hi - s.lower) * k as f64 / 10.0;
                let direct = integrate(|t| law.pdf(t), s.lower, z, QuadOptions::with_rel_tol(1e-12)).unwrap().value;
                assert!((direct - law.cdf(z)).abs() < 1e-6, "{law} at {z}: {direct} vs {}", law.cdf(z));
            }
        }
    }

    #[test]
    fn cdf_endpoints_and_monotone() {
        for law in shipped_laws() {
            let s = law.support();
            assert!(law.cdf(s.lower).abs() < 1e-12, "{law}");
            let top = if s.is_bounded() { s.upper } else { 1e12 };
            assert!((law.cdf(top) - 1.0).abs() < 1e-5, "{law}: {}", law.cdf(top));
            let mut prev = 0.0;
            for k in 0..=2000 {
                let z = s.lower + (top.min(s.lower + 30.0) - s.lower) * k as f64 / 2000.0;
                let c = law.cdf(z);
                assert!(c >= prev - 1e-15 && (0.0..=1.0).contains(&c), "{law} at {z}");
                prev = c;
            }
        }
    }

    #[test]
    fn pdf_vanishes_outside_support() {
        for law in shipped_laws() {
            let s = law.support();
            assert_eq!(law.pdf(s.lower - 0.1), 0.0, "{law}");
            assert_eq!(law.pdf(-1.0), 0.0, "{law}");
            if s.is_bounded() {
                assert_eq!(law.pdf(s.upper + 1e-9), 0.0, "{law}");
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference_of_cdf_and_pdf() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for law in shipped_laws() {
            let s = law.support();
            let hi = if s.is_bounded() { s.upper } else { s.lower + 20.0 * law.scale() };
            for _ in 0..10_000 {
                let z = rng.random_range(s.lower + 0.02 * (hi - s.lower)..hi - 0.02 * (hi - s.lower));
                let h = 1e-5 * z.abs().max(1e-2);
                let dcdf = (law.cdf(z + h) - law.cdf(z - h)) / (2.0 * h);
                let p = law.pdf(z);
                assert!((dcdf - p).abs() < 1e-5 * p.max(1.0), "{law} at {z}: {dcdf} vs {p}");
                let dpdf = (law.pdf(z + h) - law.pdf(z - h)) / (2.0 * h);
                let analytic = law.pdf_derivative(z);
                assert!(
                    (dpdf - analytic).abs() < DERIVATIVE_TOL * analytic.abs().max(1.0),
                    "{law} at {z}: {dpdf} vs {analytic}"
                );
            }
        }
    }

    #[test]
    fn discrete_differences_change_sign_at_most_once() {
        for law in shipped_laws() {
            let s = law.support();
            let hi = if s.is_bounded() { s.upper } else { s.lower + 50.0 * law.scale() };
            let n = 10_000;
            let vals: Vec<f64> = (1..n).map(|k| law.pdf(s.lower + (hi - s.lower) * k as f64 / n as f64)).collect();
            let mut seen_down = false;
            for w in vals.windows(2) {
                let d = w[1] - w[0];
                if d < -1e-14 {
                    seen_down = true;
                } else if d > 1e-14 {
                    assert!(!seen_down, "{law}: density rises after falling");
                }
            }
        }
    }

    #[test]
    fn mode_maximizes_density() {
        for law in shipped_laws() {
            let s = law.support();
            let m = law.mode();
            let peak = law.pdf(m.lower.max(s.lower + 1e-12)).max(law.pdf(m.upper.min(s.upper)));
            let hi = if s.is_bounded() { s.upper } else { s.lower + 30.0 * law.scale() };
            for k in 1..5000 {
                let z = s.lower + (hi - s.lower) * k as f64 / 5000.0;
                assert!(law.pdf(z) <= peak * (1.0 + 1e-9), "{law}: pdf({z}) > pdf(mode)");
            }
        }
    }

    #[test]
    fn display_round_trips_through_parser() {
        for law in shipped_laws() {
            let text = law.to_string();
            let back: Law = text.parse().unwrap();
            assert_eq!(back, law, "{text}");
        }
    }
}
