//! Sufficient conditions for the first- and last-arrival densities to be
//! unimodal, built on `g(z) = f'(z) / f(z)²`.
//!
//! `g` overflows quickly near the support edge of heavy-tailed laws (for the
//! Lévy law it grows like `e^{c/2z}`), so comparisons are done on a signed
//! logarithm `(sign, ln|g|)`.

use super::{Law, NoiseDensity};
use crate::numeric::optimize::golden_section;
use crate::{Error, Result};

/// `g(z)` stored as `sign · e^{ln_abs}`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct SignedLog {
    sign: i8,
    ln_abs: f64,
}

impl SignedLog {
    fn new(v_sign: f64, ln_abs: f64) -> Self {
        let sign = if v_sign > 0.0 {
            1
        } else if v_sign < 0.0 {
            -1
        } else {
            0
        };
        Self { sign, ln_abs }
    }

    fn value(self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.ln_abs.exp()
        }
    }

    /// `self ≤ other` up to a relative slack on the magnitude.
    fn at_most(self, other: Self, rel: f64) -> bool {
        match (self.sign, other.sign) {
            (a, b) if a != b => a < b,
            (0, 0) => true,
            (1, 1) => self.ln_abs <= other.ln_abs + rel,
            _ => self.ln_abs + rel >= other.ln_abs,
        }
    }
}

fn signed_g<D: NoiseDensity + ?Sized>(law: &D, z: f64) -> Result<SignedLog> {
    let lp = law.ln_pdf(z);
    if lp == f64::NEG_INFINITY {
        return Err(Error::DegeneratePoint(z));
    }
    let s = law.score(z);
    Ok(SignedLog::new(s, s.abs().ln() - lp))
}

/// `f'(z) / f(z)²`.
pub fn g_ratio<D: NoiseDensity + ?Sized>(law: &D, z: f64) -> Result<f64> {
    signed_g(law, z).map(SignedLog::value)
}

fn nonincreasing_on<D: NoiseDensity + ?Sized>(law: &D, points: impl Iterator<Item = f64>) -> bool {
    let mut prev: Option<SignedLog> = None;
    for z in points {
        let Ok(g) = signed_g(law, z) else {
            return false;
        };
        if let Some(p) = prev {
            if !g.at_most(p, 1e-9) {
                return false;
            }
        }
        prev = Some(g);
    }
    true
}

/// True when `g` is numerically nonincreasing on `grid` points spanning
/// `(lower, lower + epsilon]`.
pub fn check_fa_unimodality_condition<D: NoiseDensity + ?Sized>(law: &D, epsilon: f64, grid: usize) -> bool {
    let lower = law.support().lower;
    let width = epsilon.min(law.support().upper - lower);
    if !(width > 0.0) || grid == 0 {
        return false;
    }
    nonincreasing_on(law, (1..=grid).map(|k| lower + width * k as f64 / grid as f64))
}

/// True when `g` is numerically nonincreasing on `grid` interior points of
/// `(τ − epsilon, τ)`.
pub fn check_la_unimodality_condition<D: NoiseDensity + ?Sized>(law: &D, epsilon: f64, grid: usize) -> Result<bool> {
    let s = law.support();
    if !s.is_bounded() {
        return Err(Error::InfiniteSupport);
    }
    let width = epsilon.min(s.upper - s.lower);
    if !(width > 0.0) || grid == 0 {
        return Ok(false);
    }
    let start = s.upper - width;
    let step = width / (grid + 1) as f64;
    Ok(nonincreasing_on(law, (1..=grid).map(|k| start + step * k as f64)))
}

/// `g(z)(1 − F(z))` in signed-log form.
fn tilted(law: &Law, z: f64) -> Option<SignedLog> {
    let g = signed_g(law, z).ok()?;
    let ln_sf = law.ln_sf(z);
    (ln_sf > f64::NEG_INFINITY && !g.ln_abs.is_nan()).then_some(SignedLog { sign: g.sign, ln_abs: g.ln_abs + ln_sf })
}

/// Smallest particle count beyond which the first-arrival density is
/// unimodal, `⌈max_{z>ε} g(z)(1 − F(z))⌉ + 1`, never less than 1.
///
/// Laws whose mode sits on the left edge of the support return 1.
pub fn min_particles_unimodal(law: &Law, epsilon: f64) -> Result<u64> {
    let s = law.support();
    if law.mode().lower <= s.lower {
        return Ok(1);
    }
    if !check_fa_unimodality_condition(law, epsilon, 1000) {
        return Err(Error::ConditionUnverified);
    }
    let from = s.lower + epsilon;
    let to = if s.is_bounded() { s.upper } else { s.lower + 20.0 * law.scale() };
    if !(to > from) {
        return Err(Error::ConditionUnverified);
    }
    let value = |z: f64| tilted(law, z).map_or(f64::NEG_INFINITY, SignedLog::value);

    let step = 1e-3 * law.scale();
    let n = ((to - from) / step).ceil() as usize;
    let (mut best_z, mut best_v) = (from, f64::NEG_INFINITY);
    for k in 1..=n {
        let z = (from + step * k as f64).min(to);
        let v = value(z);
        if v > best_v {
            best_v = v;
            best_z = z;
        }
    }
    if best_v == f64::INFINITY {
        return Err(Error::ConditionUnverified);
    }
    let lo = (best_z - step).max(from);
    let hi = (best_z + step).min(to);
    let refined = golden_section(|z| -value(z), lo, hi, 1e-12 * law.scale());
    let peak = best_v.max(-refined.value);
    if !peak.is_finite() {
        return Err(Error::ConditionUnverified);
    }
    Ok((peak.ceil() + 1.0).max(1.0) as u64)
}
