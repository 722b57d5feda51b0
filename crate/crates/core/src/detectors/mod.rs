//! Decision rules for one shot of `M` arrival times.
//!
//! Each rule decides between the two release times `0` and `Δ`. Thresholds
//! of the sample-mean, first-arrival and last-arrival rules depend only on
//! the law and the channel, so they are solved once and reused per shot.

mod threshold;

pub use threshold::{
    fa_error_probability, fa_threshold_residual, la_error_probability, la_threshold_residual, solve_fa_threshold,
    solve_la_threshold, solve_linear_threshold, FaThreshold, LaThreshold, LinearOptions, LinearThreshold,
};

use crate::densities::NoiseDensity;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Binary constellation `{0, Δ}` with `m` particles per shot.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub delta: f64,
    pub m: usize,
}

impl ChannelConfig {
    pub fn new(delta: f64, m: usize) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("at least one particle is required".into()));
        }
        Ok(Self { delta, m })
    }
}

/// Arrival times of one shot.
pub type ArrivalVector = [f64];

/// The release time a detector declares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Zero,
    Delta,
}

impl Decision {
    pub fn symbol(self, delta: f64) -> f64 {
        match self {
            Decision::Zero => 0.0,
            Decision::Delta => delta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetectorKind {
    Ml,
    #[serde(rename = "lin")]
    Linear,
    Fa,
    La,
}

impl DetectorKind {
    pub const ALL: [DetectorKind; 4] = [DetectorKind::Ml, DetectorKind::Linear, DetectorKind::Fa, DetectorKind::La];

    pub fn as_str(self) -> &'static str {
        match self {
            DetectorKind::Ml => "ml",
            DetectorKind::Linear => "lin",
            DetectorKind::Fa => "fa",
            DetectorKind::La => "la",
        }
    }
}

impl fmt::Display for DetectorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DetectorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DetectorKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown detector '{s}' (expected ml, lin, fa or la)")))
    }
}

/// Maximum-likelihood rule: decide `0` when `Σ ln f(y) − ln f(y−Δ) ≥ 0`.
///
/// An arrival before `Δ` makes the sum `+∞`; an arrival that is impossible
/// under release time `0` makes it `−∞`. A shot impossible under both
/// hypotheses is assigned `0`.
pub fn detect_ml<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig, y: &ArrivalVector) -> Decision {
    let mut sum = 0.0;
    let mut only_zero = false;
    let mut only_delta = false;
    for &v in y {
        let a = law.ln_pdf(v);
        let b = law.ln_pdf(v - cfg.delta);
        match (a == f64::NEG_INFINITY, b == f64::NEG_INFINITY) {
            (false, false) => sum += a - b,
            (false, true) => only_zero = true,
            (true, false) => only_delta = true,
            (true, true) => return Decision::Zero,
        }
    }
    if only_zero || (!only_delta && sum >= 0.0) {
        Decision::Zero
    } else {
        Decision::Delta
    }
}

/// Sample-mean rule; see [`solve_linear_threshold`].
pub fn detect_linear<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig, y: &ArrivalVector) -> Result<Decision> {
    Ok(solve_linear_threshold(law, cfg, LinearOptions::default())?.decide(y))
}

/// First-arrival rule with a freshly solved threshold.
pub fn detect_fa<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig, y: &ArrivalVector) -> Decision {
    solve_fa_threshold(law, cfg).decide(y)
}

/// Last-arrival rule with a freshly solved threshold.
pub fn detect_la<D: NoiseDensity + ?Sized>(law: &D, cfg: &ChannelConfig, y: &ArrivalVector) -> Result<Decision> {
    Ok(solve_la_threshold(law, cfg)?.decide(y))
}

/// A detector with its threshold solved, ready to be applied to many shots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Detector {
    Ml,
    Linear(LinearThreshold),
    Fa(FaThreshold),
    La(LaThreshold),
}

impl Detector {
    pub fn prepare<D: NoiseDensity + ?Sized>(
        law: &D,
        kind: DetectorKind,
        cfg: &ChannelConfig,
        linear: LinearOptions,
    ) -> Result<Self> {
        Ok(match kind {
            DetectorKind::Ml => Detector::Ml,
            DetectorKind::Linear => Detector::Linear(solve_linear_threshold(law, cfg, linear)?),
            DetectorKind::Fa => Detector::Fa(solve_fa_threshold(law, cfg)),
            DetectorKind::La => Detector::La(solve_la_threshold(law, cfg)?),
        })
    }

    pub fn kind(&self) -> DetectorKind {
        match self {
            Detector::Ml => DetectorKind::Ml,
            Detector::Linear(_) => DetectorKind::Linear,
            Detector::Fa(_) => DetectorKind::Fa,
            Detector::La(_) => DetectorKind::La,
        }
    }

    pub fn decide<D: NoiseDensity + ?Sized>(&self, law: &D, cfg: &ChannelConfig, y: &ArrivalVector) -> Decision {
        match self {
            Detector::Ml => detect_ml(law, cfg, y),
            Detector::Linear(t) => t.decide(y),
            Detector::Fa(t) => t.decide(y),
            Detector::La(t) => t.decide(y),
        }
    }
}
