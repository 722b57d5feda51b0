//! Asymptotic error exponents (diversity gains) of the four detectors.
//!
//! For `M` particles the error probability decays as `e^{-M·D}`; each
//! function here computes `D` for one detector from the noise law alone.

mod chernoff;
mod order;
mod rate;
mod report;

pub use chernoff::{chernoff_diversity, chernoff_objective, ChernoffResult};
pub use order::{crossover_residual, crossover_tau, fa_diversity, la_diversity, CrossoverOptions};
pub use rate::{cumulant, linear_balance, linear_diversity, rate_function, rate_function_numeric, LinearBalance};
pub use report::{full_report, DiversityReport};

use serde::{Serialize, Serializer};
use std::fmt;

/// A diversity gain. `Infinite` means the error probability vanishes faster
/// than any exponential; `Degenerate` marks a gain of zero that follows from
/// the law itself (infinite mean) rather than from a computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gain {
    Finite(f64),
    Infinite,
    Degenerate,
}

impl Gain {
    /// Numeric value, with `Infinite` as `f64::INFINITY` and `Degenerate` as 0.
    pub fn value(self) -> f64 {
        match self {
            Gain::Finite(v) => v,
            Gain::Infinite => f64::INFINITY,
            Gain::Degenerate => 0.0,
        }
    }

    pub fn is_degenerate(self) -> bool {
        matches!(self, Gain::Degenerate)
    }
}

impl fmt::Display for Gain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gain::Finite(v) => write!(f, "{v}"),
            Gain::Infinite => f.write_str("inf"),
            Gain::Degenerate => f.write_str("0"),
        }
    }
}

/// Finite gains serialize as numbers, `Infinite` as the string `"inf"`.
impl Serialize for Gain {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Gain::Finite(v) => s.serialize_f64(*v),
            Gain::Infinite => s.serialize_str("inf"),
            Gain::Degenerate => s.serialize_f64(0.0),
        }
    }
}
