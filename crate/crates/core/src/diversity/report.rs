use super::{chernoff_diversity, fa_diversity, la_diversity, linear_diversity, Gain};
use crate::densities::Law;
use crate::Result;
use serde::Serialize;
use std::fmt;

/// All four exponents for one law and shift. A component that could not be
/// computed is `None` and explained in `flags`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiversityReport {
    pub law: String,
    pub delta: f64,
    pub d_ml: Option<Gain>,
    pub d_lin: Option<Gain>,
    pub d_fa: Option<Gain>,
    pub d_la: Option<Gain>,
    pub flags: Vec<String>,
}

fn record(name: &str, r: Result<Gain>, flags: &mut Vec<String>) -> Option<Gain> {
    match r {
        Ok(g) => {
            if g.is_degenerate() {
                flags.push(format!("{name}:degenerate"));
            }
            Some(g)
        }
        Err(crate::Error::InfiniteGain) => {
            flags.push(format!("{name}:infinite"));
            Some(Gain::Infinite)
        }
        Err(e) => {
            flags.push(format!("{name}:error:{e}"));
            None
        }
    }
}

/// Computes every exponent, never failing as a whole.
pub fn full_report(law: &Law, delta: f64) -> DiversityReport {
    let mut flags = Vec::new();
    let d_ml = record("d_ml", chernoff_diversity(law, delta).map(|r| r.gain), &mut flags);
    let d_lin = record("d_lin", linear_diversity(law, delta), &mut flags);
    let d_fa = record("d_fa", fa_diversity(law, delta), &mut flags);
    let d_la = record("d_la", la_diversity(law, delta), &mut flags);
    DiversityReport { law: law.to_string(), delta, d_ml, d_lin, d_fa, d_la, flags }
}

impl DiversityReport {
    /// `(d_ml, d_lin, d_fa, d_la)` as plain numbers; missing values are NaN.
    pub fn values(&self) -> [f64; 4] {
        [self.d_ml, self.d_lin, self.d_fa, self.d_la].map(|g| g.map_or(f64::NAN, Gain::value))
    }
}

/// Flat `key=value` record on one line.
impl fmt::Display for DiversityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: Option<Gain>| g.map_or_else(|| "nan".to_string(), |g| g.to_string());
        write!(
            f,
            "law={} delta={} d_ml={} d_lin={} d_fa={} d_la={} flags={}",
            self.law,
            self.delta,
            show(self.d_ml),
            show(self.d_lin),
            show(self.d_fa),
            show(self.d_la),
            self.flags.join(";")
        )
    }
}
