#![allow(dead_code)]

use timing_diversity::densities::{Exponential, InverseGaussian, Levy, Truncated, Uniform};
use timing_diversity::Law;

pub fn law(spec: &str) -> Law {
    spec.parse().unwrap()
}

/// Every family, with a truncated law on each sampling path.
pub fn shipped_laws() -> Vec<Law> {
    vec![
        Exponential::new(1.0).unwrap().into(),
        Exponential::new(2.5).unwrap().into(),
        Uniform::new(1.0).unwrap().into(),
        InverseGaussian::new(1.0, 1.0).unwrap().into(),
        InverseGaussian::new(2.0, 0.5).unwrap().into(),
        Levy::new(0.0, 1.0).unwrap().into(),
        Levy::new(0.5, 2.0).unwrap().into(),
        Truncated::new(Levy::new(0.0, 1.0).unwrap().into(), 2.0).unwrap().into(),
        Truncated::new(Levy::new(0.0, 1.0).unwrap().into(), 0.25).unwrap().into(),
        Truncated::new(InverseGaussian::new(1.0, 1.0).unwrap().into(), 0.8).unwrap().into(),
    ]
}

/// `|p̂ − p| < k·σ` with `σ` from the exact `p`.
pub fn within_sigmas(errors: u64, trials: u64, p: f64, k: f64) -> bool {
    let p_hat = errors as f64 / trials as f64;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    (p_hat - p).abs() < k * sigma.max(1.0 / trials as f64)
}
