use super::sim::{simulate_grid, SimPlan, SimRunResult};
use crate::detectors::DetectorKind;
use crate::diversity::{chernoff_diversity, fa_diversity, la_diversity, linear_diversity, Gain};
use crate::{Error, Result};
use serde::Serialize;

/// Grid points with fewer errors than this are left out of slope fits.
const MIN_ERRORS_FOR_FIT: u64 = 50;

/// Least-squares slope of `−ln p̂` against `M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlopeFit {
    pub d_hat: f64,
    pub r2: f64,
    pub points_used: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum FitWeighting {
    #[default]
    Unweighted,
    /// Weights `n·p̂/(1−p̂)`, the inverse delta-method variance of `ln p̂`.
    InverseVariance,
}

pub fn fit_slope(results: &[SimRunResult], weighting: FitWeighting) -> Result<SlopeFit> {
    let pts: Vec<(f64, f64, f64)> = results
        .iter()
        .filter(|r| r.errors >= MIN_ERRORS_FOR_FIT && r.errors < r.trials)
        .map(|r| {
            let w = match weighting {
                FitWeighting::Unweighted => 1.0,
                FitWeighting::InverseVariance => r.trials as f64 * r.p_hat / (1.0 - r.p_hat),
            };
            (r.m as f64, -r.p_hat.ln(), w)
        })
        .collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientErrorEvents { usable: pts.len() });
    }
    let sw: f64 = pts.iter().map(|p| p.2).sum();
    let mx = pts.iter().map(|p| p.2 * p.0).sum::<f64>() / sw;
    let my = pts.iter().map(|p| p.2 * p.1).sum::<f64>() / sw;
    let sxx: f64 = pts.iter().map(|p| p.2 * (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| p.2 * (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| p.2 * (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(SlopeFit { d_hat: slope, r2, points_used: pts.len() })
}

/// Simulates the whole grid and fits the decay rate.
pub fn fit_diversity(plan: &SimPlan) -> Result<SlopeFit> {
    fit_slope(&simulate_grid(plan)?, FitWeighting::Unweighted)
}

/// Simulated decay rate next to the analytic exponent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyticComparison {
    pub d_analytic: Gain,
    pub fit: Option<SlopeFit>,
    pub relative_gap: Option<f64>,
    pub flag: Option<String>,
}

/// Compares the fitted slope with the analytic exponent of the plan's
/// detector. Degenerate or infinite exponents are reported by flag only and
/// nothing is simulated.
pub fn compare_analytic(plan: &SimPlan) -> Result<AnalyticComparison> {
    let law = &plan.law;
    let d = plan.delta;
    let analytic = match plan.detector {
        DetectorKind::Ml => chernoff_diversity(law, d)?.gain,
        DetectorKind::Linear => linear_diversity(law, d)?,
        DetectorKind::Fa => fa_diversity(law, d)?,
        DetectorKind::La => la_diversity(law, d)?,
    };
    let flag = match analytic {
        Gain::Degenerate => Some("degenerate"),
        Gain::Infinite => Some("infinite"),
        Gain::Finite(0.0) => Some("zero"),
        Gain::Finite(_) => None,
    };
    if let Some(flag) = flag {
        return Ok(AnalyticComparison {
            d_analytic: analytic,
            fit: None,
            relative_gap: None,
            flag: Some(flag.to_string()),
        });
    }
    let fit = fit_diversity(plan)?;
    let dv = analytic.value();
    Ok(AnalyticComparison {
        d_analytic: analytic,
        fit: Some(fit),
        relative_gap: Some((fit.d_hat - dv).abs() / dv),
        flag: None,
    })
}
