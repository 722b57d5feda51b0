mod common;

use common::{law, within_sigmas};
use timing_diversity::detectors::LinearOptions;
use timing_diversity::montecarlo::{
    compare_analytic, fit_diversity, fit_slope, simulate_grid, simulate_pe, FitWeighting, SimPlan, SimRunResult,
    TrialBudget,
};
use timing_diversity::{DetectorKind, Law, NoiseDensity};

fn plan(spec: &str, delta: f64, det: DetectorKind, grid: Vec<usize>, trials: TrialBudget, seed: u64) -> SimPlan {
    SimPlan::new(law(spec), delta, det, grid, trials, seed).unwrap()
}

fn fixed(n: u64) -> TrialBudget {
    TrialBudget::Fixed(n)
}

#[test]
fn exponential_first_arrival_at_five_particles() {
    let p = plan("exp(b=1)", 1.0, DetectorKind::Fa, vec![5], fixed(1_000_000), 1);
    let r = simulate_pe(&p, 5).unwrap();
    assert!(within_sigmas(r.errors, r.trials, 0.5 * (-5.0f64).exp(), 3.0), "{r:?}");
}

#[test]
fn far_apart_hypotheses_never_err() {
    let p = plan("exp(b=1)", 50.0, DetectorKind::Ml, vec![10], fixed(1_000_000), 2);
    assert_eq!(simulate_pe(&p, 10).unwrap().errors, 0);
}

#[test]
fn uniform_ml_matches_last_arrival_closed_form() {
    let p = plan("unif(tau=1)", 0.5, DetectorKind::Ml, vec![3], fixed(1_000_000), 3);
    let r = simulate_pe(&p, 3).unwrap();
    assert!(within_sigmas(r.errors, r.trials, 0.0625, 3.0), "{r:?}");
}

#[test]
fn results_satisfy_record_invariants() {
    let p = plan("ig(mu=1,b=1)", 1.0, DetectorKind::Linear, vec![1, 3, 5], fixed(20_000), 4);
    for r in simulate_grid(&p).unwrap() {
        assert!(r.errors <= r.trials);
        assert_eq!(r.p_hat, r.errors as f64 / r.trials as f64);
        assert!((r.stderr - (r.p_hat * (1.0 - r.p_hat) / r.trials as f64).sqrt()).abs() < 1e-15);
    }
}

#[test]
fn ml_error_rate_is_lowest_on_every_cell() {
    let cells: [(&str, f64, &[usize]); 6] = [
        ("exp(b=1)", 0.5, &[2, 5]),
        ("ig(mu=1,b=1)", 0.5, &[2, 6]),
        ("levy(mu=0,b=1)", 1.0, &[2, 5]),
        ("unif(tau=1)", 0.25, &[2, 6]),
        ("trunc(ig(mu=1,b=1),tau=1.5)", 0.5, &[2, 4]),
        ("trunc(levy(mu=0,b=1),tau=2)", 1.0, &[2, 4]),
    ];
    for (spec, delta, ms) in cells {
        let l: Law = law(spec);
        let mut kinds = vec![DetectorKind::Ml, DetectorKind::Fa];
        if l.mean().is_finite() {
            kinds.push(DetectorKind::Linear);
        }
        if l.support().is_bounded() {
            kinds.push(DetectorKind::La);
        }
        for &m in ms {
            let run = |k| simulate_pe(&plan(spec, delta, k, vec![m], fixed(200_000), 5), m).unwrap();
            let ml: SimRunResult = run(DetectorKind::Ml);
            for &k in &kinds[1..] {
                let o = run(k);
                let slack = 3.0 * (ml.stderr.powi(2) + o.stderr.powi(2)).sqrt();
                assert!(ml.p_hat <= o.p_hat + slack, "{spec} Δ={delta} M={m}: ml {} vs {k} {}", ml.p_hat, o.p_hat);
            }
        }
    }
}

#[test]
fn log_error_rate_is_linear_for_threshold_at_shift() {
    let p = plan("exp(b=1)", 0.5, DetectorKind::Fa, (1..=8).collect(), fixed(10_000_000), 6);
    let results = simulate_grid(&p).unwrap();
    let fit = fit_slope(&results, FitWeighting::Unweighted).unwrap();
    assert!(fit.r2 > 0.999, "{fit:?}");
    assert!((fit.d_hat - 0.5).abs() < 0.01, "{fit:?}");
    let w = fit_slope(&results, FitWeighting::InverseVariance).unwrap();
    assert!((w.d_hat - 0.5).abs() < 0.01, "{w:?}");
}

#[test]
fn exponential_first_arrival_slope_fit() {
    let p = plan("exp(b=1)", 0.5, DetectorKind::Fa, (2..=20).step_by(2).collect(), fixed(10_000_000), 7);
    let c = compare_analytic(&p).unwrap();
    assert!(c.relative_gap.unwrap() < 0.05, "{c:?}");
}

#[test]
fn levy_first_arrival_slope_fit() {
    let p = plan("levy(mu=0,b=1)", 1.0, DetectorKind::Fa, (2..=14).collect(), TrialBudget::DEFAULT_ADAPTIVE, 8);
    let fit = fit_diversity(&p).unwrap();
    assert!((fit.d_hat - 0.3817).abs() / 0.3817 < 0.07, "{fit:?}");
}

#[test]
fn uniform_last_arrival_slope_fit() {
    let p = plan("unif(tau=1)", 0.75, DetectorKind::La, (1..=8).collect(), TrialBudget::DEFAULT_ADAPTIVE, 9);
    let c = compare_analytic(&p).unwrap();
    assert!((c.d_analytic.value() - 4f64.ln()).abs() < 1e-12);
    assert!(c.relative_gap.unwrap() < 0.05, "{c:?}");
}

#[test]
fn levy_linear_comparison_reports_flag_only() {
    let p = plan("levy(mu=0,b=1)", 1.0, DetectorKind::Linear, vec![2, 4, 6], fixed(1000), 10)
        .with_linear_options(LinearOptions { median_fallback: true });
    let c = compare_analytic(&p).unwrap();
    assert_eq!(c.flag.as_deref(), Some("degenerate"));
    assert!(c.fit.is_none() && c.relative_gap.is_none());
}

#[test]
fn seed_changes_counts_but_not_shape() {
    let a = simulate_pe(&plan("ig(mu=1,b=1)", 1.0, DetectorKind::Fa, vec![3], fixed(100_000), 1), 3).unwrap();
    let b = simulate_pe(&plan("ig(mu=1,b=1)", 1.0, DetectorKind::Fa, vec![3], fixed(100_000), 2), 3).unwrap();
    assert_ne!(a.errors, b.errors);
    let slack = 4.0 * (a.stderr.powi(2) + b.stderr.powi(2)).sqrt();
    assert!((a.p_hat - b.p_hat).abs() < slack);
}
