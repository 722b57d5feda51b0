use crate::densities::{Law, NoiseDensity};
use crate::detectors::{ChannelConfig, Decision, Detector, DetectorKind, LinearOptions};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Trials per independent random stream.
pub const CHUNK_TRIALS: u64 = 8192;
/// Chunks run between two checks of the adaptive stopping rule.
const ROUND_CHUNKS: u64 = 32;
const MIN_TRIALS: u64 = 1000;

/// How many trials to run per grid cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialBudget {
    Fixed(u64),
    /// Run until `min_errors` errors are seen or `max_trials` is reached.
    Adaptive {
        min_errors: u64,
        max_trials: u64,
    },
}

impl TrialBudget {
    /// 200 errors or 10⁸ trials, whichever comes first.
    pub const DEFAULT_ADAPTIVE: TrialBudget = TrialBudget::Adaptive { min_errors: 200, max_trials: 100_000_000 };

    fn cap(self) -> u64 {
        match self {
            TrialBudget::Fixed(n) => n,
            TrialBudget::Adaptive { max_trials, .. } => max_trials,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimPlan {
    pub law: Law,
    pub delta: f64,
    pub detector: DetectorKind,
    pub m_grid: Vec<usize>,
    pub trials: TrialBudget,
    pub seed: u64,
    pub linear: LinearOptions,
}

impl SimPlan {
    pub fn new(
        law: Law,
        delta: f64,
        detector: DetectorKind,
        m_grid: Vec<usize>,
        trials: TrialBudget,
        seed: u64,
    ) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")));
        }
        if m_grid.is_empty() || m_grid[0] == 0 || m_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "particle grid must be non-empty, positive and strictly increasing".into(),
            ));
        }
        if trials.cap() < MIN_TRIALS {
            return Err(Error::InvalidParameter(format!("at least {MIN_TRIALS} trials are required")));
        }
        if let TrialBudget::Adaptive { min_errors: 0, .. } = trials {
            return Err(Error::InvalidParameter("adaptive budget needs a positive error target".into()));
        }
        Ok(Self { law, delta, detector, m_grid, trials, seed, linear: LinearOptions::default() })
    }

    pub fn with_linear_options(mut self, linear: LinearOptions) -> Self {
        self.linear = linear;
        self
    }
}

/// Error-rate estimate for one particle count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimRunResult {
    pub law: String,
    pub delta: f64,
    pub detector: DetectorKind,
    pub m: usize,
    pub trials: u64,
    pub errors: u64,
    pub p_hat: f64,
    pub stderr: f64,
}

impl SimRunResult {
    fn new(plan: &SimPlan, m: usize, trials: u64, errors: u64) -> Self {
        let p = errors as f64 / trials as f64;
        Self {
            law: plan.law.to_string(),
            delta: plan.delta,
            detector: plan.detector,
            m,
            trials,
            errors,
            p_hat: p,
            stderr: (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }

    /// Normal-approximation 95% interval, clipped to `[0, 1]`.
    pub fn ci95(&self) -> (f64, f64) {
        let h = 1.959_963_984_540_054 * self.stderr;
        ((self.p_hat - h).max(0.0), (self.p_hat + h).min(1.0))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn chunk_rng(seed: u64, m: usize, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(m as u64)));
    rng.set_stream(chunk);
    rng
}

fn run_chunk(law: &Law, cfg: &ChannelConfig, detector: &Detector, seed: u64, chunk: u64, trials: u64) -> u64 {
    let mut rng = chunk_rng(seed, cfg.m, chunk);
    let mut y = vec![0.0; cfg.m];
    let mut errors = 0;
    for _ in 0..trials {
        let sent = if rng.random::<bool>() { Decision::Delta } else { Decision::Zero };
        let x = sent.symbol(cfg.delta);
        for v in y.iter_mut() {
            *v = x + law.sample(&mut rng);
        }
        if detector.decide(law, cfg, &y) != sent {
            errors += 1;
        }
    }
    errors
}

/// Estimates the error probability of the plan's detector at `m` particles.
pub fn simulate_pe(plan: &SimPlan, m: usize) -> Result<SimRunResult> {
    let cfg = ChannelConfig::new(plan.delta, m)?;
    let detector = Detector::prepare(&plan.law, plan.detector, &cfg, plan.linear)?;
    let cap = plan.trials.cap();
    let total_chunks = cap.div_ceil(CHUNK_TRIALS);
    let chunk_size = |c: u64| CHUNK_TRIALS.min(cap - c * CHUNK_TRIALS);
    let run = |c: u64| run_chunk(&plan.law, &cfg, &detector, plan.seed, c, chunk_size(c));

    let (mut done, mut trials, mut errors) = (0u64, 0u64, 0u64);
    while done < total_chunks {
        let end = match plan.trials {
            TrialBudget::Fixed(_) => total_chunks,
            TrialBudget::Adaptive { .. } => (done + ROUND_CHUNKS).min(total_chunks),
        };
        errors += (done..end).into_par_iter().map(run).sum::<u64>();
        trials += (done..end).map(chunk_size).sum::<u64>();
        done = end;
        if let TrialBudget::Adaptive { min_errors, .. } = plan.trials {
            if errors >= min_errors {
                break;
            }
        }
    }
    Ok(SimRunResult::new(plan, m, trials, errors))
}

/// One result per grid point, in grid order.
pub fn simulate_grid(plan: &SimPlan) -> Result<Vec<SimRunResult>> {
    plan.m_grid.iter().map(|&m| simulate_pe(plan, m)).collect()
}
