//! Finite-`M` simulation of the detectors.
//!
//! Each trial draws the release time uniformly from `{0, Δ}`, adds `M`
//! independent delays and runs a detector. Trials are split into fixed-size
//! chunks, each with its own ChaCha stream keyed by `(seed, M, chunk)`, so
//! counts do not depend on how many worker threads run them.

mod fit;
mod output;
mod sim;

pub use fit::{compare_analytic, fit_diversity, fit_slope, AnalyticComparison, FitWeighting, SlopeFit};
pub use output::{write_csv, write_json, CSV_HEADER};
pub use sim::{simulate_grid, simulate_pe, SimPlan, SimRunResult, TrialBudget, CHUNK_TRIALS};
