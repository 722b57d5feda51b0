//! Diversity gains of detectors for one-shot binary signaling over
//! molecular timing channels.
//!
//! A transmitter releases `M` particles at time `0` or `Δ`; each arrives
//! after an independent random delay drawn from a right-sided unimodal law.
//! The crate provides the delay laws ([`densities`]), four detectors
//! ([`detectors`]: maximum likelihood, sample mean, first arrival, last
//! arrival), their asymptotic error exponents ([`diversity`]), and a Monte
//! Carlo harness that checks those exponents at finite `M`
//! ([`montecarlo`]).
//!
//! ```
//! use timing_diversity::{diversity, parse_law};
//!
//! let law = parse_law("ig(mu=1,b=1)").unwrap();
//! let d = diversity::fa_diversity(&law, 1.0).unwrap().value();
//! assert!((d - 1.1029).abs() < 1e-3);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod densities;
pub mod detectors;
pub mod diversity;
pub mod error;
pub mod grid;
pub mod montecarlo;
pub mod numeric;
pub mod tables;

pub use densities::{parse_law, Law, NoiseDensity};
pub use detectors::{ChannelConfig, Decision, DetectorKind};
pub use diversity::{full_report, DiversityReport, Gain};
pub use error::{Error, ParseError, Result};
