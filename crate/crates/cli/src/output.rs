//! Row layouts shared by the CSV and JSON writers.

use serde::Serialize;
use std::io::{self, Write};
use timing_diversity::{DiversityReport, Gain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn record(&self) -> Vec<String>;
}

fn gain(g: Option<Gain>) -> String {
    g.map_or_else(String::new, |g| g.to_string())
}

impl Row for DiversityReport {
    const HEADER: &'static [&'static str] = &["law", "delta", "d_ml", "d_lin", "d_fa", "d_la", "flags"];

    fn record(&self) -> Vec<String> {
        vec![
            self.law.clone(),
            self.delta.to_string(),
            gain(self.d_ml),
            gain(self.d_lin),
            gain(self.d_fa),
            gain(self.d_la),
            self.flags.join(";"),
        ]
    }
}

/// One point of a clip-point sweep.
#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub tau: f64,
    #[serde(flatten)]
    pub report: DiversityReport,
}

impl Row for SweepRow {
    const HEADER: &'static [&'static str] = &["tau", "law", "delta", "d_ml", "d_lin", "d_fa", "d_la", "flags"];

    fn record(&self) -> Vec<String> {
        let mut r = vec![self.tau.to_string()];
        r.extend(self.report.record());
        r
    }
}

#[derive(Debug, Serialize)]
pub struct CrossoverRow {
    pub base: String,
    pub delta: f64,
    pub tau_star: f64,
    pub residual: f64,
}

impl Row for CrossoverRow {
    const HEADER: &'static [&'static str] = &["base", "delta", "tau_star", "residual"];

    fn record(&self) -> Vec<String> {
        vec![self.base.clone(), self.delta.to_string(), self.tau_star.to_string(), self.residual.to_string()]
    }
}

pub fn write_rows<R: Row, W: Write>(mut out: W, rows: &[R], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(R::HEADER)?;
            for r in rows {
                w.write_record(r.record())?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)
        }
    }
}
