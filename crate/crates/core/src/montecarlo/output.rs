use super::sim::SimRunResult;
use std::io::{self, Write};

pub const CSV_HEADER: &str = "law,delta,detector,m,trials,errors,p_hat,stderr";

/// Header row plus one row per result; fields containing commas (law
/// specs) are quoted.
pub fn write_csv<W: Write>(out: W, results: &[SimRunResult]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if results.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    for r in results {
        w.serialize(r)?;
    }
    w.flush()
}

/// JSON array of results.
pub fn write_json<W: Write>(mut out: W, results: &[SimRunResult]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, results)?;
    writeln!(out)
}
