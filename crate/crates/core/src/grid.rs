//! Parsers for the command-line particle grid and trial count.

use crate::error::ParseError;
use crate::{Error, Result};

/// Largest particle count accepted on a grid.
pub const MAX_PARTICLES: usize = 100_000_000;
/// Largest grid length accepted.
pub const MAX_GRID_POINTS: usize = 100_000;

fn parse_error(msg: impl Into<String>, pos: usize) -> Error {
    Error::Parse(ParseError::new(msg, pos))
}

fn count(text: &str, offset: usize) -> Result<usize> {
    let t = text.trim();
    let lead = offset + (text.len() - text.trim_start().len());
    let v: usize = t.parse().map_err(|_| parse_error(format!("expected a positive integer, got '{t}'"), lead))?;
    if v == 0 || v > MAX_PARTICLES {
        return Err(parse_error(format!("particle count must be in 1..={MAX_PARTICLES}"), lead));
    }
    Ok(v)
}

/// Parses `start:stop:step` (inclusive of `stop` when it lies on the grid),
/// `start:stop` (step 1), a single count, or a comma-separated list.
pub fn parse_m_grid(text: &str) -> Result<Vec<usize>> {
    let grid = if text.contains(':') {
        let mut parts = Vec::new();
        let mut at = 0;
        for p in text.split(':') {
            parts.push((p, at));
            at += p.len() + 1;
        }
        if parts.len() > 3 {
            return Err(parse_error("expected start:stop:step", parts[3].1 - 1));
        }
        let start = count(parts[0].0, parts[0].1)?;
        let stop = count(parts[1].0, parts[1].1)?;
        let step = match parts.get(2) {
            Some(&(p, at)) => count(p, at)?,
            None => 1,
        };
        if stop < start {
            return Err(parse_error("stop is below start", parts[1].1));
        }
        if (stop - start) / step + 1 > MAX_GRID_POINTS {
            return Err(parse_error(format!("grid longer than {MAX_GRID_POINTS} points"), 0));
        }
        (start..=stop).step_by(step).collect()
    } else {
        let mut out = Vec::new();
        let mut at = 0;
        for p in text.split(',') {
            out.push(count(p, at)?);
            at += p.len() + 1;
            if out.len() > MAX_GRID_POINTS {
                return Err(parse_error(format!("grid longer than {MAX_GRID_POINTS} points"), at));
            }
        }
        if out.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_error("list must be strictly increasing", 0));
        }
        out
    };
    Ok(grid)
}

/// Parses a positive trial count; scientific notation such as `1e6` or
/// `2.5E5` is accepted when it denotes an integer.
pub fn parse_trials(text: &str) -> Result<u64> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    if let Ok(v) = t.parse::<u64>() {
        return if v > 0 { Ok(v) } else { Err(parse_error("trial count must be positive", lead)) };
    }
    if !t.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'+' | b'-')) {
        return Err(parse_error(format!("expected a trial count, got '{t}'"), lead));
    }
    let v: f64 = t.parse().map_err(|_| parse_error(format!("expected a trial count, got '{t}'"), lead))?;
    if !(v >= 1.0 && v.fract() == 0.0 && v <= 1e15) {
        return Err(parse_error("trial count must be a positive integer no larger than 1e15", lead));
    }
    Ok(v as u64)
}
