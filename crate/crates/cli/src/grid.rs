//! Clip-point grids for `sweep-tau`.

/// Largest number of clip points in one sweep.
pub const MAX_TAU_POINTS: usize = 100_000;

/// Parses `start:stop:step` (stop included when it lies on the grid, up to
/// rounding) or a comma-separated list of strictly increasing values.
pub fn parse_tau_grid(text: &str) -> Result<Vec<f64>, String> {
    let num = |s: &str| -> Result<f64, String> {
        let v: f64 = s.trim().parse().map_err(|_| format!("expected a number, got '{}'", s.trim()))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("expected a finite number, got '{}'", s.trim()))
        }
    };
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err("expected start:stop:step".into());
        };
        let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
        if !(step > 0.0) || stop < start {
            return Err("need step > 0 and stop >= start".into());
        }
        let span = (stop - start) / step;
        if span >= MAX_TAU_POINTS as f64 {
            return Err(format!("grid longer than {MAX_TAU_POINTS} points"));
        }
        let n = (span + 1e-9).floor() as usize + 1;
        Ok((0..n).map(|i| start + i as f64 * step).collect())
    } else {
        let out = text.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
        if out.len() > MAX_TAU_POINTS {
            return Err(format!("grid longer than {MAX_TAU_POINTS} points"));
        }
        if out.windows(2).any(|w| w[0] >= w[1]) {
            return Err("list must be strictly increasing".into());
        }
        Ok(out)
    }
}
