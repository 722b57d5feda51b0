//! Sign-change bisection.

/// Stopping rule for [`bisect`].
#[derive(Debug, Clone, Copy)]
pub struct BisectOptions {
    pub max_iter: usize,
    pub x_tol: f64,
}

impl Default for BisectOptions {
    fn default() -> Self {
        Self { max_iter: 200, x_tol: 1e-12 }
    }
}

/// Outcome of a bracketed root search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bracketed {
    Root(f64),
    /// `f` has the same sign (or is NaN) at both ends.
    NoSignChange,
}

/// Sign of `v` as -1, 0 or 1; `±∞` keep their sign. NaN maps to `None`.
fn sign(v: f64) -> Option<i8> {
    if v.is_nan() {
        None
    } else if v > 0.0 {
        Some(1)
    } else if v < 0.0 {
        Some(-1)
    } else {
        Some(0)
    }
}

/// Finds a root of `f` in `[lo, hi]` by bisection. Only the sign of `f` is
/// used, so infinite values at or near the ends are fine.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, opts: BisectOptions) -> Bracketed {
    let (Some(s_lo), Some(s_hi)) = (sign(f(lo)), sign(f(hi))) else {
        return Bracketed::NoSignChange;
    };
    if s_lo == 0 {
        return Bracketed::Root(lo);
    }
    if s_hi == 0 {
        return Bracketed::Root(hi);
    }
    if s_lo == s_hi {
        return Bracketed::NoSignChange;
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..opts.max_iter {
        let mid = 0.5 * (a + b);
        if (b - a).abs() <= opts.x_tol || mid <= a.min(b) || mid >= a.max(b) {
            break;
        }
        match sign(f(mid)) {
            Some(0) => return Bracketed::Root(mid),
            Some(s) if s == s_lo => a = mid,
            Some(_) => b = mid,
            // Treat an undefined midpoint as belonging to the left piece.
            None => a = mid,
        }
    }
    Bracketed::Root(0.5 * (a + b))
}
