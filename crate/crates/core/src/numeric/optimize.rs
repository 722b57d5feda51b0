//! One-dimensional minimization: seeded scan, golden section, parabolic step.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

/// Golden-section search for a minimum of `f` on `[a, b]`, then one
/// parabolic interpolation step through the final three points. The
/// parabolic candidate is kept only if it improves the objective.
pub fn golden_section<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, x_tol: f64) -> Minimum {
    let (mut a, mut b) = (a.min(b), a.max(b));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a) > x_tol.max(4.0 * f64::EPSILON * a.abs().max(b.abs())) {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let mut best = if fc <= fd { Minimum { x: c, value: fc } } else { Minimum { x: d, value: fd } };

    let (x0, x1, x2) = (a, 0.5 * (a + b), b);
    let (f0, f1, f2) = (f(x0), f(x1), f(x2));
    for (x, v) in [(x0, f0), (x1, f1), (x2, f2)] {
        if v < best.value {
            best = Minimum { x, value: v };
        }
    }
    let denom = (x1 - x0) * (f1 - f2) - (x1 - x2) * (f1 - f0);
    if denom != 0.0 && denom.is_finite() {
        let num = (x1 - x0).powi(2) * (f1 - f2) - (x1 - x2).powi(2) * (f1 - f0);
        let xp = x1 - 0.5 * num / denom;
        if xp > x0 && xp < x2 {
            let vp = f(xp);
            if vp < best.value {
                best = Minimum { x: xp, value: vp };
            }
        }
    }
    best
}

/// Scans `seeds` evenly spaced points over `[a, b]`, then refines by golden
/// section inside the neighbourhood of the best seed. Does not assume
/// convexity beyond that neighbourhood.
pub fn seeded_minimize<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, seeds: usize, x_tol: f64) -> Minimum {
    let seeds = seeds.max(3);
    let step = (b - a) / (seeds - 1) as f64;
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for i in 0..seeds {
        let v = f(a + step * i as f64);
        if v < best_v || (best_v.is_nan() && !v.is_nan()) {
            best_v = v;
            best_i = i;
        }
    }
    let lo = a + step * best_i.saturating_sub(1) as f64;
    let hi = (a + step * (best_i + 1) as f64).min(b);
    let refined = golden_section(&mut f, lo, hi, x_tol);
    if refined.value <= best_v {
        refined
    } else {
        Minimum { x: a + step * best_i as f64, value: best_v }
    }
}

/// Maximizes a concave function on `(lo, hi)` where either end may be
/// infinite. Starting at `start`, the bracket is grown geometrically in the
/// uphill direction before golden section narrows it.
pub fn maximize_concave<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, start: f64, x_tol: f64) -> Minimum {
    let mut neg = |x: f64| {
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            -v
        }
    };
    // Steps that would leave the domain are replaced by halving the gap.
    let inside = |from: f64, to: f64| {
        if to >= hi {
            from + 0.5 * (hi - from)
        } else if to <= lo {
            from + 0.5 * (lo - from)
        } else {
            to
        }
    };
    let f0 = neg(start);
    let h = 1e-3 * start.abs().max(1.0);
    let probe = inside(start, start + h);
    let rightward = neg(probe) < f0;
    let mut step = if rightward { h } else { -h };
    // Concavity: the maximizer lies beyond `prev` in the search direction.
    let mut prev = if rightward { start } else { probe };
    let mut inner = start;
    let mut inner_v = f0;
    let outer = loop {
        let cand = inside(inner, inner + step);
        let v = neg(cand);
        if v >= inner_v || (cand - inner).abs() < x_tol || !step.is_finite() {
            break cand;
        }
        prev = inner;
        inner = cand;
        inner_v = v;
        step *= 2.0;
    };
    let m = golden_section(&mut neg, prev.min(outer), prev.max(outer), x_tol);
    Minimum { x: m.x, value: -m.value }
}
