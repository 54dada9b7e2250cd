//! Sign-change scanning and bracketed root refinement.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Interval with a sign change of the scanned function (or a degenerate
/// interval `lo == hi` sitting on an exact zero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

const INITIAL_POINTS_PER_ROOT: usize = 64;
const MAX_POINTS_PER_ROOT: usize = 1 << 14;

/// Width below which [`refine_root`] switches from bisection to Newton.
const NEWTON_SWITCH_WIDTH: f64 = 1e-6;
const MAX_REFINE_STEPS: usize = 400;

fn sign_changes<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, intervals: usize) -> Result<Vec<Bracket>> {
    let mut found = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    let step = (hi - lo) / intervals as f64;
    for i in 0..=intervals {
        let x = if i == intervals { hi } else { lo + step * i as f64 };
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::Numeric(format!("non-finite value {fx} at x = {x} while scanning")));
        }
        if fx == 0.0 {
            found.push(Bracket { lo: x, hi: x });
            last = None;
            continue;
        }
        if let Some((xp, fp)) = last {
            if (fp < 0.0) != (fx < 0.0) {
                found.push(Bracket { lo: xp, hi: x });
            }
        }
        last = Some((x, fx));
    }
    Ok(found)
}

/// Isolates exactly `expected` sign changes of `f` on `[lo, hi]`.
///
/// Uniform scan starting at 64 subintervals per expected root, doubled up to
/// 2¹⁴ per root. More sign changes than expected, or too few at the finest
/// grid, is an [`Error::Isolation`] carrying what was found.
pub fn bracket_scan<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, expected: usize) -> Result<Vec<Bracket>> {
    if !(lo < hi) {
        return Err(Error::domain(format!("scan interval [{lo}, {hi}] is empty")));
    }
    let per_root = expected.max(1);
    let mut intervals = INITIAL_POINTS_PER_ROOT * per_root;
    loop {
        let found = sign_changes(&f, lo, hi, intervals)?;
        if found.len() == expected {
            return Ok(found);
        }
        if found.len() > expected || intervals >= MAX_POINTS_PER_ROOT * per_root {
            return Err(Error::Isolation {
                expected,
                lo,
                hi,
                points: intervals + 1,
                found,
            });
        }
        intervals *= 2;
    }
}

/// Refines a bracketed root to absolute tolerance `tol`.
///
/// Bisection down to width 1e-6, then Newton steps with a central-difference
/// slope; any Newton iterate that leaves the current bracket is replaced by
/// the bisection midpoint. The tolerance is floored at a few ulps of the root.
pub fn refine_root<F: Fn(f64) -> f64>(f: F, bracket: Bracket, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    if a == b {
        return Ok(a);
    }
    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Numeric(format!("non-finite value {v} at x = {x} while refining")))
        }
    };
    let mut fa = eval(a)?;
    let fb = eval(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if (fa < 0.0) == (fb < 0.0) {
        return Err(Error::domain(format!("no sign change on [{a}, {b}]")));
    }
    let eff_tol = |x: f64| tol.max(4.0 * f64::EPSILON * x.abs());

    let shrink = |a: &mut f64, b: &mut f64, fa: &mut f64, x: f64, fx: f64| {
        if (fx < 0.0) == (*fa < 0.0) {
            *a = x;
            *fa = fx;
        } else {
            *b = x;
        }
    };

    let mut steps = 0;
    while b - a > NEWTON_SWITCH_WIDTH.max(eff_tol(a)) && steps < MAX_REFINE_STEPS {
        let mid = 0.5 * (a + b);
        let fm = eval(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        shrink(&mut a, &mut b, &mut fa, mid, fm);
        steps += 1;
    }

    let mut x = 0.5 * (a + b);
    while steps < MAX_REFINE_STEPS {
        steps += 1;
        let fx = eval(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        shrink(&mut a, &mut b, &mut fa, x, fx);
        if b - a <= eff_tol(x) {
            return Ok(0.5 * (a + b));
        }
        let h = 1e-7 * x.abs().max(1e-3);
        let slope = (eval(x + h)? - eval(x - h)?) / (2.0 * h);
        let mut next = x - fx / slope;
        if !next.is_finite() || next <= a || next >= b {
            next = 0.5 * (a + b);
        }
        if (next - x).abs() <= eff_tol(x) {
            return Ok(next);
        }
        x = next;
    }
    Ok(0.5 * (a + b))
}
