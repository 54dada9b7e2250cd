//! Zeros of the exceptional polynomials, split into regular and exceptional.
//!
//! Roots are isolated by scanning for sign changes on intervals that the
//! theory guarantees to contain them, then refined by bisection and Newton.
//! Evaluation always goes through the classical recurrences; the monomial
//! coefficients of these polynomials are far too ill-conditioned for a
//! companion-matrix approach.

mod bracket;

pub use bracket::{bracket_scan, refine_root, Bracket};

use serde::{Deserialize, Serialize};

use crate::classical::zeros_classical;
use crate::xop::{JacobiParams, LaguerreParams, XmLaguerreParams};
use crate::{Error, Result, DEFAULT_TOL, MAX_RECOMMENDED_DEGREE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XopFamily {
    X1Laguerre,
    X1Jacobi,
    XmLaguerreI,
}

impl std::fmt::Display for XopFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            XopFamily::X1Laguerre => "x1-laguerre",
            XopFamily::X1Jacobi => "x1-jacobi",
            XopFamily::XmLaguerreI => "xm-laguerre-i",
        })
    }
}

/// Zeros of one exceptional polynomial.
///
/// `regular` holds the zeros inside the orthogonality interval and
/// `exceptional` the rest, both increasing. `residuals[i]` is |p(r)| for the
/// i-th entry of [`all_zeros`](Self::all_zeros).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    pub family: XopFamily,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Degree.
    pub n: usize,
    pub alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    pub regular: Vec<f64>,
    pub exceptional: Vec<f64>,
    pub residuals: Vec<f64>,
    pub tolerance: f64,
    /// Near-coincident roots and similar diagnostics.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ZeroSet {
    /// Regular and exceptional zeros merged in increasing order.
    pub fn all_zeros(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.regular.iter().chain(&self.exceptional).copied().collect();
        all.sort_by(f64::total_cmp);
        all
    }

    /// Exceptional zeros in decreasing order (z_{m,n,1} > z_{m,n,2} > ...).
    pub fn exceptional_decreasing(&self) -> Vec<f64> {
        self.exceptional.iter().rev().copied().collect()
    }
}

/// Scans `[lo, hi]` for exactly `count` roots of `f` and refines each.
pub fn find_roots_in<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, count: usize, tol: f64) -> Result<Vec<f64>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    bracket_scan(&f, lo, hi, count)?
        .into_iter()
        .map(|br| refine_root(&f, br, tol))
        .collect()
}

/// Zero finder with a fixed absolute refinement tolerance.
#[derive(Debug, Clone, Copy)]
pub struct ZeroFinder {
    tol: f64,
}

impl Default for ZeroFinder {
    fn default() -> Self {
        ZeroFinder { tol: DEFAULT_TOL }
    }
}

impl ZeroFinder {
    pub fn new(tol: f64) -> Result<Self> {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(Error::param(format!("tolerance must be positive, got {tol}")));
        }
        Ok(ZeroFinder { tol })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// n - 1 regular zeros in (0, ∞) and one exceptional zero in [-α-1, -α).
    pub fn x1_laguerre(&self, n: usize, params: &LaguerreParams) -> Result<ZeroSet> {
        check_degree(n, 1)?;
        let alpha = params.alpha();
        let f = |x: f64| params.eval(n, x);
        let exceptional = if n == 1 {
            vec![-(alpha + 1.0)]
        } else {
            find_roots_in(f, -alpha - 1.0, -alpha, 1, self.tol)?
        };
        let regular = if n >= 2 {
            let upper = largest_zero(params.classical(), n - 1)? + 4.0 * (n as f64 + alpha);
            find_roots_in(f, 0.0, upper, n - 1, self.tol)?
        } else {
            Vec::new()
        };
        Ok(self.assemble(XopFamily::X1Laguerre, None, n, alpha, None, regular, exceptional, f))
    }

    /// n - 1 regular zeros in (-1, 1) and one exceptional zero, searched
    /// between b and γ_n·b; it equals c at n = 1.
    pub fn x1_jacobi(&self, n: usize, params: &JacobiParams) -> Result<ZeroSet> {
        check_degree(n, 1)?;
        let f = |x: f64| params.eval(n, x);
        let exceptional = if n == 1 {
            vec![params.c()]
        } else {
            let (lo, hi) = exceptional_jacobi_interval(n, params);
            find_roots_in(f, lo, hi, 1, self.tol)?
        };
        let regular = find_roots_in(f, -1.0, 1.0, n - 1, self.tol)?;
        Ok(self.assemble(
            XopFamily::X1Jacobi,
            None,
            n,
            params.alpha(),
            Some(params.beta()),
            regular,
            exceptional,
            f,
        ))
    }

    /// m exceptional zeros in (-∞, 0) and n - m regular zeros in (0, ∞),
    /// for n ≥ m + 1.
    pub fn xm_laguerre(&self, n: usize, params: &XmLaguerreParams) -> Result<ZeroSet> {
        let m = params.m();
        if n < m + 1 {
            return Err(Error::domain(format!(
                "type-I Xm-Laguerre zeros need n >= m + 1 (got m = {m}, n = {n})"
            )));
        }
        check_degree(n, m + 1)?;
        let alpha = params.alpha();
        let f = |x: f64| params.eval(n, x);
        let reach = 2.0 * largest_zero(params.eta_family(), m)? + 2.0 * m as f64 + alpha + 4.0;
        let exceptional = find_roots_in(f, -reach, 0.0, m, self.tol)?;
        let upper = largest_zero(params.eta_family(), n - m)? + 4.0 * (n as f64 + alpha);
        let regular = find_roots_in(f, 0.0, upper, n - m, self.tol)?;
        Ok(self.assemble(XopFamily::XmLaguerreI, Some(m), n, alpha, None, regular, exceptional, f))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble<F: Fn(f64) -> f64>(
        &self,
        family: XopFamily,
        m: Option<usize>,
        n: usize,
        alpha: f64,
        beta: Option<f64>,
        regular: Vec<f64>,
        exceptional: Vec<f64>,
        f: F,
    ) -> ZeroSet {
        let mut set = ZeroSet {
            family,
            m,
            n,
            alpha,
            beta,
            regular,
            exceptional,
            residuals: Vec::new(),
            tolerance: self.tol,
            warnings: Vec::new(),
        };
        let all = set.all_zeros();
        set.residuals = all.iter().map(|&r| f(r).abs()).collect();
        for pair in all.windows(2) {
            if pair[1] - pair[0] < 100.0 * self.tol {
                set.warnings.push(format!(
                    "near-degenerate zeros {} and {} (gap {:e})",
                    pair[0],
                    pair[1],
                    pair[1] - pair[0]
                ));
            }
        }
        set
    }
}

fn check_degree(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::domain(format!("degree must be at least {min}, got {n}")));
    }
    if n > MAX_RECOMMENDED_DEGREE {
        log::warn!("degree {n} exceeds {MAX_RECOMMENDED_DEGREE}; recurrence values may lose accuracy");
    }
    Ok(())
}

fn largest_zero(family: crate::classical::ClassicalFamily, n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    Ok(*zeros_classical(family, n)?.last().expect("n >= 1 zeros"))
}

/// Search interval for the exceptional X1-Jacobi zero, n ≥ 2: between b
/// and γ_n·b. Proven for α, β > 0; for negative parameters the zero also
/// lies there (on the far side of b from c), which the tests confirm.
fn exceptional_jacobi_interval(n: usize, params: &JacobiParams) -> (f64, f64) {
    let b = params.b();
    let g = params.gamma_n(n) * b;
    (b.min(g), b.max(g))
}

/// Zeros of L̂_n^{(α)} with the default tolerance.
pub fn find_zeros_x1_laguerre(n: usize, alpha: f64) -> Result<ZeroSet> {
    ZeroFinder::default().x1_laguerre(n, &LaguerreParams::new(alpha)?)
}

/// Zeros of P̂_n^{(α,β)} with the default tolerance.
pub fn find_zeros_x1_jacobi(n: usize, params: &JacobiParams) -> Result<ZeroSet> {
    ZeroFinder::default().x1_jacobi(n, params)
}

/// Zeros of L_{m,n}^{I,α} with the default tolerance.
pub fn find_zeros_xm_laguerre(m: usize, n: usize, alpha: f64) -> Result<ZeroSet> {
    ZeroFinder::default().xm_laguerre(n, &XmLaguerreParams::new(m, alpha)?)
}
