//! X1-Jacobi, X1-Laguerre and type-I Xm-Laguerre polynomials.
//!
//! The polynomials are defined through their relations to the classical
//! families rather than by orthogonalization:
//!
//! ```text
//! L̂_n^{(α)}(x)     = -(x+α+1) L_{n-1}^{(α)}(x) + L_{n-2}^{(α)}(x)
//! P̂_n^{(α,β)}(x)   = -½(x-b) P_{n-1}(x) + (b P_{n-1}(x) - P_{n-2}(x)) / (2n-2+α+β)
//! L_{m,n}^{I,α}(x) = L_m^{(α)}(-x) L_{n-m}^{(α-1)}(x) + L_{n-m-1}^{(α)}(x) L_m^{(α-1)}(-x)
//! ```
//!
//! with classical polynomials of degree -1 taken as 0. Zeros do not depend on
//! the overall scaling, so no further normalization is applied.

mod params;

pub use params::{derived_abc, JacobiParams, LaguerreParams, XmLaguerreParams};

use crate::classical::ClassicalFamily;
use crate::{Error, Result};

fn require_degree(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::domain(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// L̂_n^{(α)}(x), n ≥ 1, α > 0.
pub fn eval_x1_laguerre(n: usize, alpha: f64, x: f64) -> Result<f64> {
    require_degree(n, 1, "X1-Laguerre")?;
    Ok(LaguerreParams::new(alpha)?.eval(n, x))
}

/// P̂_n^{(α,β)}(x), n ≥ 1.
pub fn eval_x1_jacobi(n: usize, params: &JacobiParams, x: f64) -> Result<f64> {
    require_degree(n, 1, "X1-Jacobi")?;
    Ok(params.eval(n, x))
}

/// L_{m,n}^{I,α}(x), 1 ≤ m ≤ n, α > 0.
pub fn eval_xm_laguerre_i(m: usize, n: usize, alpha: f64, x: f64) -> Result<f64> {
    let p = XmLaguerreParams::new(m, alpha)?;
    require_degree(n, m, "type-I Xm-Laguerre")?;
    Ok(p.eval(n, x))
}

/// f_n = n(n+α+β) / ((2n-1+α+β)(2n+α+β)).
pub fn coeff_f(n: usize, alpha: f64, beta: f64) -> f64 {
    let n = n as f64;
    let s = alpha + beta;
    n * (n + s) / ((2.0 * n - 1.0 + s) * (2.0 * n + s))
}

/// g_n = (n+β)(n+α) / ((2n+2+α+β)(2n+α+β)).
pub fn coeff_g(n: usize, alpha: f64, beta: f64) -> f64 {
    let n = n as f64;
    let s = alpha + beta;
    (n + beta) * (n + alpha) / ((2.0 * n + 2.0 + s) * (2.0 * n + s))
}

/// h_n = (n-1+β)(n-1+α) / ((2n+α+β)(2n+1+α+β)).
pub fn coeff_h(n: usize, alpha: f64, beta: f64) -> f64 {
    let n = n as f64;
    let s = alpha + beta;
    (n - 1.0 + beta) * (n - 1.0 + alpha) / ((2.0 * n + s) * (2.0 * n + 1.0 + s))
}

/// γ_n = (2n+α+β) / (2n-2+α+β); γ_n·b bounds the exceptional X1-Jacobi zero.
pub fn gamma_n(n: usize, alpha: f64, beta: f64) -> f64 {
    let n = n as f64;
    let s = alpha + beta;
    (2.0 * n + s) / (2.0 * n - 2.0 + s)
}

/// Normalized residual of
///
/// ```text
/// -¼(x-b)² P_n(x) = f_{n+1} P̂_{n+2}(x) - 2b g_n P̂_{n+1}(x) + h_n P̂_n(x)
/// ```
///
/// divided by the largest of the three right-hand terms at x.
pub fn jacobi_three_term_residual(n: usize, params: &JacobiParams, x: f64) -> Result<f64> {
    require_degree(n, 1, "the X1-Jacobi three-term identity")?;
    let (alpha, beta, b) = (params.alpha(), params.beta(), params.b());
    let lhs = -0.25 * (x - b).powi(2) * params.classical().eval(n, x);
    let terms = [
        coeff_f(n + 1, alpha, beta) * params.eval(n + 2, x),
        -2.0 * b * coeff_g(n, alpha, beta) * params.eval(n + 1, x),
        coeff_h(n, alpha, beta) * params.eval(n, x),
    ];
    let rhs: f64 = terms.iter().sum();
    let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    let diff = (lhs - rhs).abs();
    Ok(if scale > 0.0 { diff / scale } else { diff })
}

pub(crate) fn laguerre(alpha: f64) -> ClassicalFamily {
    ClassicalFamily::Laguerre { alpha }
}
