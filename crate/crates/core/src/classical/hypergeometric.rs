//! Terminating Gauss hypergeometric series.

use super::gamma::pochhammer;
use crate::{Error, Result};

/// ₂F₁(-n, b; c; z) as the finite sum of its n + 1 terms.
///
/// Fails when (c)_k vanishes before the series terminates, i.e. when c is one
/// of 0, -1, ..., -(n-1).
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let denom = (c + kf) * (kf + 1.0);
        if c + kf == 0.0 {
            return Err(Error::domain(format!(
                "2F1 lower parameter c = {c} hits a pole at term {}",
                k + 1
            )));
        }
        term *= (kf - n as f64) * (b + kf) / denom * z;
        sum += term;
    }
    Ok(sum)
}

/// P_n^{(α,β)}(y) = (α+1)_n / n! · ₂F₁(-n, n+α+β+1; α+1; (1-y)/2).
pub fn jacobi_via_hypergeometric(n: usize, alpha: f64, beta: f64, y: f64) -> Result<f64> {
    let prefactor = pochhammer(alpha + 1.0, n) / pochhammer(1.0, n);
    Ok(prefactor * hyp2f1_terminating(n, n as f64 + alpha + beta + 1.0, alpha + 1.0, 0.5 * (1.0 - y))?)
}
