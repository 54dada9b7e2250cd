//! Coefficients of the Sturm-Liouville normal form of the X1-Laguerre
//! differential equation.
//!
//! With u_n(x) = e^{-x/2} x^{(α+1)/2} L̂_n^{(α)}(x) / (x+α) the equation
//! becomes u'' + λ_{n,4}(x) u = 0 where
//!
//! ```text
//! λ_{n,4}(x) = (-x⁴ + A₃x³ + A₂x² + A₁x + A₀) / (4x²(x+α)²)
//! ∂λ/∂α      = ( x⁴ + B₃x³ + B₂x² + B₁x + B₀) / (2x²(x+α)³)
//! ```

use serde::Serialize;

use crate::dd::Dd;
use crate::{Error, Result};

/// Numerator coefficients of λ_{n,4} and of its α-derivative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SturmLiouvilleData {
    pub n: usize,
    pub alpha: f64,
    /// [A₀, A₁, A₂, A₃]
    pub a: [f64; 4],
    /// [B₀, B₁, B₂, B₃]
    pub b: [f64; 4],
}

impl SturmLiouvilleData {
    pub fn new(n: usize, alpha: f64) -> Self {
        let [a0, a1, a2, a3] = a_coeffs(n, alpha);
        SturmLiouvilleData {
            n,
            alpha,
            a: [a0.to_f64(), a1.to_f64(), a2.to_f64(), a3.to_f64()],
            b: b_coeffs(alpha),
        }
    }
}

fn a_coeffs(n: usize, alpha: f64) -> [Dd; 4] {
    let al = Dd::new(alpha);
    let k = Dd::new(2.0 * n as f64 - 1.0);
    let a3 = Dd::new(2.0) * k;
    let a2 = Dd::new(2.0) * al * al + Dd::new(4.0) * k * al - Dd::new(3.0);
    let a1 = Dd::new(2.0) * al * (k * al + Dd::new(3.0));
    let a0 = al * al * (Dd::new(1.0) - al * al);
    [a0, a1, a2, a3]
}

fn b_coeffs(alpha: f64) -> [f64; 4] {
    [
        -alpha.powi(4),
        -2.0 * alpha * (1.0 + alpha * alpha),
        6.0,
        2.0 * alpha,
    ]
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("λ_(n,4) is evaluated for x > 0, got {x}")));
    }
    Ok(())
}

/// λ_{n,4}(x) for x > 0.
///
/// Evaluated in double-double and rounded once: the numerator cancels
/// heavily as x → 0 and differences λ_{n+1,4} - λ_{n,4} would otherwise
/// inherit several ulps of noise.
pub fn lambda_n4(n: usize, alpha: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    let [a0, a1, a2, a3] = a_coeffs(n, alpha);
    let xd = Dd::new(x);
    let num = (((-xd + a3) * xd + a2) * xd + a1) * xd + a0;
    let shifted = Dd::new(x) + Dd::new(alpha);
    let den = Dd::new(4.0) * xd * xd * shifted * shifted;
    Ok((num / den).to_f64())
}

/// ∂λ_{n,4}/∂α in closed form (independent of n).
pub fn dlambda_dalpha(_n: usize, alpha: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(alpha > 0.0) {
        return Err(Error::domain(format!("∂λ/∂α is used for α > 0, got {alpha}")));
    }
    let [b0, b1, b2, b3] = b_coeffs(alpha);
    let num = (((x + b3) * x + b2) * x + b1) * x + b0;
    Ok(num / (2.0 * x * x * (x + alpha).powi(3)))
}

/// p_{n,4}(x; α): the numerator of ∂λ/∂α, with a single positive zero for
/// every α > 0.
pub fn p_n4(alpha: f64, x: f64) -> f64 {
    let [b0, b1, b2, b3] = b_coeffs(alpha);
    (((x + b3) * x + b2) * x + b1) * x + b0
}

/// Sign changes in `seq`, zeros skipped.
pub fn descartes_sign_changes(seq: &[f64]) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for &v in seq {
        if v == 0.0 {
            continue;
        }
        let neg = v < 0.0;
        if let Some(prev) = last {
            if prev != neg {
                changes += 1;
            }
        }
        last = Some(neg);
    }
    changes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_formulas_at_small_integers() {
        // (n, α) = (2, 1): A₃ = 6, A₂ = 2 + 12 - 3 = 11, A₁ = 2(3 + 3) = 12, A₀ = 0
        let d = SturmLiouvilleData::new(2, 1.0);
        assert_eq!(d.a, [0.0, 12.0, 11.0, 6.0]);
        assert_eq!(d.b, [-1.0, -4.0, 6.0, 2.0]);
    }

    #[test]
    fn rational_spot_value() {
        // (n, α, x) = (2, 1, 1): (-1 + 6 + 11 + 12 + 0) / (4·1·4) = 28/16
        assert_eq!(lambda_n4(2, 1.0, 1.0).unwrap(), 1.75);
        // (n, α, x) = (1, 1, 1): A = (0, 8, 3, 2): (-1 + 2 + 3 + 8) / 16 = 12/16
        assert_eq!(lambda_n4(1, 1.0, 1.0).unwrap(), 0.75);
    }

    #[test]
    fn consecutive_degrees_differ_by_reciprocal() {
        let d = lambda_n4(4, 1.0, 2.0).unwrap() - lambda_n4(3, 1.0, 2.0).unwrap();
        assert!((d - 0.5).abs() < 1e-15);
    }

    #[test]
    fn alpha_derivative_against_finite_difference() {
        for &(n, alpha, x) in &[(3usize, 1.0, 2.0), (5, 0.5, 0.3)] {
            let h = 1e-5;
            let fd = (lambda_n4(n, alpha + h, x).unwrap() - lambda_n4(n, alpha - h, x).unwrap()) / (2.0 * h);
            let cf = dlambda_dalpha(n, alpha, x).unwrap();
            assert!((fd - cf).abs() <= 1e-6 * cf.abs(), "{fd} vs {cf}");
        }
    }

    #[test]
    fn sign_changes() {
        assert_eq!(descartes_sign_changes(&[-1.0, -4.0, 6.0, 2.0]), 1);
        assert_eq!(descartes_sign_changes(&[1.0, 1.0, 1.0]), 0);
        assert_eq!(descartes_sign_changes(&[1.0, -1.0, 1.0, -1.0]), 3);
        assert_eq!(descartes_sign_changes(&[1.0, 0.0, -1.0, 0.0]), 1);
        assert_eq!(descartes_sign_changes(&[]), 0);
    }

    #[test]
    fn domain() {
        assert!(lambda_n4(1, 1.0, 0.0).is_err());
        assert!(lambda_n4(1, 1.0, -2.0).is_err());
        assert!(dlambda_dalpha(1, 0.0, 1.0).is_err());
    }
}
