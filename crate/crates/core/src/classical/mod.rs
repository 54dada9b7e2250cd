//! Classical Jacobi, Laguerre and Hermite polynomials.
//!
//! Everything uses the Szegő standardization: P_n^{(α,β)}(1) = binom(n+α, n),
//! L_n^{(α)}(0) = binom(n+α, n) and H_n with leading coefficient 2^n.
//! Values come from the forward three-term recurrence; zeros are the
//! eigenvalues of the symmetric Jacobi matrix of the monic recurrence.

mod gamma;
mod hypergeometric;
mod quadrature;
mod tridiagonal;

pub use gamma::{log_gamma, pochhammer};
pub use hypergeometric::{hyp2f1_terminating, jacobi_via_hypergeometric};
pub use quadrature::{gauss_rule, QuadratureRule};
pub use tridiagonal::SymTridiagonal;

pub(crate) use gamma::{binomial_shifted, ln_beta, ln_gamma_pos};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Bisection width for the Jacobi-matrix eigenvalues.
const EIGEN_ABS_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum ClassicalFamily {
    Jacobi { alpha: f64, beta: f64 },
    Laguerre { alpha: f64 },
    Hermite,
}

impl ClassicalFamily {
    pub fn jacobi(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::param(format!(
                "Jacobi needs α, β > -1, got α = {alpha}, β = {beta}"
            )));
        }
        Ok(ClassicalFamily::Jacobi { alpha, beta })
    }

    pub fn laguerre(alpha: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::param(format!("Laguerre needs α > -1, got {alpha}")));
        }
        Ok(ClassicalFamily::Laguerre { alpha })
    }

    pub fn hermite() -> Self {
        ClassicalFamily::Hermite
    }

    /// Re-checks the parameter domain (useful for values built by hand or
    /// deserialized).
    pub fn validate(&self) -> Result<()> {
        match *self {
            ClassicalFamily::Jacobi { alpha, beta } => Self::jacobi(alpha, beta).map(drop),
            ClassicalFamily::Laguerre { alpha } => Self::laguerre(alpha).map(drop),
            ClassicalFamily::Hermite => Ok(()),
        }
    }

    /// Degree-n polynomial at x.
    pub fn eval(&self, n: usize, x: f64) -> f64 {
        self.eval_pair(n, x).1
    }

    /// Same as [`eval`](Self::eval) but with the degree -1 polynomial
    /// defined as identically zero, which lets the exceptional-polynomial
    /// relations run from their first degree.
    pub fn eval_signed(&self, degree: isize, x: f64) -> f64 {
        if degree < 0 {
            0.0
        } else {
            self.eval(degree as usize, x)
        }
    }

    /// (p_{n-1}(x), p_n(x)), with p_{-1} = 0.
    pub fn eval_pair(&self, n: usize, x: f64) -> (f64, f64) {
        let mut prev = 0.0;
        let mut cur = 1.0;
        if n == 0 {
            return (prev, cur);
        }
        match *self {
            ClassicalFamily::Jacobi { alpha, beta } => {
                let ab = alpha + beta;
                prev = cur;
                cur = 0.5 * ((ab + 2.0) * x + (alpha - beta));
                for k in 1..n {
                    let k = k as f64;
                    let s = 2.0 * k + ab;
                    let a1 = 2.0 * (k + 1.0) * (k + ab + 1.0) * s;
                    let a2 = (s + 1.0) * (alpha * alpha - beta * beta);
                    let a3 = s * (s + 1.0) * (s + 2.0);
                    let a4 = 2.0 * (k + alpha) * (k + beta) * (s + 2.0);
                    let next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
                    prev = cur;
                    cur = next;
                }
            }
            ClassicalFamily::Laguerre { alpha } => {
                prev = cur;
                cur = 1.0 + alpha - x;
                for k in 1..n {
                    let k = k as f64;
                    let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
                    prev = cur;
                    cur = next;
                }
            }
            ClassicalFamily::Hermite => {
                prev = cur;
                cur = 2.0 * x;
                for k in 1..n {
                    let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
                    prev = cur;
                    cur = next;
                }
            }
        }
        (prev, cur)
    }

    /// Value and first derivative of the degree-n polynomial at x.
    pub fn eval_with_derivative(&self, n: usize, x: f64) -> (f64, f64) {
        let value = self.eval(n, x);
        if n == 0 {
            return (value, 0.0);
        }
        let deriv = match *self {
            ClassicalFamily::Jacobi { alpha, beta } => {
                let shifted = ClassicalFamily::Jacobi {
                    alpha: alpha + 1.0,
                    beta: beta + 1.0,
                };
                0.5 * (n as f64 + alpha + beta + 1.0) * shifted.eval(n - 1, x)
            }
            ClassicalFamily::Laguerre { alpha } => {
                -ClassicalFamily::Laguerre { alpha: alpha + 1.0 }.eval(n - 1, x)
            }
            ClassicalFamily::Hermite => 2.0 * n as f64 * self.eval(n - 1, x),
        };
        (value, deriv)
    }

    /// Diagonal and off-diagonal of the Jacobi matrix of order n.
    pub fn jacobi_matrix(&self, n: usize) -> SymTridiagonal {
        let mut diag = Vec::with_capacity(n);
        let mut off = Vec::with_capacity(n.saturating_sub(1));
        match *self {
            ClassicalFamily::Jacobi { alpha, beta } => {
                let ab = alpha + beta;
                for k in 0..n {
                    let kf = k as f64;
                    let s = 2.0 * kf + ab;
                    diag.push(if k == 0 {
                        (beta - alpha) / (ab + 2.0)
                    } else {
                        (beta * beta - alpha * alpha) / (s * (s + 2.0))
                    });
                    if k >= 1 {
                        // (k + α + β)/(2k + α + β - 1) is 1 at k = 1; keep it
                        // out of the formula so α + β = -1 does not give 0/0
                        let b2 = if k == 1 {
                            4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0).powi(2) * (ab + 3.0))
                        } else {
                            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab)
                                / (s * s * (s + 1.0) * (s - 1.0))
                        };
                        off.push(b2.sqrt());
                    }
                }
            }
            ClassicalFamily::Laguerre { alpha } => {
                for k in 0..n {
                    let kf = k as f64;
                    diag.push(2.0 * kf + alpha + 1.0);
                    if k >= 1 {
                        off.push((kf * (kf + alpha)).sqrt());
                    }
                }
            }
            ClassicalFamily::Hermite => {
                for k in 0..n {
                    diag.push(0.0);
                    if k >= 1 {
                        off.push((k as f64 / 2.0).sqrt());
                    }
                }
            }
        }
        SymTridiagonal::new(diag, off)
    }

    /// ∫ w(x) dx over the orthogonality interval.
    pub fn moment0(&self) -> f64 {
        match *self {
            ClassicalFamily::Jacobi { alpha, beta } => {
                ((alpha + beta + 1.0) * std::f64::consts::LN_2 + ln_beta(alpha + 1.0, beta + 1.0)).exp()
            }
            ClassicalFamily::Laguerre { alpha } => ln_gamma_pos(alpha + 1.0).exp(),
            ClassicalFamily::Hermite => std::f64::consts::PI.sqrt(),
        }
    }
}

/// Degree-n classical polynomial at x.
pub fn eval_classical(family: ClassicalFamily, n: usize, x: f64) -> Result<f64> {
    family.validate()?;
    Ok(family.eval(n, x))
}

/// P_n^{(α,β)}(1) = binom(n + α, n); independent of β.
pub fn jacobi_at_one(n: usize, alpha: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(Error::param(format!("Jacobi needs α > -1, got {alpha}")));
    }
    Ok(binomial_shifted(n, alpha))
}

/// All n zeros of the degree-n classical polynomial, increasing.
///
/// Bisection on the Jacobi matrix followed by one Newton step on the
/// recurrence, kept only when it does not increase |p|.
pub fn zeros_classical(family: ClassicalFamily, n: usize) -> Result<Vec<f64>> {
    family.validate()?;
    if n == 0 {
        return Err(Error::domain("zeros_classical needs degree n >= 1"));
    }
    let mut zeros = family.jacobi_matrix(n).eigenvalues(EIGEN_ABS_TOL);
    for z in zeros.iter_mut() {
        let (p, dp) = family.eval_with_derivative(n, *z);
        if p == 0.0 || dp == 0.0 || !p.is_finite() || !dp.is_finite() {
            continue;
        }
        let step = p / dp;
        let candidate = *z - step;
        if step.abs() <= 1e-9 * (1.0 + z.abs()) && family.eval(n, candidate).abs() <= p.abs() {
            *z = candidate;
        }
    }
    Ok(zeros)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_values() {
        let j = ClassicalFamily::jacobi(1.0, 3.0).unwrap();
        assert_eq!(j.eval(1, 0.0), -1.0);
        assert_eq!(ClassicalFamily::Hermite.eval(3, 1.0), -4.0);
        let l = ClassicalFamily::laguerre(1.0).unwrap();
        assert!((l.eval(2, 0.0) - 3.0).abs() < 1e-15);
        assert_eq!(l.eval(0, 7.0), 1.0);
        assert_eq!(l.eval_signed(-1, 7.0), 0.0);
    }

    #[test]
    fn parameter_domain() {
        assert!(ClassicalFamily::jacobi(-1.0, 0.0).is_err());
        assert!(ClassicalFamily::jacobi(0.0, -1.5).is_err());
        assert!(ClassicalFamily::laguerre(-1.0).is_err());
        assert!(eval_classical(ClassicalFamily::Laguerre { alpha: -2.0 }, 2, 0.0).is_err());
        assert!(jacobi_at_one(2, -1.0).is_err());
    }

    #[test]
    fn endpoint_binomials() {
        assert!((jacobi_at_one(2, 1.0).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(jacobi_at_one(0, 4.2).unwrap(), 1.0);
        // (1.5 · 2.5 · 3.5) / 3!
        assert!((jacobi_at_one(3, 0.5).unwrap() - 2.1875).abs() < 1e-15);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let fams = [
            ClassicalFamily::jacobi(0.5, 2.0).unwrap(),
            ClassicalFamily::laguerre(1.5).unwrap(),
            ClassicalFamily::Hermite,
        ];
        for fam in fams {
            for n in 1..8 {
                let x = 0.37;
                let h = 1e-6;
                let fd = (fam.eval(n, x + h) - fam.eval(n, x - h)) / (2.0 * h);
                let (_, d) = fam.eval_with_derivative(n, x);
                assert!((fd - d).abs() <= 1e-6 * (1.0 + d.abs()), "{fam:?} n={n}");
            }
        }
    }

    #[test]
    fn small_zero_sets() {
        let z = zeros_classical(ClassicalFamily::laguerre(0.0).unwrap(), 1).unwrap();
        assert!((z[0] - 1.0).abs() < 1e-14);
        let z = zeros_classical(ClassicalFamily::Hermite, 2).unwrap();
        assert!((z[0] + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
        assert!((z[1] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
        assert!(zeros_classical(ClassicalFamily::Hermite, 0).is_err());
    }

    #[test]
    fn laguerre_four_zeros() {
        let z = zeros_classical(ClassicalFamily::laguerre(0.0).unwrap(), 4).unwrap();
        let expected = [0.32254, 1.74576, 4.53662, 9.39507];
        for (a, b) in z.iter().zip(expected) {
            assert!((a - b).abs() < 5e-5, "{a} vs {b}");
        }
    }

    #[test]
    fn legendre_zeros_match_closed_form() {
        // P_3 = (5x³ - 3x)/2
        let z = zeros_classical(ClassicalFamily::jacobi(0.0, 0.0).unwrap(), 3).unwrap();
        let r = (0.6f64).sqrt();
        assert!((z[0] + r).abs() < 1e-14 && z[1].abs() < 1e-14 && (z[2] - r).abs() < 1e-14);
    }

    #[test]
    fn jacobi_matrix_with_alpha_plus_beta_minus_one() {
        // Chebyshev-like weight (1-x)^{-1/2}(1+x)^{-1/2}: zeros cos((2k-1)π/2n)
        let fam = ClassicalFamily::jacobi(-0.5, -0.5).unwrap();
        let z = zeros_classical(fam, 5).unwrap();
        for (k, &zk) in z.iter().rev().enumerate() {
            let exact = ((2 * k + 1) as f64 * std::f64::consts::PI / 10.0).cos();
            assert!((zk - exact).abs() < 1e-13);
        }
        let fam = ClassicalFamily::jacobi(-0.25, -0.75).unwrap();
        let z = zeros_classical(fam, 6).unwrap();
        for &zk in &z {
            assert!(fam.eval(6, zk).abs() < 1e-11);
        }
    }
}
