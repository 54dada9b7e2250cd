//! Gauss-Jacobi and Gauss-Laguerre rules.
//!
//! Nodes are the classical zeros; weights use the closed forms
//!
//! - Laguerre: wᵢ = Γ(n+α+1) xᵢ / (n! (n+1)² L_{n+1}^{(α)}(xᵢ)²)
//! - Jacobi:   wᵢ = 2^{α+β+1} Γ(n+α+1) Γ(n+β+1) / (Γ(n+α+β+1) n! (1-xᵢ²) P_n'(xᵢ)²)
//!
//! evaluated in log space so that high orders do not overflow.

use std::f64::consts::LN_2;

use serde::Serialize;

use super::{ln_gamma_pos, zeros_classical, ClassicalFamily};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
    pub family: ClassicalFamily,
}

impl QuadratureRule {
    /// Σ wᵢ f(xᵢ).
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }
}

/// Gauss rule with `order` nodes for the weight of `family`.
///
/// Exact for polynomials of degree ≤ 2·order - 1. Hermite is not supported.
/// At very high Laguerre orders the outermost weights underflow to 0.
pub fn gauss_rule(family: ClassicalFamily, order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::domain("quadrature order must be >= 1"));
    }
    let nodes = zeros_classical(family, order)?;
    let n = order as f64;
    let weights = match family {
        ClassicalFamily::Laguerre { alpha } => {
            let log_c = ln_gamma_pos(n + alpha + 1.0) - ln_gamma_pos(n + 1.0) - 2.0 * (n + 1.0).ln();
            nodes
                .iter()
                .map(|&x| {
                    let next = family.eval(order + 1, x);
                    (log_c + x.ln() - 2.0 * next.abs().ln()).exp()
                })
                .collect()
        }
        ClassicalFamily::Jacobi { alpha, beta } => {
            let log_c = (alpha + beta + 1.0) * LN_2 + ln_gamma_pos(n + alpha + 1.0)
                + ln_gamma_pos(n + beta + 1.0)
                - ln_gamma_pos(n + alpha + beta + 1.0)
                - ln_gamma_pos(n + 1.0);
            nodes
                .iter()
                .map(|&x| {
                    let (_, d) = family.eval_with_derivative(order, x);
                    (log_c - (1.0 - x * x).ln() - 2.0 * d.abs().ln()).exp()
                })
                .collect()
        }
        ClassicalFamily::Hermite => {
            return Err(Error::Unsupported("Gauss-Hermite rules are not provided".into()))
        }
    };
    Ok(QuadratureRule {
        nodes,
        weights,
        order,
        family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_rules() {
        let r = gauss_rule(ClassicalFamily::laguerre(0.0).unwrap(), 1).unwrap();
        assert!((r.nodes[0] - 1.0).abs() < 1e-14 && (r.weights[0] - 1.0).abs() < 1e-14);
        let r = gauss_rule(ClassicalFamily::jacobi(0.0, 0.0).unwrap(), 1).unwrap();
        assert!(r.nodes[0].abs() < 1e-14 && (r.weights[0] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn two_point_laguerre_from_moment_equations() {
        // Solving Σw = 1, Σwx = 1, Σwx² = 2, Σwx³ = 6 gives x = 2 ∓ √2,
        // w = (2 ± √2)/4.
        let r = gauss_rule(ClassicalFamily::laguerre(0.0).unwrap(), 2).unwrap();
        let s = 2f64.sqrt();
        assert!((r.nodes[0] - (2.0 - s)).abs() < 1e-13);
        assert!((r.nodes[1] - (2.0 + s)).abs() < 1e-13);
        assert!((r.weights[0] - (2.0 + s) / 4.0).abs() < 1e-13);
        assert!((r.weights[1] - (2.0 - s) / 4.0).abs() < 1e-13);
    }

    #[test]
    fn hermite_rule_is_unsupported() {
        assert!(matches!(
            gauss_rule(ClassicalFamily::Hermite, 3),
            Err(Error::Unsupported(_))
        ));
        assert!(gauss_rule(ClassicalFamily::laguerre(0.0).unwrap(), 0).is_err());
    }

    #[test]
    fn weights_sum_to_zeroth_moment() {
        for fam in [
            ClassicalFamily::laguerre(0.5).unwrap(),
            ClassicalFamily::laguerre(3.0).unwrap(),
            ClassicalFamily::jacobi(1.0, 3.0).unwrap(),
            ClassicalFamily::jacobi(-0.5, 0.25).unwrap(),
        ] {
            for order in [1, 3, 10, 40, 100] {
                let r = gauss_rule(fam, order).unwrap();
                let total: f64 = r.weights.iter().sum();
                let m0 = fam.moment0();
                assert!((total - m0).abs() <= 1e-10 * m0, "{fam:?} order {order}: {total} vs {m0}");
                assert!(r.weights.iter().all(|&w| w > 0.0));
                assert!(r.nodes.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }
}
