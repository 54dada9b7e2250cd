use serde::{Deserialize, Serialize};

use super::{gamma_n, laguerre};
use crate::classical::ClassicalFamily;
use crate::{Error, Result};

/// (a, b, c) = ((β-α)/2, (β+α)/(β-α), b + 1/a).
pub fn derived_abc(alpha: f64, beta: f64) -> Result<(f64, f64, f64)> {
    let p = JacobiParams::new(alpha, beta)?;
    Ok((p.a, p.b, p.c))
}

/// Validated X1-Jacobi parameters with the derived constants.
///
/// α, β > -1, α ≠ β and both of the same (nonzero) sign. b is the root of
/// the weight's denominator x - b and c the zero of P̂₁.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    alpha: f64,
    beta: f64,
    a: f64,
    b: f64,
    c: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::param("X1-Jacobi parameters must be finite"));
        }
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(Error::param(format!(
                "X1-Jacobi needs α, β > -1, got α = {alpha}, β = {beta}"
            )));
        }
        if alpha == beta {
            return Err(Error::param(format!("X1-Jacobi needs α ≠ β, got α = β = {alpha}")));
        }
        let same_sign = (alpha > 0.0 && beta > 0.0) || (alpha < 0.0 && beta < 0.0);
        if !same_sign {
            return Err(Error::param(format!(
                "X1-Jacobi needs sign(α) = sign(β), got α = {alpha}, β = {beta}"
            )));
        }
        let a = 0.5 * (beta - alpha);
        let b = (beta + alpha) / (beta - alpha);
        let c = b + 1.0 / a;
        Ok(JacobiParams { alpha, beta, a, b, c })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Root of the denominator polynomial x - b.
    pub fn eta_root(&self) -> f64 {
        self.b
    }

    pub fn gamma_n(&self, n: usize) -> f64 {
        gamma_n(n, self.alpha, self.beta)
    }

    /// The classical Jacobi family with the same (α, β).
    pub fn classical(&self) -> ClassicalFamily {
        ClassicalFamily::Jacobi {
            alpha: self.alpha,
            beta: self.beta,
        }
    }

    /// P̂_n^{(α,β)}(x) for n ≥ 1.
    pub fn eval(&self, n: usize, x: f64) -> f64 {
        debug_assert!(n >= 1);
        let (prev, cur) = self.classical().eval_pair(n - 1, x);
        // eval_pair gives p_{-1} = 0 at n - 1 = 0
        let denom = 2.0 * n as f64 - 2.0 + self.alpha + self.beta;
        -0.5 * (x - self.b) * cur + (self.b * cur - prev) / denom
    }
}

/// Validated X1-Laguerre parameter α > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreParams {
    alpha: f64,
}

impl LaguerreParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::param(format!("X1-Laguerre needs α > 0, got {alpha}")));
        }
        Ok(LaguerreParams { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Root of the denominator polynomial x + α.
    pub fn eta_root(&self) -> f64 {
        -self.alpha
    }

    pub fn classical(&self) -> ClassicalFamily {
        laguerre(self.alpha)
    }

    /// L̂_n^{(α)}(x) for n ≥ 1.
    pub fn eval(&self, n: usize, x: f64) -> f64 {
        debug_assert!(n >= 1);
        let (prev, cur) = self.classical().eval_pair(n - 1, x);
        -(x + self.alpha + 1.0) * cur + prev
    }
}

/// Validated type-I Xm-Laguerre parameters, m ≥ 1 and α > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XmLaguerreParams {
    m: usize,
    alpha: f64,
}

impl XmLaguerreParams {
    pub fn new(m: usize, alpha: f64) -> Result<Self> {
        if m == 0 {
            return Err(Error::param("type-I Xm-Laguerre needs m >= 1"));
        }
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::param(format!(
                "type-I Xm-Laguerre needs α > 0 (so that α - 1 > -1), got {alpha}"
            )));
        }
        Ok(XmLaguerreParams { m, alpha })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The m exceptional zeros tend to the zeros of this polynomial evaluated
    /// at -x, i.e. L_m^{(α-1)}(-x).
    pub fn eta_family(&self) -> ClassicalFamily {
        laguerre(self.alpha - 1.0)
    }

    /// L_{m,n}^{I,α}(x) for n ≥ m.
    pub fn eval(&self, n: usize, x: f64) -> f64 {
        debug_assert!(n >= self.m);
        let m = self.m;
        let upper = laguerre(self.alpha);
        let lower = laguerre(self.alpha - 1.0);
        let k = (n - m) as isize;
        upper.eval(m, -x) * lower.eval_signed(k, x) + upper.eval_signed(k - 1, x) * lower.eval(m, -x)
    }
}
