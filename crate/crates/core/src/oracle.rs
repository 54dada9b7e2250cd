//! Independent reconstruction of the X1 families by Gram-Schmidt.
//!
//! The X1-Laguerre polynomials are orthogonal for the weight
//! e^{-x}x^α/(x+α)² on (0, ∞), seeded by x+α+1, (x+α)², (x+α)³, ...; the
//! X1-Jacobi polynomials for (1-x)^α(1+x)^β/(x-b)² on (-1, 1), seeded by
//! x-c, (x-b)², (x-b)³, .... Orthogonalizing those seeds with Gauss
//! quadrature must give back the formula-based polynomials up to scaling,
//! which makes this a cross-check that shares nothing with
//! [`crate::xop`] except the classical Gauss rules.
//!
//! Double-precision Gram-Schmidt loses roughly a digit per degree, so the
//! oracle stops at degree 10.

use serde::{Deserialize, Serialize};

use crate::classical::{gauss_rule, ClassicalFamily};
use crate::xop::JacobiParams;
use crate::zeros::find_roots_in;
use crate::{Error, Result};

/// Highest degree the oracle accepts.
pub const MAX_ORACLE_DEGREE: usize = 10;
/// Largest Gauss rule tried before giving up.
pub const MAX_RULE_ORDER: usize = 256;
const CONVERGENCE_RTOL: f64 = 1e-9;

/// Polynomial in the monomial basis, `coeffs[i]` multiplying xⁱ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyCoeffs {
    pub coeffs: Vec<f64>,
}

impl PolyCoeffs {
    /// Drops trailing coefficients below 1e-10 of the largest magnitude.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        let max = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.abs() <= 1e-10 * max) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        PolyCoeffs { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Scaled to leading coefficient 1.
    pub fn monic(&self) -> Self {
        let lead = self.leading();
        PolyCoeffs {
            coeffs: self.coeffs.iter().map(|c| c / lead).collect(),
        }
    }

    /// p(x) given as Σ c_k (x - s)^k.
    pub fn from_shifted(shifted: &[f64], s: f64) -> Self {
        // Horner in polynomial arithmetic: acc ← acc·(x - s) + c_k
        let mut acc: Vec<f64> = Vec::with_capacity(shifted.len());
        for &c in shifted.iter().rev() {
            let mut next = vec![0.0; acc.len() + 1];
            for (i, &a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= s * a;
            }
            next[0] += c;
            acc = next;
        }
        PolyCoeffs::new(acc)
    }
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * t + v)
}

/// Weight of one of the two X1 inner products.
#[derive(Debug, Clone, Copy, PartialEq)]
enum OracleWeight {
    Laguerre(f64),
    Jacobi(JacobiParams),
}

impl OracleWeight {
    fn classical(&self) -> ClassicalFamily {
        match self {
            OracleWeight::Laguerre(alpha) => ClassicalFamily::Laguerre { alpha: *alpha },
            OracleWeight::Jacobi(p) => p.classical(),
        }
    }

    /// Zero of the denominator factor; seeds are powers of t = x - shift.
    fn shift(&self) -> f64 {
        match self {
            OracleWeight::Laguerre(alpha) => -alpha,
            OracleWeight::Jacobi(p) => p.b(),
        }
    }

    /// Seed of degree k in powers of t.
    fn seed(&self, k: usize) -> Vec<f64> {
        let mut s = vec![0.0; k + 1];
        s[k] = 1.0;
        if k == 1 {
            s[0] = match self {
                // x + α + 1 = t + 1
                OracleWeight::Laguerre(_) => 1.0,
                // x - c = t - (c - b)
                OracleWeight::Jacobi(p) => p.b() - p.c(),
            };
        }
        s
    }
}

/// Gauss rule with the 1/t² factor folded into the weights.
#[derive(Debug, Clone)]
struct FoldedRule {
    order: usize,
    t: Vec<f64>,
    w: Vec<f64>,
}

impl FoldedRule {
    fn new(weight: &OracleWeight, order: usize) -> Result<Self> {
        let rule = gauss_rule(weight.classical(), order)?;
        let s = weight.shift();
        let t: Vec<f64> = rule.nodes.iter().map(|x| x - s).collect();
        let w = rule.weights.iter().zip(&t).map(|(w, t)| w / (t * t)).collect();
        Ok(FoldedRule { order, t, w })
    }

    fn ip(&self, p: &[f64], q: &[f64]) -> f64 {
        self.t
            .iter()
            .zip(&self.w)
            .map(|(&t, &w)| w * horner(p, t) * horner(q, t))
            .sum()
    }
}

/// Doubles the rule order from `start` until every diagonal entry of the
/// seed Gram matrix changes by less than 1e-9 relative.
fn converged_rule(weight: &OracleWeight, start: usize, n_max: usize) -> Result<FoldedRule> {
    let seeds: Vec<Vec<f64>> = (1..=n_max).map(|k| weight.seed(k)).collect();
    let mut order = start.clamp(1, MAX_RULE_ORDER);
    let mut prev = FoldedRule::new(weight, order)?;
    loop {
        if order >= MAX_RULE_ORDER {
            return Err(Error::OraclePrecision(format!(
                "quadrature did not settle to {CONVERGENCE_RTOL:e} by order {MAX_RULE_ORDER}"
            )));
        }
        order = (2 * order).min(MAX_RULE_ORDER);
        let next = FoldedRule::new(weight, order)?;
        let worst = seeds
            .iter()
            .map(|s| {
                let (a, b) = (prev.ip(s, s), next.ip(s, s));
                (a - b).abs() / b.abs()
            })
            .fold(0.0f64, f64::max);
        if worst < CONVERGENCE_RTOL {
            return Ok(next);
        }
        prev = next;
    }
}

fn check_rule_order(order: usize, deg_sum: usize) -> Result<()> {
    if order < deg_sum / 2 + 8 {
        return Err(Error::param(format!(
            "rule order {order} too low for total degree {deg_sum}; need at least {}",
            deg_sum / 2 + 8
        )));
    }
    Ok(())
}

fn monomial_ip(weight: OracleWeight, p: &PolyCoeffs, q: &PolyCoeffs, rule_order: usize) -> Result<f64> {
    check_rule_order(rule_order, p.degree() + q.degree())?;
    let s = weight.shift();
    let eval = |order: usize| -> Result<f64> {
        let rule = gauss_rule(weight.classical(), order)?;
        Ok(rule.integrate(|x| p.eval(x) * q.eval(x) / ((x - s) * (x - s))))
    };
    let mut order = rule_order.min(MAX_RULE_ORDER);
    let mut prev = eval(order)?;
    while order < MAX_RULE_ORDER {
        order = (2 * order).min(MAX_RULE_ORDER);
        let next = eval(order)?;
        if (next - prev).abs() <= CONVERGENCE_RTOL * next.abs() {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::OraclePrecision(format!(
        "inner product did not settle to {CONVERGENCE_RTOL:e} by order {MAX_RULE_ORDER}"
    )))
}

/// ⟨p, q⟩ = ∫₀^∞ p q e^{-x} x^α/(x+α)² dx by Gauss-Laguerre(α), doubling
/// `rule_order` until the value settles.
pub fn inner_product_x1_laguerre(p: &PolyCoeffs, q: &PolyCoeffs, alpha: f64, rule_order: usize) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::param(format!("X1-Laguerre needs α > 0, got {alpha}")));
    }
    monomial_ip(OracleWeight::Laguerre(alpha), p, q, rule_order)
}

/// ⟨p, q⟩ = ∫₋₁¹ p q (1-x)^α(1+x)^β/(x-b)² dx by Gauss-Jacobi(α, β).
pub fn inner_product_x1_jacobi(p: &PolyCoeffs, q: &PolyCoeffs, params: &JacobiParams, rule_order: usize) -> Result<f64> {
    monomial_ip(OracleWeight::Jacobi(*params), p, q, rule_order)
}

/// Default starting rule order for degree n.
pub fn default_rule_order(n: usize) -> usize {
    4 * n + 32
}

/// Orthogonalized seeds of degrees 1..=n_max, stored in powers of
/// t = x - shift and normalized to unit norm.
#[derive(Debug, Clone)]
pub struct GramSchmidtSequence {
    weight: OracleWeight,
    rule: FoldedRule,
    shifted: Vec<Vec<f64>>,
}

impl GramSchmidtSequence {
    fn build(weight: OracleWeight, n_max: usize, rule_order: Option<usize>) -> Result<Self> {
        if n_max == 0 || n_max > MAX_ORACLE_DEGREE {
            return Err(Error::param(format!(
                "the Gram-Schmidt oracle covers degrees 1..={MAX_ORACLE_DEGREE}, got {n_max}"
            )));
        }
        let start = rule_order.unwrap_or_else(|| default_rule_order(n_max));
        check_rule_order(start, 2 * n_max)?;
        let rule = converged_rule(&weight, start, n_max)?;
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n_max);
        for k in 1..=n_max {
            let mut v = weight.seed(k);
            // modified Gram-Schmidt, then one reorthogonalization pass
            for _ in 0..2 {
                for q in &basis {
                    let proj = rule.ip(&v, q);
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= proj * qi;
                    }
                }
            }
            let norm = rule.ip(&v, &v).sqrt();
            if !(norm > 0.0) || !norm.is_finite() {
                return Err(Error::OraclePrecision(format!("degree {k} collapsed during orthogonalization")));
            }
            v.iter_mut().for_each(|c| *c /= norm);
            basis.push(v);
        }
        Ok(GramSchmidtSequence {
            weight,
            rule,
            shifted: basis,
        })
    }

    pub fn n_max(&self) -> usize {
        self.shifted.len()
    }

    /// Order of the Gauss rule that passed the convergence test.
    pub fn rule_order(&self) -> usize {
        self.rule.order
    }

    /// Degree of each member; there is no degree-0 member.
    pub fn degrees(&self) -> Vec<usize> {
        self.shifted
            .iter()
            .map(|c| PolyCoeffs::new(c.clone()).degree())
            .collect()
    }

    fn member(&self, n: usize) -> Result<&[f64]> {
        if n == 0 || n > self.n_max() {
            return Err(Error::param(format!("degree {n} outside 1..={}", self.n_max())));
        }
        Ok(&self.shifted[n - 1])
    }

    /// Degree-n member evaluated in the shifted basis.
    pub fn eval(&self, n: usize, x: f64) -> Result<f64> {
        Ok(horner(self.member(n)?, x - self.weight.shift()))
    }

    /// Degree-n member in the monomial basis, monic.
    pub fn poly(&self, n: usize) -> Result<PolyCoeffs> {
        Ok(PolyCoeffs::from_shifted(self.member(n)?, self.weight.shift()).monic())
    }

    /// Largest |⟨p_i, p_j⟩| / √(⟨p_i,p_i⟩⟨p_j,p_j⟩), i ≠ j, recomputed with
    /// a rule twice as large as the one used to build the sequence.
    pub fn orthogonality_residual(&self) -> Result<f64> {
        let check = FoldedRule::new(&self.weight, (2 * self.rule.order).min(MAX_RULE_ORDER))?;
        let norms: Vec<f64> = self.shifted.iter().map(|p| check.ip(p, p)).collect();
        let mut worst = 0.0f64;
        for i in 0..self.shifted.len() {
            for j in 0..i {
                let g = check.ip(&self.shifted[i], &self.shifted[j]);
                worst = worst.max(g.abs() / (norms[i] * norms[j]).sqrt());
            }
        }
        Ok(worst)
    }

    /// Zeros of the degree-n member: (regular, exceptional), both increasing.
    pub fn zeros(&self, n: usize, tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let c = self.member(n)?.to_vec();
        let s = self.weight.shift();
        let f = |x: f64| horner(&c, x - s);
        match self.weight {
            OracleWeight::Laguerre(alpha) => {
                let upper = 4.0 * n as f64 + 2.0 * alpha + 12.0;
                let regular = find_roots_in(f, 0.0, upper, n - 1, tol)?;
                let exceptional = find_roots_in(f, -alpha - 2.0, -alpha, 1, tol)?;
                Ok((regular, exceptional))
            }
            OracleWeight::Jacobi(p) => {
                let regular = find_roots_in(f, -1.0, 1.0, n - 1, tol)?;
                // one zero outside [-1, 1]; take the side whose ends differ in sign
                let reach = 10.0 * (p.b().abs() + p.c().abs()) + 10.0;
                let (lo, hi) = if f(1.0).signum() != f(reach).signum() {
                    (1.0, reach)
                } else {
                    (-reach, -1.0)
                };
                let exceptional = find_roots_in(f, lo, hi, 1, tol)?;
                Ok((regular, exceptional))
            }
        }
    }
}

/// X1-Laguerre seeds orthogonalized up to degree n_max.
pub fn x1_laguerre_sequence(n_max: usize, alpha: f64, rule_order: Option<usize>) -> Result<GramSchmidtSequence> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::param(format!("X1-Laguerre needs α > 0, got {alpha}")));
    }
    GramSchmidtSequence::build(OracleWeight::Laguerre(alpha), n_max, rule_order)
}

/// X1-Jacobi seeds orthogonalized up to degree n_max.
pub fn x1_jacobi_sequence(n_max: usize, params: &JacobiParams, rule_order: Option<usize>) -> Result<GramSchmidtSequence> {
    GramSchmidtSequence::build(OracleWeight::Jacobi(*params), n_max, rule_order)
}

/// Degree-n X1-Laguerre polynomial by Gram-Schmidt, monic.
pub fn x1_laguerre_via_gram_schmidt(n: usize, alpha: f64, rule_order: Option<usize>) -> Result<PolyCoeffs> {
    x1_laguerre_sequence(n, alpha, rule_order)?.poly(n)
}

/// Degree-n X1-Jacobi polynomial by Gram-Schmidt, monic.
pub fn x1_jacobi_via_gram_schmidt(n: usize, params: &JacobiParams, rule_order: Option<usize>) -> Result<PolyCoeffs> {
    x1_jacobi_sequence(n, params, rule_order)?.poly(n)
}

/// Gram-Schmidt zeros next to the formula-based ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleComparison {
    pub family: crate::zeros::XopFamily,
    pub n: usize,
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    pub rule_order: usize,
    pub oracle_zeros: Vec<f64>,
    pub formula_zeros: Vec<f64>,
    pub max_abs_diff: f64,
    pub orthogonality_residual: f64,
}

fn compare(
    seq: &GramSchmidtSequence,
    formula: crate::zeros::ZeroSet,
    tol: f64,
) -> Result<OracleComparison> {
    let n = formula.n;
    let (mut oracle, exc) = seq.zeros(n, tol)?;
    oracle.extend(exc);
    oracle.sort_by(f64::total_cmp);
    let formula_zeros = formula.all_zeros();
    let max_abs_diff = oracle
        .iter()
        .zip(&formula_zeros)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    Ok(OracleComparison {
        family: formula.family,
        n,
        alpha: formula.alpha,
        beta: formula.beta,
        rule_order: seq.rule_order(),
        oracle_zeros: oracle,
        formula_zeros,
        max_abs_diff,
        orthogonality_residual: seq.orthogonality_residual()?,
    })
}

/// Cross-checks the degree-n X1-Laguerre zeros against the oracle.
pub fn cross_check_x1_laguerre(n: usize, alpha: f64, finder: &crate::zeros::ZeroFinder) -> Result<OracleComparison> {
    let seq = x1_laguerre_sequence(n, alpha, None)?;
    let formula = finder.x1_laguerre(n, &crate::xop::LaguerreParams::new(alpha)?)?;
    compare(&seq, formula, finder.tol())
}

/// Cross-checks the degree-n X1-Jacobi zeros against the oracle.
pub fn cross_check_x1_jacobi(
    n: usize,
    params: &JacobiParams,
    finder: &crate::zeros::ZeroFinder,
) -> Result<OracleComparison> {
    let seq = x1_jacobi_sequence(n, params, None)?;
    let formula = finder.x1_jacobi(n, params)?;
    compare(&seq, formula, finder.tol())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_basics() {
        let p = PolyCoeffs::new(vec![-3.0, 0.0, 1.0, 1e-14]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(2.0), 1.0);
        // (x - 1)² + 2(x - 1) + 3 = x² + 2
        let q = PolyCoeffs::from_shifted(&[3.0, 2.0, 1.0], 1.0);
        assert_eq!(q.coeffs, vec![2.0, 0.0, 1.0]);
        assert_eq!(PolyCoeffs::new(vec![2.0, 4.0]).monic().coeffs, vec![0.5, 1.0]);
    }

    #[test]
    fn inner_product_symmetry_and_stability() {
        let one = PolyCoeffs::new(vec![1.0]);
        let p = PolyCoeffs::new(vec![1.0, -2.0, 0.5]);
        let a = inner_product_x1_laguerre(&one, &one, 1.0, 16).unwrap();
        let b = inner_product_x1_laguerre(&one, &one, 1.0, 64).unwrap();
        assert!((a - b).abs() < 1e-9 * b);
        // ∫ e^{-x} x/(x+1)² dx = 2eE₁(1) - 1
        assert!((b - 0.192_694_724_646_388_1).abs() < 1e-9, "{b}");
        let pq = inner_product_x1_laguerre(&p, &one, 1.0, 32).unwrap();
        let qp = inner_product_x1_laguerre(&one, &p, 1.0, 32).unwrap();
        assert_eq!(pq, qp);
        assert!(inner_product_x1_laguerre(&p, &p, 1.0, 2).is_err());
    }

    #[test]
    fn first_members_are_the_first_seeds() {
        let p = x1_laguerre_via_gram_schmidt(1, 1.0, None).unwrap();
        assert!((p.coeffs[0] - 2.0).abs() < 1e-12 && p.coeffs[1] == 1.0);
        let jp = JacobiParams::new(1.0, 3.0).unwrap();
        let p = x1_jacobi_via_gram_schmidt(1, &jp, None).unwrap();
        assert!((p.coeffs[0] + 3.0).abs() < 1e-12);
    }

    #[test]
    fn second_degree_closed_forms() {
        let p = x1_laguerre_via_gram_schmidt(2, 1.0, None).unwrap();
        assert!((p.coeffs[0] + 3.0).abs() < 1e-8 && p.coeffs[1].abs() < 1e-8, "{p:?}");
        let jp = JacobiParams::new(1.0, 3.0).unwrap();
        let p = x1_jacobi_via_gram_schmidt(2, &jp, None).unwrap();
        // x² - 3x + 1
        assert!((p.coeffs[0] - 1.0).abs() < 1e-8 && (p.coeffs[1] + 3.0).abs() < 1e-8, "{p:?}");
    }

    #[test]
    fn degree_guard() {
        assert!(x1_laguerre_sequence(11, 1.0, None).is_err());
        assert!(x1_laguerre_sequence(0, 1.0, None).is_err());
        assert!(x1_laguerre_sequence(3, -1.0, None).is_err());
    }

    #[test]
    fn no_degree_zero_member() {
        let s = x1_laguerre_sequence(6, 2.0, None).unwrap();
        assert_eq!(s.degrees(), vec![1, 2, 3, 4, 5, 6]);
    }
}
