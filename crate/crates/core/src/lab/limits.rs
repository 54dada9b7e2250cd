//! Large-parameter limits of the X1 zeros.
//!
//! As β → ∞, β(1 - x̂_{n,k}^{(α,β)})/2 tends to the X1-Laguerre zero
//! x̂_{n,n+1-k}^{(α)}; as α → ∞, (x̂_{n,k}^{(α)} - α)/√(2α) tends to the
//! Hermite zero h_{n-1,k-1} for the regular indices k = 2..n.

use serde::{Deserialize, Serialize};

use super::CheckResult;
use crate::classical::{zeros_classical, ClassicalFamily};
use crate::params;
use crate::xop::{JacobiParams, LaguerreParams};
use crate::zeros::ZeroFinder;
use crate::{Error, Result};

/// Relative cap on the final error: last error ≤ cap·(1 + |target|).
pub const DEFAULT_LIMIT_CAP: f64 = 5e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitKind {
    JacobiToLaguerre,
    LaguerreToHermite,
}

impl LimitKind {
    fn check_name(self) -> &'static str {
        match self {
            LimitKind::JacobiToLaguerre => "thm3-jacobi-to-laguerre",
            LimitKind::LaguerreToHermite => "thm3-laguerre-to-hermite",
        }
    }
}

/// Scaled zeros and their errors for one index k along the sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub k: usize,
    pub target: f64,
    pub scaled: Vec<f64>,
    pub errors: Vec<f64>,
    pub decreasing: bool,
    pub within_cap: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitStudy {
    pub kind: LimitKind,
    pub n: usize,
    /// Fixed α of the Jacobi → Laguerre limit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// The β (or α) values, increasing.
    pub sequence: Vec<f64>,
    pub cap: f64,
    pub rows: Vec<LimitRow>,
}

impl LimitStudy {
    pub fn passed(&self) -> bool {
        self.sequence.len() >= 2 && self.rows.iter().all(|r| r.decreasing && r.within_cap)
    }

    pub fn to_check(&self) -> CheckResult {
        let mut pv = params!("n" => self.n, "sequence" => &self.sequence, "cap" => self.cap);
        if let Some(a) = self.alpha {
            pv.insert("alpha".into(), serde_json::json!(a));
        }
        let mut res = CheckResult::new(self.kind.check_name(), pv);
        if self.sequence.len() < 2 {
            res.passed = false;
            res.worst_residual = f64::NAN;
            res.detail = "insufficient points: need at least two sequence values".into();
            return res;
        }
        res.passed = self.passed();
        res.worst_residual = self
            .rows
            .iter()
            .filter_map(|r| r.errors.last().copied())
            .fold(f64::NEG_INFINITY, f64::max);
        let bad: Vec<String> = self
            .rows
            .iter()
            .filter(|r| !(r.decreasing && r.within_cap))
            .map(|r| {
                let why = if r.decreasing { "above cap" } else { "not decreasing" };
                format!("k={} {why}: errors {:?}, cap {:e}", r.k, r.errors, self.cap * (1.0 + r.target.abs()))
            })
            .collect();
        res.detail = if bad.is_empty() {
            let finals: Vec<String> = self
                .rows
                .iter()
                .map(|r| format!("k={}: {:.3e}", r.k, r.errors.last().copied().unwrap_or(f64::NAN)))
                .collect();
            format!("errors decrease; final errors {}", finals.join(", "))
        } else {
            format!("violated: {}", bad.join("; "))
        };
        res
    }
}

fn validate_sequence(seq: &[f64], what: &str) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::param(format!("{what} sequence is empty")));
    }
    if seq.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::param(format!("{what} sequence must be strictly increasing")));
    }
    Ok(())
}

fn finish_row(k: usize, target: f64, scaled: Vec<f64>, cap: f64) -> LimitRow {
    let errors: Vec<f64> = scaled.iter().map(|s| (s - target).abs()).collect();
    let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
    let within_cap = errors.last().is_some_and(|&e| e <= cap * (1.0 + target.abs()));
    LimitRow {
        k,
        target,
        scaled,
        errors,
        decreasing,
        within_cap,
    }
}

/// β(1 - x̂_{n,k}^{(α,β_j)})/2 against x̂_{n,n+1-k}^{(α)} for k = 1..n.
pub fn jacobi_to_laguerre_study(
    n: usize,
    alpha: f64,
    betas: &[f64],
    cap: f64,
    finder: &ZeroFinder,
) -> Result<LimitStudy> {
    validate_sequence(betas, "β")?;
    let lag = finder.x1_laguerre(n, &LaguerreParams::new(alpha)?)?.all_zeros();
    let mut columns = Vec::with_capacity(betas.len());
    for &beta in betas {
        let p = JacobiParams::new(alpha, beta)?;
        if beta < alpha {
            return Err(Error::param(format!("β must exceed α in the β → ∞ limit, got β = {beta}")));
        }
        let z = finder.x1_jacobi(n, &p)?.all_zeros();
        columns.push(z.into_iter().map(|x| beta * (1.0 - x) / 2.0).collect::<Vec<_>>());
    }
    let rows = (1..=n)
        .map(|k| finish_row(k, lag[n - k], columns.iter().map(|c| c[k - 1]).collect(), cap))
        .collect();
    Ok(LimitStudy {
        kind: LimitKind::JacobiToLaguerre,
        n,
        alpha: Some(alpha),
        sequence: betas.to_vec(),
        cap,
        rows,
    })
}

/// (x̂_{n,k}^{(α_j)} - α_j)/√(2α_j) against h_{n-1,k-1}; `ks` defaults to 2..=n.
pub fn laguerre_to_hermite_study(
    n: usize,
    ks: Option<&[usize]>,
    alphas: &[f64],
    cap: f64,
    finder: &ZeroFinder,
) -> Result<LimitStudy> {
    validate_sequence(alphas, "α")?;
    if n < 2 {
        return Err(Error::domain("the Hermite limit concerns regular zeros, which need n >= 2"));
    }
    let ks: Vec<usize> = match ks {
        Some(ks) => ks.to_vec(),
        None => (2..=n).collect(),
    };
    if let Some(&k) = ks.iter().find(|&&k| k < 2 || k > n) {
        return Err(Error::domain(format!(
            "the Hermite limit holds for regular indices k = 2..{n}, got k = {k}"
        )));
    }
    let herm = zeros_classical(ClassicalFamily::Hermite, n - 1)?;
    let mut columns = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let z = finder.x1_laguerre(n, &LaguerreParams::new(alpha)?)?.all_zeros();
        let s = (2.0 * alpha).sqrt();
        columns.push(z.into_iter().map(|x| (x - alpha) / s).collect::<Vec<_>>());
    }
    let rows = ks
        .iter()
        .map(|&k| finish_row(k, herm[k - 2], columns.iter().map(|c| c[k - 1]).collect(), cap))
        .collect();
    Ok(LimitStudy {
        kind: LimitKind::LaguerreToHermite,
        n,
        alpha: None,
        sequence: alphas.to_vec(),
        cap,
        rows,
    })
}

fn as_check(kind: LimitKind, pv: serde_json::Map<String, serde_json::Value>, study: Result<LimitStudy>) -> Result<CheckResult> {
    match study {
        Ok(s) => Ok(s.to_check()),
        Err(e) if e.is_usage() => Err(e),
        Err(e) => Ok(CheckResult::engine_failure(kind.check_name(), pv, &e)),
    }
}

/// Jacobi → Laguerre limit with the default cap.
pub fn check_thm3_jacobi_to_laguerre(n: usize, alpha: f64, betas: &[f64], finder: &ZeroFinder) -> Result<CheckResult> {
    let pv = params!("n" => n, "alpha" => alpha, "sequence" => betas);
    as_check(
        LimitKind::JacobiToLaguerre,
        pv,
        jacobi_to_laguerre_study(n, alpha, betas, DEFAULT_LIMIT_CAP, finder),
    )
}

/// Laguerre → Hermite limit with the default cap, k = 2..n.
pub fn check_thm3_laguerre_to_hermite(n: usize, alphas: &[f64], finder: &ZeroFinder) -> Result<CheckResult> {
    let pv = params!("n" => n, "sequence" => alphas);
    as_check(
        LimitKind::LaguerreToHermite,
        pv,
        laguerre_to_hermite_study(n, None, alphas, DEFAULT_LIMIT_CAP, finder),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_degree_closed_form() {
        // n = 1: β(1 - c)/2 = -β(α+1)/(β-α), so the error is α(α+1)/(β-α)
        let f = ZeroFinder::default();
        let betas = [1e2, 1e3, 1e4];
        let s = jacobi_to_laguerre_study(1, 1.0, &betas, DEFAULT_LIMIT_CAP, &f).unwrap();
        assert_eq!(s.rows[0].target, -2.0);
        for (e, b) in s.rows[0].errors.iter().zip(betas) {
            let want = 2.0 / (b - 1.0);
            assert!((e - want).abs() < 1e-9 * b, "{e} vs {want}");
        }
        assert!(s.rows[0].decreasing);
    }

    #[test]
    fn guards() {
        let f = ZeroFinder::default();
        let c = check_thm3_jacobi_to_laguerre(2, 1.0, &[100.0], &f).unwrap();
        assert!(!c.passed && c.detail.contains("insufficient"));
        assert!(laguerre_to_hermite_study(3, Some(&[1]), &[10.0, 20.0], DEFAULT_LIMIT_CAP, &f).is_err());
        assert!(check_thm3_laguerre_to_hermite(3, &[20.0, 10.0], &f).is_err());
        assert!(check_thm3_laguerre_to_hermite(3, &[], &f).is_err());
    }

    #[test]
    fn hermite_targets() {
        let f = ZeroFinder::default();
        let s = laguerre_to_hermite_study(3, None, &[1e2, 1e3], DEFAULT_LIMIT_CAP, &f).unwrap();
        assert!((s.rows[0].target + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((s.rows[1].target - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(s.rows.iter().all(|r| r.decreasing));
    }
}
