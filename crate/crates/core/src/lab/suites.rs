//! Named groups of checks with their default grids.

use std::fmt;
use std::str::FromStr;

use super::*;
use crate::xop::{JacobiParams, LaguerreParams, XmLaguerreParams};
use crate::zeros::{XopFamily, ZeroFinder};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Thm1,
    Thm2,
    Thm3,
    Identities,
    Lemma,
    Conjecture,
    OpenProblem,
    Remark,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Identities,
        Suite::Lemma,
        Suite::Conjecture,
        Suite::OpenProblem,
        Suite::Remark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Identities => "identities",
            Suite::Lemma => "lemma",
            Suite::Conjecture => "conjecture",
            Suite::OpenProblem => "open-problem",
            Suite::Remark => "remark",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::param(format!("unknown suite '{s}'")))
    }
}

/// Grids for every suite. `Default` gives the standard grids; fields set
/// to `Some` override them.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub alphas: Vec<f64>,
    /// Explicit β values paired with every α; `None` uses
    /// {α+0.5, α+2, α+10, 4α}.
    pub betas: Option<Vec<f64>>,
    pub n_max: usize,
    pub lemma_n_max: usize,
    pub lemma_points: usize,
    pub limit_n: usize,
    pub limit_alpha: f64,
    pub limit_betas: Vec<f64>,
    pub hermite_alphas: Vec<f64>,
    /// Restricts the conjecture suite to one family.
    pub family: Option<XopFamily>,
    /// Xm index for the conjecture and open-problem suites.
    pub m: Option<usize>,
    /// Degree sequence for the conjecture and open-problem suites.
    pub ns: Option<Vec<usize>>,
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            alphas: vec![0.5, 1.0, 2.0, 5.0],
            betas: None,
            n_max: 20,
            lemma_n_max: 10,
            lemma_points: 20,
            limit_n: 4,
            limit_alpha: 1.0,
            limit_betas: vec![1e2, 1e3, 1e4],
            hermite_alphas: vec![1e2, 1e3, 1e4],
            family: None,
            m: None,
            ns: None,
            tol: crate::DEFAULT_TOL,
        }
    }
}

impl SuiteConfig {
    /// The (α, β) pairs used by the Jacobi checks.
    pub fn jacobi_grid(&self) -> Vec<(f64, f64)> {
        let mut grid = Vec::new();
        for &a in &self.alphas {
            let betas = match &self.betas {
                Some(b) => b.clone(),
                None => vec![a + 0.5, a + 2.0, a + 10.0, 4.0 * a],
            };
            for b in betas {
                if !grid.contains(&(a, b)) {
                    grid.push((a, b));
                }
            }
        }
        grid
    }

    fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() {
            return Err(Error::param("α grid is empty"));
        }
        if self.betas.as_ref().is_some_and(Vec::is_empty) {
            return Err(Error::param("β grid is empty"));
        }
        if self.n_max == 0 {
            return Err(Error::param("n_max must be at least 1"));
        }
        Ok(())
    }

    fn sorted_alphas(&self) -> Vec<f64> {
        let mut a = self.alphas.clone();
        a.sort_by(f64::total_cmp);
        a.dedup();
        a
    }
}

/// Runs one suite (or all of them) and collects the results.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let finder = ZeroFinder::new(config.tol)?;
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                all.extend(suite_checks(s, config, &finder)?);
            }
            all
        }
        s => suite_checks(s, config, &finder)?,
    };
    Ok(Report::new(suite.name(), checks))
}

fn suite_checks(suite: Suite, cfg: &SuiteConfig, finder: &ZeroFinder) -> Result<Vec<CheckResult>> {
    log::info!("running suite {suite}");
    match suite {
        Suite::Thm1 => {
            let mut out = check_thm1_jacobi(&cfg.jacobi_grid(), cfg.n_max, finder)?;
            out.extend(check_thm1_laguerre(&cfg.alphas, cfg.n_max, finder)?);
            Ok(out)
        }
        Suite::Thm2 => check_thm2(&cfg.sorted_alphas(), cfg.n_max, finder),
        Suite::Thm3 => Ok(vec![
            check_thm3_jacobi_to_laguerre(cfg.limit_n, cfg.limit_alpha, &cfg.limit_betas, finder)?,
            check_thm3_laguerre_to_hermite(cfg.limit_n, &cfg.hermite_alphas, finder)?,
        ]),
        Suite::Identities => identity_checks(),
        Suite::Lemma => {
            let xs = lemma_points(cfg.lemma_points);
            cfg.jacobi_grid()
                .into_iter()
                .map(|(a, b)| check_lemma_jacobi_inequality(cfg.lemma_n_max, a, b, &xs))
                .collect()
        }
        Suite::Conjecture => conjecture_checks(cfg, finder),
        Suite::OpenProblem => open_problem_checks(cfg, finder),
        Suite::Remark => Ok(vec![
            check_remark_laguerre(4, &[2, 3, 4], &[1.0, 2.0, 4.0, 8.0, 16.0], finder)?,
            check_remark_jacobi(4, &[1, 2, 3, 4], 1.0, &[2.0, 4.0, 8.0, 16.0, 32.0], finder)?,
        ]),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// `count` points spread over (1, 5].
pub fn lemma_points(count: usize) -> Vec<f64> {
    (1..=count).map(|i| 1.0 + 4.0 * i as f64 / count as f64).collect()
}

fn identity_checks() -> Result<Vec<CheckResult>> {
    let xs = log_spaced_open(1e-3, 1e3, 100);
    let alphas = [0.5, 1.0, 5.0];
    let descartes_alphas: Vec<f64> = (1..=100).map(|i| 100.0 * (i as f64 / 100.0).powi(3)).collect();
    let hyp_xs: Vec<f64> = (0..=10).map(|i| 0.5 * i as f64).collect();
    Ok(vec![
        check_lambda_difference(20, &alphas, &xs, 1e-12)?,
        check_dlambda_finite_difference(20, &alphas, &xs, 1e-5, 1e-6)?,
        check_jacobi_three_term(15, &[(1.0, 3.0), (0.5, 2.5), (2.0, 7.0)], 20, 1e-10)?,
        check_descartes_b_sequence(&descartes_alphas)?,
        check_hypergeometric_jacobi(10, &[0.5, 1.0, 2.0], &[10.0, 100.0], &hyp_xs, 1e-10)?,
        check_first_degree_conventions(50)?,
    ])
}

fn conjecture_checks(cfg: &SuiteConfig, finder: &ZeroFinder) -> Result<Vec<CheckResult>> {
    let wants = |f: XopFamily| cfg.family.is_none_or(|g| g == f);
    let x1_ns = cfg.ns.clone().unwrap_or_else(|| vec![2, 4, 8, 16]);
    let mut out = Vec::new();
    if wants(XopFamily::X1Jacobi) {
        let pairs = if cfg.betas.is_some() || cfg.alphas != SuiteConfig::default().alphas {
            cfg.jacobi_grid()
        } else {
            vec![(1.0, 3.0)]
        };
        for (a, b) in pairs {
            let t = ConjectureTarget::X1Jacobi(JacobiParams::new(a, b)?);
            out.push(check_conjecture_convergence(&t, &x1_ns, finder)?);
        }
    }
    if wants(XopFamily::X1Laguerre) {
        for &a in &cfg.alphas {
            let t = ConjectureTarget::X1Laguerre(LaguerreParams::new(a)?);
            out.push(check_conjecture_convergence(&t, &x1_ns, finder)?);
        }
    }
    if wants(XopFamily::XmLaguerreI) {
        let m = cfg.m.unwrap_or(4);
        let alpha = if cfg.alphas.len() == 1 { cfg.alphas[0] } else { 1.0 };
        let ns = match (&cfg.ns, cfg.m) {
            (Some(ns), _) => ns.clone(),
            (None, None) => vec![6, 10, 14],
            (None, Some(m)) => vec![m + 2, m + 6, m + 10],
        };
        let t = ConjectureTarget::XmLaguerre(XmLaguerreParams::new(m, alpha)?);
        out.push(check_conjecture_convergence(&t, &ns, finder)?);
    }
    Ok(out)
}

fn open_problem_checks(cfg: &SuiteConfig, finder: &ZeroFinder) -> Result<Vec<CheckResult>> {
    // explicit instance from the caller
    if cfg.m.is_some() || cfg.ns.is_some() {
        let m = cfg.m.unwrap_or(4);
        let alpha = if cfg.alphas.len() == 1 { cfg.alphas[0] } else { 1.0 };
        let ns = cfg.ns.clone().unwrap_or_else(|| vec![m + 2, m + 6, m + 10]);
        return Ok(vec![check_open_problem(m, alpha, &ns, finder)?]);
    }
    let mut out = vec![check_open_problem(4, 1.0, &[6, 10, 14], finder)?];
    for m in 2..=5 {
        for alpha in [1.0, 2.0] {
            let ns = [m + 1, m + 3, m + 5, m + 7];
            out.push(check_open_problem(m, alpha, &ns, finder)?);
        }
    }
    Ok(out)
}
