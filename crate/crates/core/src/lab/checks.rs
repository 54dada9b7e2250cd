use serde_json::{Map, Value};

use super::sturm_liouville::{descartes_sign_changes, dlambda_dalpha, lambda_n4, SturmLiouvilleData};
use super::{slack, CheckResult, Tracker};
use crate::classical::{jacobi_via_hypergeometric, zeros_classical, ClassicalFamily};
use crate::params;
use crate::xop::{gamma_n, JacobiParams, LaguerreParams, XmLaguerreParams};
use crate::zeros::{ZeroFinder, ZeroSet};
use crate::{Error, Result};

/// Deterministic points in [0, 1) (additive golden-ratio sequence).
pub(crate) fn quasi_uniform(i: usize) -> f64 {
    const PHI_FRAC: f64 = 0.618_033_988_749_894_9;
    ((i as f64 + 1.0) * PHI_FRAC).fract()
}

/// `count` points log-spaced strictly inside (lo, hi).
pub fn log_spaced_open(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (1..=count)
        .map(|i| (a + (b - a) * i as f64 / (count + 1) as f64).exp())
        .collect()
}

fn require_ascending(values: &[f64], what: &str) -> Result<()> {
    if values.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::param(format!("{what} must be strictly increasing")));
    }
    Ok(())
}

fn require_ascending_usize(values: &[usize], what: &str) -> Result<()> {
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param(format!("{what} must be strictly increasing")));
    }
    Ok(())
}

fn positive_jacobi(alpha: f64, beta: f64) -> Result<JacobiParams> {
    let p = JacobiParams::new(alpha, beta)?;
    if !(alpha > 0.0) {
        return Err(Error::param(format!(
            "this check needs α, β > 0, got α = {alpha}, β = {beta}"
        )));
    }
    Ok(p)
}

fn sets<F>(n_range: std::ops::RangeInclusive<usize>, mut get: F) -> Result<Vec<ZeroSet>>
where
    F: FnMut(usize) -> Result<ZeroSet>,
{
    n_range.map(&mut get).collect()
}

// ---------------------------------------------------------------------------
// Exceptional zeros: location and ordering

/// X1-Jacobi exceptional zeros: b < x̂_{n,n} ≤ γ_n b and x̂_{n+1,n+1} <
/// x̂_{n,n}, n = 1..n_max, at each (α, β) of the grid. β < α is checked with
/// the inequalities reversed.
pub fn check_thm1_jacobi(grid: &[(f64, f64)], n_max: usize, finder: &ZeroFinder) -> Result<Vec<CheckResult>> {
    let params: Vec<JacobiParams> = grid
        .iter()
        .map(|&(a, b)| positive_jacobi(a, b))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(params.len());
    for p in params {
        let pv = params!("alpha" => p.alpha(), "beta" => p.beta(), "n_max" => n_max);
        let zsets = match sets(1..=n_max, |n| finder.x1_jacobi(n, &p)) {
            Ok(s) => s,
            Err(e) => {
                out.push(CheckResult::engine_failure("thm1-jacobi-exceptional", pv, &e));
                continue;
            }
        };
        let mut res = CheckResult::new("thm1-jacobi-exceptional", pv);
        let b = p.b();
        // orient so that the chain reads b < ... < e_2 < e_1 = c
        let s = b.signum();
        let ex: Vec<f64> = zsets.iter().map(|z| z.exceptional[0]).collect();
        let mut t = Tracker::new(&mut res);
        let c_err = (ex[0] - p.c()).abs();
        if c_err > 1e-10 * (1.0 + p.c().abs()) {
            t.fail(|| format!("x̂_(1,1) = {} differs from c = {}", ex[0], p.c()));
        }
        for (i, &e) in ex.iter().enumerate() {
            let n = i + 1;
            let bound = p.gamma_n(n) * b;
            t.less(s * b, s * e, || format!("n={n}: exceptional zero {e} not beyond b = {b}"));
            t.less(s * e, s * bound, || format!("n={n}: exceptional zero {e} beyond γ_n·b = {bound}"));
            if i + 1 < ex.len() {
                let next = ex[i + 1];
                t.less(s * next, s * e, || format!("n={}: {next} does not improve on n={n}: {e}", n + 1));
            }
        }
        let last = *ex.last().unwrap_or(&f64::NAN);
        t.finish(|| format!("c = {} > ... > x̂_({n_max},{n_max}) = {last} > b = {b}", p.c()));
        out.push(res);
    }
    Ok(out)
}

/// X1-Laguerre exceptional zeros: x̂_{1,1} = -(α+1), all in [-α-1, -α),
/// strictly increasing in n.
pub fn check_thm1_laguerre(alphas: &[f64], n_max: usize, finder: &ZeroFinder) -> Result<Vec<CheckResult>> {
    let params: Vec<LaguerreParams> = alphas.iter().map(|&a| LaguerreParams::new(a)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(params.len());
    for p in params {
        let alpha = p.alpha();
        let pv = params!("alpha" => alpha, "n_max" => n_max);
        let zsets = match sets(1..=n_max, |n| finder.x1_laguerre(n, &p)) {
            Ok(s) => s,
            Err(e) => {
                out.push(CheckResult::engine_failure("thm1-laguerre-exceptional", pv, &e));
                continue;
            }
        };
        let mut res = CheckResult::new("thm1-laguerre-exceptional", pv);
        let ex: Vec<f64> = zsets.iter().map(|z| z.exceptional[0]).collect();
        let mut t = Tracker::new(&mut res);
        if (ex[0] + alpha + 1.0).abs() > 1e-10 {
            t.fail(|| format!("x̂_(1,1) = {} differs from -(α+1)", ex[0]));
        }
        for (i, &e) in ex.iter().enumerate() {
            let n = i + 1;
            t.less(-alpha - 1.0, e + slack(e), || format!("n={n}: {e} below -α-1"));
            t.less(e, -alpha, || format!("n={n}: {e} not below -α"));
            if let Some(&next) = ex.get(i + 1) {
                t.less(e, next, || format!("n={}: {next} does not exceed n={n}: {e}", n + 1));
            }
        }
        let last = *ex.last().unwrap_or(&f64::NAN);
        t.finish(|| format!("-(α+1) = {} < ... < x̂_({n_max},1) = {last} < -α", ex[0]));
        out.push(res);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Regular X1-Laguerre zeros: interlacing and α-monotonicity

/// Interlacing of regular zeros of consecutive degrees at every α, and
/// increase of each regular zero between consecutive α grid values.
pub fn check_thm2(alphas: &[f64], n_max: usize, finder: &ZeroFinder) -> Result<Vec<CheckResult>> {
    require_ascending(alphas, "α grid")?;
    let params: Vec<LaguerreParams> = alphas.iter().map(|&a| LaguerreParams::new(a)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut per_alpha: Vec<Option<Vec<ZeroSet>>> = Vec::with_capacity(params.len());
    for p in &params {
        let pv = params!("alpha" => p.alpha(), "n_max" => n_max);
        match sets(1..=n_max, |n| finder.x1_laguerre(n, p)) {
            Ok(zs) => {
                out.push(interlacing_result(pv, &zs));
                per_alpha.push(Some(zs));
            }
            Err(e) => {
                out.push(CheckResult::engine_failure("thm2-interlacing", pv, &e));
                per_alpha.push(None);
            }
        }
    }
    for (i, pair) in per_alpha.windows(2).enumerate() {
        let (lo_a, hi_a) = (alphas[i], alphas[i + 1]);
        let pv = params!("alpha" => lo_a, "alpha_next" => hi_a, "n_max" => n_max);
        let (Some(lo), Some(hi)) = (&pair[0], &pair[1]) else {
            let mut r = CheckResult::new("thm2-alpha-monotonicity", pv);
            r.passed = false;
            r.worst_residual = f64::INFINITY;
            r.detail = "zero sets unavailable at one of the α values".into();
            out.push(r);
            continue;
        };
        let mut res = CheckResult::new("thm2-alpha-monotonicity", pv);
        let mut t = Tracker::new(&mut res);
        let mut compared = 0;
        for (zl, zh) in lo.iter().zip(hi) {
            for (k, (&a, &b)) in zl.regular.iter().zip(&zh.regular).enumerate() {
                compared += 1;
                t.less(a, b, || {
                    format!("n={}, k={}: {a} at α={lo_a} not below {b} at α={hi_a}", zl.n, k + 2)
                });
            }
        }
        t.finish(|| format!("{compared} regular zeros increase from α={lo_a} to α={hi_a}"));
        out.push(res);
    }
    Ok(out)
}

fn interlacing_result(pv: Map<String, Value>, zs: &[ZeroSet]) -> CheckResult {
    let mut res = CheckResult::new("thm2-interlacing", pv);
    let mut t = Tracker::new(&mut res);
    for pair in zs.windows(2) {
        let (cur, next) = (&pair[0].regular, &pair[1].regular);
        let n = pair[0].n;
        if next.len() != cur.len() + 1 {
            t.fail(|| format!("n={n}: regular zero counts {} and {}", cur.len(), next.len()));
            continue;
        }
        // 0 < x̂_{n+1,2} < x̂_{n,2} < x̂_{n+1,3} < ... < x̂_{n,n} < x̂_{n+1,n+1}
        let mut chain = vec![0.0];
        for (k, &y) in next.iter().enumerate() {
            chain.push(y);
            if let Some(&x) = cur.get(k) {
                chain.push(x);
            }
        }
        for w in chain.windows(2) {
            t.less(w[0], w[1], || format!("n={n}→{}: {} !< {}", n + 1, w[0], w[1]));
        }
    }
    let n_max = zs.last().map_or(0, |z| z.n);
    t.finish(|| format!("regular zeros interlace for all consecutive degrees up to {n_max}"));
    res
}

// ---------------------------------------------------------------------------
// Classical Jacobi endpoint lemma

/// P_n^{(α,β)}(x) < P_{n+1}^{(α,β)}(x) for n = 1..n_max at every sample x > 1.
pub fn check_lemma_jacobi_inequality(n_max: usize, alpha: f64, beta: f64, xs: &[f64]) -> Result<CheckResult> {
    let fam = ClassicalFamily::jacobi(alpha, beta)?;
    if let Some(x) = xs.iter().find(|&&x| !(x > 1.0)) {
        return Err(Error::domain(format!("the Jacobi inequality is checked for x > 1, got {x}")));
    }
    let mut res = CheckResult::new("lemma-jacobi-inequality", params!("alpha" => alpha, "beta" => beta, "n_max" => n_max));
    let mut t = Tracker::new(&mut res);
    for &x in xs {
        for n in 1..=n_max {
            let (pn, pn1) = (fam.eval(n, x), fam.eval(n + 1, x));
            // relative violation keeps the residual comparable across x
            t.less(pn / pn1.abs(), pn1 / pn1.abs(), || format!("x={x}, n={n}: P_n = {pn} >= P_(n+1) = {pn1}"));
        }
    }
    t.finish(|| format!("{} samples × n = 1..{n_max}", xs.len()));
    Ok(res)
}

// ---------------------------------------------------------------------------
// Identities

/// λ_{n+1,4}(x) - λ_{n,4}(x) = 1/x, relative error ≤ `tol`.
pub fn check_lambda_difference(n_max: usize, alphas: &[f64], xs: &[f64], tol: f64) -> Result<CheckResult> {
    let mut res = CheckResult::new(
        "identity-lambda-difference",
        params!("n_max" => n_max, "alphas" => alphas, "points" => xs.len(), "tol" => tol),
    );
    let mut t = Tracker::new(&mut res);
    for &alpha in alphas {
        for n in 1..=n_max {
            for &x in xs {
                let d = lambda_n4(n + 1, alpha, x)? - lambda_n4(n, alpha, x)?;
                let rel = (d - 1.0 / x).abs() * x;
                t.within(rel, tol, || format!("n={n}, α={alpha}, x={x}: relative error {rel:e}"));
            }
        }
    }
    t.finish(|| "λ_(n+1,4) - λ_(n,4) = 1/x on the whole grid".into());
    Ok(res)
}

/// Closed-form ∂λ/∂α against a central difference with step h.
pub fn check_dlambda_finite_difference(
    n_max: usize,
    alphas: &[f64],
    xs: &[f64],
    h: f64,
    tol: f64,
) -> Result<CheckResult> {
    let mut res = CheckResult::new(
        "identity-dlambda-dalpha",
        params!("n_max" => n_max, "alphas" => alphas, "points" => xs.len(), "h" => h, "tol" => tol),
    );
    let mut t = Tracker::new(&mut res);
    for &alpha in alphas {
        for n in 1..=n_max {
            for &x in xs {
                let fd = (lambda_n4(n, alpha + h, x)? - lambda_n4(n, alpha - h, x)?) / (2.0 * h);
                let cf = dlambda_dalpha(n, alpha, x)?;
                // the numerator has a positive zero, so scale by its term sizes
                let rel = (fd - cf).abs() / dlambda_magnitude(alpha, x);
                t.within(rel, tol, || format!("n={n}, α={alpha}, x={x}: {fd} vs {cf}"));
            }
        }
    }
    t.finish(|| "closed form matches the central difference".into());
    Ok(res)
}

fn dlambda_magnitude(alpha: f64, x: f64) -> f64 {
    let b = SturmLiouvilleData::new(1, alpha).b;
    let terms = x.powi(4) + b[3].abs() * x.powi(3) + b[2].abs() * x * x + b[1].abs() * x + b[0].abs();
    terms / (2.0 * x * x * (x + alpha).powi(3))
}

/// (B₀, B₁, B₂, B₃) has exactly one sign change at every α.
pub fn check_descartes_b_sequence(alphas: &[f64]) -> Result<CheckResult> {
    if let Some(a) = alphas.iter().find(|&&a| !(a > 0.0)) {
        return Err(Error::domain(format!("the B-sequence is checked for α > 0, got {a}")));
    }
    let mut res = CheckResult::new("identity-descartes-b-sequence", params!("alphas" => alphas.len()));
    let mut t = Tracker::new(&mut res);
    for &alpha in alphas {
        let b = SturmLiouvilleData::new(1, alpha).b;
        let changes = descartes_sign_changes(&b);
        t.within((changes as f64 - 1.0).abs(), 0.0, || format!("α={alpha}: {changes} sign changes in {b:?}"));
    }
    t.finish(|| "one sign change for every α".into());
    Ok(res)
}

/// Normalized residual of the X1-Jacobi three-term identity for
/// n = 1..n_max at `points` deterministic x in [-1, c].
pub fn check_jacobi_three_term(
    n_max: usize,
    grid: &[(f64, f64)],
    points: usize,
    tol: f64,
) -> Result<CheckResult> {
    let params: Vec<JacobiParams> = grid.iter().map(|&(a, b)| JacobiParams::new(a, b)).collect::<Result<_>>()?;
    let mut res = CheckResult::new(
        "identity-jacobi-three-term",
        params!("n_max" => n_max, "pairs" => grid.len(), "points" => points, "tol" => tol),
    );
    let mut t = Tracker::new(&mut res);
    for p in &params {
        let (lo, hi) = if p.c() > -1.0 { (-1.0, p.c()) } else { (p.c(), 1.0) };
        for n in 1..=n_max {
            for i in 0..points {
                let x = lo + (hi - lo) * quasi_uniform(i + 7 * n);
                let r = crate::xop::jacobi_three_term_residual(n, p, x)?;
                t.within(r, tol, || {
                    format!("(α,β)=({},{}), n={n}, x={x}: residual {r:e}", p.alpha(), p.beta())
                });
            }
        }
    }
    t.finish(|| "-¼(x-b)²P_n = f_(n+1)P̂_(n+2) - 2b g_n P̂_(n+1) + h_n P̂_n holds".into());
    Ok(res)
}

/// P_n^{(α,β)}(1 - 2x/β) against its terminating ₂F₁ form, error relative
/// to the magnitude of the series terms.
pub fn check_hypergeometric_jacobi(
    n_max: usize,
    alphas: &[f64],
    betas: &[f64],
    xs: &[f64],
    tol: f64,
) -> Result<CheckResult> {
    let mut res = CheckResult::new(
        "identity-hypergeometric-jacobi",
        params!("n_max" => n_max, "alphas" => alphas, "betas" => betas, "points" => xs.len(), "tol" => tol),
    );
    let mut t = Tracker::new(&mut res);
    for &alpha in alphas {
        for &beta in betas {
            let fam = ClassicalFamily::jacobi(alpha, beta)?;
            for n in 0..=n_max {
                for &x in xs {
                    let y = 1.0 - 2.0 * x / beta;
                    let direct = fam.eval(n, y);
                    let series = jacobi_via_hypergeometric(n, alpha, beta, y)?;
                    // Σ|terms| of the same series bounds the attainable accuracy
                    let scale = jacobi_series_magnitude(n, alpha, beta, x / beta);
                    let rel = (direct - series).abs() / scale;
                    t.within(rel, tol, || {
                        format!("α={alpha}, β={beta}, n={n}, x={x}: {direct} vs {series}")
                    });
                }
            }
        }
    }
    t.finish(|| "recurrence and ₂F₁ representation agree".into());
    Ok(res)
}

fn jacobi_series_magnitude(n: usize, alpha: f64, beta: f64, z: f64) -> f64 {
    let b = n as f64 + alpha + beta + 1.0;
    let c = alpha + 1.0;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..n {
        let kf = k as f64;
        term *= ((kf - n as f64) * (b + kf) / ((c + kf) * (kf + 1.0)) * z).abs();
        sum += term;
    }
    crate::classical::pochhammer(c, n) / crate::classical::pochhammer(1.0, n) * sum
}

/// The degree -1 convention reproduces the first members of both families:
/// L̂₁ = -(x+α+1) and P̂₁ = -½(x-c), plus γ₁b = c and γ_n decreasing.
pub fn check_first_degree_conventions(samples: usize) -> Result<CheckResult> {
    let mut res = CheckResult::new("identity-first-degree", params!("samples" => samples));
    let mut t = Tracker::new(&mut res);
    for i in 0..samples {
        let alpha = 0.05 + 9.95 * quasi_uniform(i);
        let x = -20.0 + 40.0 * quasi_uniform(i + 1000);
        let p = LaguerreParams::new(alpha)?;
        let got = p.eval(1, x);
        let want = -(x + alpha + 1.0);
        t.within((got - want).abs(), 0.0, || format!("L̂₁ at α={alpha}, x={x}: {got} vs {want}"));

        let a = 0.05 + 9.95 * quasi_uniform(i + 2000);
        let b = a + 0.1 + 20.0 * quasi_uniform(i + 3000);
        let jp = JacobiParams::new(a, b)?;
        let x = -1.0 + (jp.c() + 2.0) * quasi_uniform(i + 4000);
        let got = jp.eval(1, x);
        let want = -0.5 * (x - jp.c());
        let scale = 0.5 * (x.abs() + jp.c().abs());
        t.within((got - want).abs() / scale, 1e-13, || format!("P̂₁ at (α,β)=({a},{b}), x={x}: {got} vs {want}"));

        let g1b = jp.gamma_n(1) * jp.b();
        t.within((g1b - jp.c()).abs() / jp.c().abs(), 1e-14, || format!("γ₁b = {g1b} vs c = {}", jp.c()));
        for n in 1..30 {
            let (g, g_next) = (gamma_n(n, a, b), gamma_n(n + 1, a, b));
            if !(g_next < g) {
                t.fail(|| format!("γ_n not decreasing at n={n}: {g} then {g_next}"));
            }
        }
        if !(1.0 < jp.b() && jp.b() < jp.c()) {
            t.fail(|| format!("1 < b < c fails at (α,β)=({a},{b})"));
        }
    }
    t.finish(|| "first-degree members and γ_n relations hold".into());
    Ok(res)
}

// ---------------------------------------------------------------------------
// Convergence of exceptional zeros

/// Family and parameters for [`check_conjecture_convergence`].
#[derive(Debug, Clone, Copy)]
pub enum ConjectureTarget {
    X1Jacobi(JacobiParams),
    X1Laguerre(LaguerreParams),
    XmLaguerre(XmLaguerreParams),
}

impl ConjectureTarget {
    fn zero_set(&self, n: usize, finder: &ZeroFinder) -> Result<ZeroSet> {
        match self {
            ConjectureTarget::X1Jacobi(p) => finder.x1_jacobi(n, p),
            ConjectureTarget::X1Laguerre(p) => finder.x1_laguerre(n, p),
            ConjectureTarget::XmLaguerre(p) => finder.xm_laguerre(n, p),
        }
    }

    /// Zeros of the denominator polynomial, increasing.
    fn eta_roots(&self) -> Result<Vec<f64>> {
        Ok(match self {
            ConjectureTarget::X1Jacobi(p) => vec![p.eta_root()],
            ConjectureTarget::X1Laguerre(p) => vec![p.eta_root()],
            ConjectureTarget::XmLaguerre(p) => {
                let mut z: Vec<f64> = zeros_classical(p.eta_family(), p.m())?.iter().map(|x| -x).collect();
                z.reverse();
                z
            }
        })
    }

    fn params(&self) -> Map<String, Value> {
        match self {
            ConjectureTarget::X1Jacobi(p) => {
                params!("family" => "x1-jacobi", "alpha" => p.alpha(), "beta" => p.beta())
            }
            ConjectureTarget::X1Laguerre(p) => params!("family" => "x1-laguerre", "alpha" => p.alpha()),
            ConjectureTarget::XmLaguerre(p) => {
                params!("family" => "xm-laguerre-i", "m" => p.m(), "alpha" => p.alpha())
            }
        }
    }
}

fn insufficient(mut res: CheckResult) -> CheckResult {
    res.passed = false;
    res.worst_residual = f64::NAN;
    res.detail = "insufficient points: need at least two degrees".into();
    res
}

/// Distances from the exceptional zeros to the zeros of the denominator
/// polynomial decrease strictly along `ns`; for X1-Jacobi the gap also stays
/// inside the (γ_n - 1)·b envelope.
pub fn check_conjecture_convergence(
    target: &ConjectureTarget,
    ns: &[usize],
    finder: &ZeroFinder,
) -> Result<CheckResult> {
    require_ascending_usize(ns, "degree sequence")?;
    if let ConjectureTarget::X1Jacobi(p) = target {
        positive_jacobi(p.alpha(), p.beta())?;
    }
    let mut pv = target.params();
    pv.insert("ns".into(), serde_json::json!(ns));
    let res = CheckResult::new("conjecture-exceptional-convergence", pv.clone());
    if ns.len() < 2 {
        return Ok(insufficient(res));
    }
    let etas = target.eta_roots()?;
    let mut exc = Vec::with_capacity(ns.len());
    for &n in ns {
        match target.zero_set(n, finder) {
            Ok(z) => exc.push(z.exceptional),
            Err(e) if e.is_usage() => return Err(e),
            Err(e) => return Ok(CheckResult::engine_failure("conjecture-exceptional-convergence", pv, &e)),
        }
    }
    let mut res = res;
    let mut t = Tracker::new(&mut res);
    let mut last_gaps = Vec::new();
    for (k, &eta) in etas.iter().enumerate() {
        let gaps: Vec<f64> = exc.iter().map(|e| (e[k] - eta).abs()).collect();
        for (j, w) in gaps.windows(2).enumerate() {
            t.less(w[1], w[0], || {
                format!("k={}: gap {} at n={} not below {} at n={}", k + 1, w[1], ns[j + 1], w[0], ns[j])
            });
        }
        if let ConjectureTarget::X1Jacobi(p) = target {
            for (&n, &g) in ns.iter().zip(&gaps) {
                let env = ((p.gamma_n(n) - 1.0) * p.b()).abs();
                t.less(g, env, || format!("n={n}: gap {g} exceeds (γ_n - 1)·b = {env}"));
            }
        }
        last_gaps.push(*gaps.last().unwrap());
    }
    t.finish(|| format!("gaps to the denominator zeros shrink; last gaps {last_gaps:?}"));
    Ok(res)
}

/// Whether (m, α, ns) is the instance tabulated with reference values.
pub fn is_table_instance(m: usize, alpha: f64, ns: &[usize]) -> bool {
    m == 4 && alpha == 1.0 && ns == [6, 10, 14]
}

/// Exploratory: for k = 1..m the exceptional zeros z_{m,n,k} (decreasing
/// order) increase in n and stay below -x_{m,k}^{(α-1)}.
///
/// Gating only for the tabulated instance m = 4, α = 1, n ∈ {6, 10, 14}.
pub fn check_open_problem(m: usize, alpha: f64, ns: &[usize], finder: &ZeroFinder) -> Result<CheckResult> {
    if m < 2 {
        return Err(Error::domain(format!("the Xm monotonicity problem is stated for m >= 2, got {m}")));
    }
    let p = XmLaguerreParams::new(m, alpha)?;
    require_ascending_usize(ns, "degree sequence")?;
    if let Some(&n) = ns.iter().find(|&&n| n < m + 1) {
        return Err(Error::domain(format!("degrees must satisfy n >= m + 1, got n = {n} for m = {m}")));
    }
    let pv = params!("m" => m, "alpha" => alpha, "ns" => ns);
    let mut res = CheckResult::new("open-problem-xm-monotonicity", pv.clone());
    if !is_table_instance(m, alpha, ns) {
        res = res.exploratory();
    }
    if ns.len() < 2 {
        return Ok(insufficient(res));
    }
    // -x_{m,k}^{(α-1)} in decreasing order
    let limits: Vec<f64> = zeros_classical(p.eta_family(), m)?.iter().map(|x| -x).collect();
    let mut columns = Vec::with_capacity(ns.len());
    for &n in ns {
        match finder.xm_laguerre(n, &p) {
            Ok(z) => columns.push(z.exceptional_decreasing()),
            Err(e) => {
                let mut r = CheckResult::engine_failure("open-problem-xm-monotonicity", pv, &e);
                r.exploratory = res.exploratory;
                return Ok(r);
            }
        }
    }
    let mut t = Tracker::new(&mut res);
    let mut margins = Vec::with_capacity(m);
    for (k, &limit) in limits.iter().enumerate() {
        for j in 0..ns.len() {
            let z = columns[j][k];
            if j + 1 < ns.len() {
                let next = columns[j + 1][k];
                t.less(z, next, || format!("k={}: z at n={} = {z} !< z at n={} = {next}", k + 1, ns[j], ns[j + 1]));
            }
            t.less(z, limit, || format!("k={}, n={}: {z} not below limit {limit}", k + 1, ns[j]));
        }
        margins.push(limit - columns[ns.len() - 1][k]);
    }
    t.finish(|| format!("increasing toward the limits; margins to limits at n={}: {margins:?}", ns[ns.len() - 1]));
    Ok(res)
}

// ---------------------------------------------------------------------------
// Scaled-zero monotonicity (exploratory)

/// f_n(α,β) = 2n² + 2n(α+β+1) + (α+1)(β+1).
pub fn remark_f(n: usize, alpha: f64, beta: f64) -> f64 {
    let n = n as f64;
    2.0 * n * n + 2.0 * n * (alpha + beta + 1.0) + (alpha + 1.0) * (beta + 1.0)
}

/// Exploratory: (x̂_{n,k}^{(α)} - (2n+α-1)) / √(2(n+α-1)) increases along the
/// α grid for each regular k (2 ≤ k ≤ n).
pub fn check_remark_laguerre(n: usize, ks: &[usize], alphas: &[f64], finder: &ZeroFinder) -> Result<CheckResult> {
    require_ascending(alphas, "α grid")?;
    if let Some(&k) = ks.iter().find(|&&k| k < 2 || k > n) {
        return Err(Error::domain(format!("regular zero index must be in 2..={n}, got {k}")));
    }
    let pv = params!("n" => n, "ks" => ks, "alphas" => alphas);
    let mut res = CheckResult::new("remark-laguerre-scaled-monotonicity", pv.clone()).exploratory();
    if ks.is_empty() {
        res.worst_residual = 0.0;
        res.detail = "no indices requested".into();
        return Ok(res);
    }
    let mut values = vec![Vec::with_capacity(alphas.len()); ks.len()];
    for &alpha in alphas {
        let z = match finder.x1_laguerre(n, &LaguerreParams::new(alpha)?) {
            Ok(z) => z.all_zeros(),
            Err(e) => return Ok(CheckResult::engine_failure(&res.name, pv, &e).exploratory()),
        };
        let nf = n as f64;
        for (row, &k) in values.iter_mut().zip(ks) {
            row.push((z[k - 1] - (2.0 * nf + alpha - 1.0)) / (2.0 * (nf + alpha - 1.0)).sqrt());
        }
    }
    let mut t = Tracker::new(&mut res);
    for (row, &k) in values.iter().zip(ks) {
        for (j, w) in row.windows(2).enumerate() {
            t.less(w[0], w[1], || format!("k={k}: {} at α={} then {} at α={}", w[0], alphas[j], w[1], alphas[j + 1]));
        }
    }
    t.finish(|| format!("scaled regular zeros increase in α: {values:?}"));
    Ok(res)
}

/// Exploratory: f_n(α,β)(1 - x̂_{n,k}^{(α,β)})/2 increases along the β grid
/// for each k (1 ≤ k ≤ n, exceptional zero included).
pub fn check_remark_jacobi(
    n: usize,
    ks: &[usize],
    alpha: f64,
    betas: &[f64],
    finder: &ZeroFinder,
) -> Result<CheckResult> {
    require_ascending(betas, "β grid")?;
    if let Some(&k) = ks.iter().find(|&&k| k < 1 || k > n) {
        return Err(Error::domain(format!("zero index must be in 1..={n}, got {k}")));
    }
    let pv = params!("n" => n, "ks" => ks, "alpha" => alpha, "betas" => betas);
    let mut res = CheckResult::new("remark-jacobi-scaled-monotonicity", pv.clone()).exploratory();
    if ks.is_empty() {
        res.worst_residual = 0.0;
        res.detail = "no indices requested".into();
        return Ok(res);
    }
    let mut values = vec![Vec::with_capacity(betas.len()); ks.len()];
    for &beta in betas {
        let p = JacobiParams::new(alpha, beta)?;
        let z = match finder.x1_jacobi(n, &p) {
            Ok(z) => z.all_zeros(),
            Err(e) => return Ok(CheckResult::engine_failure(&res.name, pv, &e).exploratory()),
        };
        let f = remark_f(n, alpha, beta);
        for (row, &k) in values.iter_mut().zip(ks) {
            row.push(f * (1.0 - z[k - 1]) / 2.0);
        }
    }
    let mut t = Tracker::new(&mut res);
    for (row, &k) in values.iter().zip(ks) {
        for (j, w) in row.windows(2).enumerate() {
            t.less(w[0], w[1], || format!("k={k}: {} at β={} then {} at β={}", w[0], betas[j], w[1], betas[j + 1]));
        }
    }
    t.finish(|| format!("scaled zeros increase in β: {values:?}"));
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finder() -> ZeroFinder {
        ZeroFinder::default()
    }

    #[test]
    fn thm1_jacobi_small() {
        let r = check_thm1_jacobi(&[(1.0, 3.0)], 2, &finder()).unwrap();
        assert!(r[0].passed, "{}", r[0].detail);
        assert!(check_thm1_jacobi(&[(1.0, 1.0)], 2, &finder()).is_err());
        assert!(check_thm1_jacobi(&[(-0.5, -0.2)], 2, &finder()).is_err());
        // β < α: reversed chain
        let r = check_thm1_jacobi(&[(3.0, 1.0)], 6, &finder()).unwrap();
        assert!(r[0].passed, "{}", r[0].detail);
    }

    #[test]
    fn thm1_laguerre_small() {
        let r = check_thm1_laguerre(&[1.0, 0.5], 20, &finder()).unwrap();
        assert!(r.iter().all(|c| c.passed), "{:?}", r);
    }

    #[test]
    fn thm2_small() {
        let r = check_thm2(&[1.0, 1.5], 5, &finder()).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|c| c.passed), "{:?}", r);
        assert!(check_thm2(&[2.0, 1.0], 5, &finder()).is_err());
        // n_max = 1: no regular zeros anywhere, vacuous
        let r = check_thm2(&[1.0], 1, &finder()).unwrap();
        assert!(r[0].passed);
    }

    #[test]
    fn lemma() {
        let r = check_lemma_jacobi_inequality(10, 1.0, 3.0, &[1.5]).unwrap();
        assert!(r.passed);
        let r = check_lemma_jacobi_inequality(10, 0.5, 0.7, &[2.0]).unwrap();
        assert!(r.passed);
        assert!(check_lemma_jacobi_inequality(10, 1.0, 3.0, &[1.0]).is_err());
    }

    #[test]
    fn remark_f_value() {
        assert_eq!(remark_f(2, 1.0, 3.0), 36.0);
    }

    #[test]
    fn conjecture_guards() {
        let t = ConjectureTarget::X1Laguerre(LaguerreParams::new(1.0).unwrap());
        let r = check_conjecture_convergence(&t, &[4], &finder()).unwrap();
        assert!(!r.passed && r.detail.contains("insufficient"));
        assert!(check_conjecture_convergence(&t, &[4, 2], &finder()).is_err());
    }

    #[test]
    fn open_problem_guards() {
        assert!(check_open_problem(1, 1.0, &[3, 4], &finder()).is_err());
        assert!(check_open_problem(3, 1.0, &[3, 5], &finder()).is_err());
        let r = check_open_problem(2, 1.0, &[5], &finder()).unwrap();
        assert!(!r.passed && r.exploratory);
        let r = check_open_problem(4, 1.0, &[6, 10, 14], &finder()).unwrap();
        assert!(r.passed && !r.exploratory, "{}", r.detail);
    }

    #[test]
    fn remark_guards() {
        let r = check_remark_laguerre(4, &[], &[1.0, 2.0], &finder()).unwrap();
        assert!(r.passed && r.exploratory);
        assert!(check_remark_laguerre(4, &[1], &[1.0, 2.0], &finder()).is_err());
        assert!(check_remark_jacobi(4, &[5], 1.0, &[2.0, 3.0], &finder()).is_err());
    }
}
