//! Large-parameter limits: X1-Jacobi to X1-Laguerre, X1-Laguerre to Hermite.

use xop_zeros::lab::{jacobi_to_laguerre_study, laguerre_to_hermite_study, LimitStudy, DEFAULT_LIMIT_CAP};
use xop_zeros::zeros::ZeroFinder;

fn show(s: &LimitStudy) {
    println!("{:?}, n = {}, sequence {:?}", s.kind, s.n, s.sequence);
    for r in &s.rows {
        let errs: Vec<String> = r.errors.iter().map(|e| format!("{e:.2e}")).collect();
        println!("  k = {}: target {:>9.5}, errors [{}]", r.k, r.target, errs.join(", "));
    }
    println!("  passes cap {}: {}", s.cap, s.passed());
}

fn main() -> xop_zeros::Result<()> {
    let f = ZeroFinder::default();
    show(&jacobi_to_laguerre_study(4, 1.0, &[1e2, 1e3, 1e4, 1e5], DEFAULT_LIMIT_CAP, &f)?);
    // the Hermite errors shrink like 1/√α, so α must be very large to get small errors
    show(&laguerre_to_hermite_study(4, None, &[1e2, 1e3, 1e4, 1e5, 1e6], DEFAULT_LIMIT_CAP, &f)?);
    Ok(())
}
