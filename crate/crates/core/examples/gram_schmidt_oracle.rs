//! Rebuild X1 polynomials by Gram-Schmidt and compare zeros with the closed forms.

use xop_zeros::oracle::{cross_check_x1_jacobi, cross_check_x1_laguerre, x1_laguerre_sequence};
use xop_zeros::xop::JacobiParams;
use xop_zeros::zeros::ZeroFinder;

fn main() -> xop_zeros::Result<()> {
    let f = ZeroFinder::default();
    let seq = x1_laguerre_sequence(8, 1.0, None)?;
    println!(
        "X1-Laguerre α = 1: degrees {:?}, rule order {}, orthogonality {:.1e}",
        seq.degrees(),
        seq.rule_order(),
        seq.orthogonality_residual()?
    );
    for n in 1..=8 {
        let c = cross_check_x1_laguerre(n, 1.0, &f)?;
        println!("  n = {n}: max zero difference {:.1e}", c.max_abs_diff);
    }
    let p = JacobiParams::new(0.5, 2.5)?;
    for n in [2, 4, 6, 8] {
        let c = cross_check_x1_jacobi(n, &p, &f)?;
        println!("X1-Jacobi (0.5, 2.5), n = {n}: max zero difference {:.1e}", c.max_abs_diff);
    }
    Ok(())
}
