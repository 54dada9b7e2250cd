//! Gauss-Laguerre and Gauss-Jacobi rules applied to a few known integrals.

use xop_zeros::classical::{gauss_rule, ClassicalFamily};

fn main() -> xop_zeros::Result<()> {
    // ∫ x^5 e^{-x} dx over (0, ∞) is 5! = 120
    let lag = gauss_rule(ClassicalFamily::laguerre(0.0)?, 4)?;
    println!("Gauss-Laguerre, 4 nodes: ∫ x^5 e^-x = {:.15}", lag.integrate(|x| x.powi(5)));

    // ∫ (1-x)(1+x)^3 x^2 dx over (-1, 1) is 8/21
    let jac = gauss_rule(ClassicalFamily::jacobi(1.0, 3.0)?, 3)?;
    println!("Gauss-Jacobi (1,3), 3 nodes: {:.15} (8/21 = {:.15})", jac.integrate(|x| x * x), 8.0 / 21.0);

    // 20 nodes on a non-polynomial integrand: ∫ e^{-x} cos x dx = 1/2
    let lag20 = gauss_rule(ClassicalFamily::laguerre(0.0)?, 20)?;
    println!("Gauss-Laguerre, 20 nodes: ∫ cos(x) e^-x = {:.12}", lag20.integrate(f64::cos));
    for (x, w) in lag.iter() {
        println!("  node {x:>12.8}  weight {w:.8e}");
    }
    Ok(())
}
