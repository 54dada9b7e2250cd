//! Regular and exceptional zeros of X1-Laguerre polynomials as α grows.

use xop_zeros::xop::LaguerreParams;
use xop_zeros::zeros::ZeroFinder;

fn main() -> xop_zeros::Result<()> {
    let finder = ZeroFinder::default();
    let n = 6;
    for alpha in [0.5, 1.0, 2.0, 5.0, 10.0] {
        let set = finder.x1_laguerre(n, &LaguerreParams::new(alpha)?)?;
        println!(
            "α = {alpha:>4}: exceptional {:>9.5} in [{:.1}, {:.1}), regular {:.5?}",
            set.exceptional[0],
            -alpha - 1.0,
            -alpha,
            set.regular
        );
    }
    Ok(())
}
