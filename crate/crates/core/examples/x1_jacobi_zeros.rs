//! X1-Jacobi zeros: n - 1 in (-1, 1) and one outside, between b and γ_n·b.

use xop_zeros::xop::JacobiParams;
use xop_zeros::zeros::ZeroFinder;

fn main() -> xop_zeros::Result<()> {
    let finder = ZeroFinder::default();
    for (alpha, beta) in [(1.0, 3.0), (3.0, 1.0), (0.5, 2.5), (-0.5, -0.2)] {
        let p = JacobiParams::new(alpha, beta)?;
        println!("(α, β) = ({alpha}, {beta}): b = {:.5}, c = {:.5}", p.b(), p.c());
        for n in [1, 2, 5, 10] {
            let set = finder.x1_jacobi(n, &p)?;
            let g = p.gamma_n(n) * p.b();
            println!(
                "  n = {n:>2}: exceptional {:>10.6} (bounds {:.6}, {:.6}), {} regular zeros",
                set.exceptional[0],
                p.b().min(g),
                p.b().max(g),
                set.regular.len()
            );
        }
    }
    Ok(())
}
