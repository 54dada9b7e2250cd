//! The type-I Xm family at m = 1 and the X1-Laguerre family share their zeros.

use xop_zeros::zeros::{find_zeros_x1_laguerre, find_zeros_xm_laguerre};

fn main() -> xop_zeros::Result<()> {
    for alpha in [0.5, 1.0, 4.0] {
        for n in [2, 5, 9] {
            let x1 = find_zeros_x1_laguerre(n, alpha)?.all_zeros();
            let xm = find_zeros_xm_laguerre(1, n, alpha)?.all_zeros();
            let diff = x1.iter().zip(&xm).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            println!("α = {alpha}, n = {n}: max |Δ| = {diff:.2e}");
        }
    }
    Ok(())
}
