//! Zeros of classical Jacobi, Laguerre and Hermite polynomials.

use xop_zeros::classical::{zeros_classical, ClassicalFamily};

fn main() -> xop_zeros::Result<()> {
    let families = [
        ("Jacobi (1, 3)", ClassicalFamily::jacobi(1.0, 3.0)?),
        ("Laguerre (1)", ClassicalFamily::laguerre(1.0)?),
        ("Hermite", ClassicalFamily::hermite()),
    ];
    for (name, fam) in families {
        let z = zeros_classical(fam, 5)?;
        println!("{name:>14}, n = 5: {z:.8?}");
    }
    Ok(())
}
