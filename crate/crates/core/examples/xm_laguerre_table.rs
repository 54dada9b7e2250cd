//! Exceptional zeros of type-I X4-Laguerre polynomials at α = 1, printed as CSV.

use xop_zeros::lab::ExceptionalZeroTable;
use xop_zeros::zeros::ZeroFinder;

fn main() -> xop_zeros::Result<()> {
    let table = ExceptionalZeroTable::defaults(&ZeroFinder::default())?;
    table.write_csv(std::io::stdout().lock())?;

    // a wider table, with more degrees
    let wide = ExceptionalZeroTable::compute(3, 2.0, &[4, 8, 16, 32], &ZeroFinder::default())?;
    println!();
    wide.write_csv(std::io::stdout().lock())
}
