//! Construction and zero analysis of exceptional orthogonal polynomials.
//!
//! The crate covers the X1-Jacobi, X1-Laguerre and type-I Xm-Laguerre
//! families. Polynomials are evaluated through their closed relations to the
//! classical Jacobi and Laguerre polynomials, which keeps evaluation stable
//! where monomial coefficients would not be. On top of that sit
//!
//! - [`classical`]: classical Jacobi, Laguerre and Hermite polynomials, their
//!   zeros (Sturm bisection on the Jacobi matrix) and Gauss rules,
//! - [`xop`]: the exceptional families and the coefficient functions that tie
//!   them to the classical ones,
//! - [`zeros`]: bracketing root isolation and the regular/exceptional split,
//! - [`lab`]: executable checks for the interlacing, monotonicity, bound and
//!   limit properties of the zeros,
//! - [`oracle`]: an independent Gram-Schmidt reconstruction used for
//!   cross-validation,
//! - [`cli`]: the command-line front end used by the `xop-zeros` binary.
//!
//! ```
//! use xop_zeros::zeros::find_zeros_x1_laguerre;
//!
//! let set = find_zeros_x1_laguerre(2, 1.0).unwrap();
//! assert!((set.regular[0] - 3f64.sqrt()).abs() < 1e-12);
//! assert!((set.exceptional[0] + 3f64.sqrt()).abs() < 1e-12);
//! ```

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classical;
pub mod cli;
mod dd;
pub mod error;
pub mod lab;
pub mod oracle;
pub mod xop;
pub mod zeros;

pub use error::{Error, Result};

/// Degrees above this still work but recurrence magnitudes grow quickly;
/// the zero finders log a warning past it.
pub const MAX_RECOMMENDED_DEGREE: usize = 60;

/// Default absolute tolerance for root refinement.
pub const DEFAULT_TOL: f64 = 1e-12;
