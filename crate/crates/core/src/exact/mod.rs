//! Arbitrary-precision scalars and the generic algebra layer: polynomials,
//! the cyclotomic quotient ring, prime fields, truncated power series, and
//! exact linear algebra. Everything downstream builds on this module; there
//! is no floating point anywhere.

pub mod cyclo;
pub mod fp;
pub mod nullspace;
pub mod poly;
pub mod ring;
pub mod trunc;

pub use cyclo::CycElem;
pub use fp::{is_prime_u64, Fp};
pub use nullspace::{rat_nullspace, FpKernel, RatKernel};
pub use poly::Poly;
pub use ring::{int, parse_int, parse_rat, rat, rat_string, Int, Rat, Ring};
pub use trunc::{series_inv_geometric, series_mul, TruncSeries};
