//! Polynomials over finite fields and over the integers.
mod factor;
mod field;
mod int;
mod resultant;

pub use factor::{factor, max_irreducible_degree, Factorization};
pub use field::{evaluate, FieldPolynomial};
pub use int::{reduce_mod_p, IntPolynomial};
pub use resultant::resultant;
