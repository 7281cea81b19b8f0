//! Laurent polynomials in `q` with exact integer coefficients, quantum
//! integers and binomials, multiset combinatorics, and cyclotomic
//! (root-of-unity) arithmetic.
//!
//! Exponents are stored internally in *half-units* so that the per-piece
//! rotational weights of the state sum (which are half-integers) multiply
//! monomially. Everything user-facing must have integer exponents; the
//! canonical renderer enforces this.

mod cyclo;
mod multiset;
mod poly;

pub use cyclo::{cyclo_reduce, cyclotomic_polynomial, CyclotomicElt};
pub use multiset::Multiset;
pub use poly::{qbinom, qint, LaurentPoly};
