//! Exact arithmetic engine for MOY graph state sums and the derived
//! `gl(N|M)` quantum link invariants.
//!
//! The crate is organised around three independent evaluators for closed
//! MOY graphs (a brute-force coloring enumerator, a transfer-matrix sweep
//! and a representation-theoretic one built from explicit intertwiners),
//! plus the link-level layer: crossing expansion, the invariant `P_{N|M}`,
//! the renormalized invariant `Q_{N|1}` of braid closures and its
//! root-of-unity comparison against the normalized colored Jones
//! polynomial.

pub mod checks;
pub mod error;
pub mod link_calc;
pub mod moy_core;
pub mod qlaurent;
pub mod rt_oracle;
pub mod state_sum;

pub use error::{Error, Issue};
pub use qlaurent::{qbinom, qint, CyclotomicElt, LaurentPoly, Multiset};
