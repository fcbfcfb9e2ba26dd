//! Exact-arithmetic toolkit for boundedness invariants of polarized toric
//! log Fano pairs: the gamma invariant of rational polytopes, alpha
//! invariants and minimal log discrepancies of toric pairs, the doubled
//! Sylvester sequence with its sharp bounds, the prefix-violation linear
//! Diophantine solver, and finiteness censuses for simplices and fans.
//!
//! All computation is over arbitrary-precision rationals; no floating point
//! is used anywhere, so every reported invariant is exact.

pub mod cli;
pub mod diophantine;
pub mod error;
pub mod linalg;
pub mod num;
pub mod polytope;
pub mod rank1;
pub mod simplex_bounds;
pub mod sylvester;
pub mod toric;

pub use error::{Error, Result};
pub use num::{Int, Rat};
