//! Exact-arithmetic library for permutation and colored-permutation
//! statistics, gamma-type expansions of Eulerian and derangement
//! polynomials, Jacobi continued-fraction moments, and the r-colored
//! Laguerre-history bijection — with brute-force verifiers for every
//! identity at desk scale.

// coefficient indices are the mathematical objects here; indexed loops
// over them read better than iterator adapters
#![allow(clippy::needless_range_loop)]

pub mod cfrac;
pub mod colored;
pub mod enumerate;
pub mod laguerre;
pub mod perm;
pub mod poly;
pub mod verify;
