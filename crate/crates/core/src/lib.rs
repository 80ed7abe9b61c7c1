//! Exact Fuss-Catalan triangles `T^p(n, k)`, whose rows sum to the
//! Fuss-Catalan numbers `C(pn+1, n) / (pn+1)`, together with brute-force
//! combinatorial models that reproduce them: constrained lattice paths,
//! noncrossing matchings, and double noncrossing partitions counted by boxes.

pub mod arith;
pub mod error;
pub mod lattice;
pub mod partition;
pub mod render;
pub mod sequences;
pub mod triangle;
pub mod verify;

/// Every count in this crate is an exact signed big integer.
pub type ArbInt = num_bigint::BigInt;

pub use arith::{binomial, falling_binomial, fuss_catalan, verify_binomial_identity_e4};
pub use error::{Error, Result};
pub use triangle::{
    row_sum, signed_row_sum, triangle_alternating, triangle_closed_form, triangle_closed_form_cell,
    triangle_convolution, Method, Triangle, TriangleParams,
};
