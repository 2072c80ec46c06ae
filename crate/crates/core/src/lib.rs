//! Exact Poincaré polynomials, symmetric-group character series and
//! representation-stability diagnostics for generalized configuration spaces
//! of i-acyclic spaces.

pub mod charseries;
pub mod combinat;
pub mod error;
pub mod limits;
pub mod confspace;
pub mod polyarith;
pub mod repstab;
pub mod selftest;

pub use error::{Error, Result};
pub use limits::Limits;
pub use polyarith::{falling_product, BiPoly, LaurentPoly};
