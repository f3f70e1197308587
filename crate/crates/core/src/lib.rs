//! Exact synthesis of multi-qutrit unitaries.
//!
//! Unitaries over Z[1/3, w] are reduced to 1/2/3-level matrices, which are
//! routed into multiply-controlled {X, H, S, R} gates. Unitaries over
//! Z[1/3, z] (z a primitive 9th root of unity) go through a catalytic
//! embedding into Z[1/3, w] on one extra qutrit first. Every stage is
//! checkable by exact matrix arithmetic.

pub mod catalytic;
pub mod circuit;
pub mod cyclotomic;
pub mod error;
pub mod graycode;
pub mod io;
pub mod linalg;
pub mod pipeline;
pub mod random;
pub mod reducer;

pub use error::{Error, Result};
