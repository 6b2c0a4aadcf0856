//! Exact polynomial arithmetic over the integers.

mod format;
mod matrix;
mod poly;
mod uni;

pub use matrix::PolyMatrix;
pub use poly::{BiPoly, Exponents};
pub use uni::UniPoly;

pub(crate) use poly::powers;
