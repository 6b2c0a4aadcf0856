pub mod bipoly;
pub mod catalog;
pub mod engines;
pub mod error;
pub mod families;
pub mod matroid;

pub use bipoly::{BiPoly, PolyMatrix, UniPoly};
pub use error::{Error, Result};
