//! Exact toolkit for the Cox ring of the space of complete rank-two
//! collineations `X(2, c, d)`: polynomial and Gröbner machinery, rational
//! cones and fans, and the concrete constructions built on them.

pub mod error;
pub mod collineation;
pub mod exact;
pub mod geometry;
pub mod groebner;
pub mod polyring;

pub use error::{Error, Result};
