//! Exact arithmetic used to derive and eliminate the radial equations.
//!
//! Coefficients live in `Q(i, √2, √3, ...)`; the energy `ε`, the mass `m`
//! and the radius `r` stay symbolic.

mod complex;
mod poly;
mod radical;

pub use complex::ExactComplex;
pub use poly::{Monomial, Poly, RPoly};
pub use radical::Radical;
