//! Duffin-Kemmer spin-1 field on flat spacetime in spherical tetrads, with a
//! magnetic monopole background.
//!
//! The crate is `no_std` and only needs `alloc`. Floating point math goes
//! through `libm` so results are identical with and without `std`.

#![no_std]
#![forbid(unsafe_code)]
// Tensor components are clearer with explicit indices.
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod angular;
pub mod dk_algebra;
pub mod error;
pub mod exact;
pub mod halfint;
pub mod layout;
pub mod linalg;
pub mod lorentz;
pub mod math;
pub mod proca;
pub mod radial;
pub mod symmetry;
pub mod tetrad;
pub mod tolerances;

pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use num_complex::Complex64;
