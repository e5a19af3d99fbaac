//! Tetrads on flat spacetime in spherical coordinates `(t, r, θ, φ)`,
//! their Ricci rotation coefficients and the spin connection of the
//! Duffin-Kemmer field.

mod connection;
mod frame;
mod gauge;
mod point;

pub use connection::{
    christoffel, dk_operator, orthonormality_residual, ricci_coefficients, spin_connection, tetrad_divergence,
    Christoffel, RicciCoefficients, SpinConnection,
};
pub use frame::{CartesianTetrad, Frame, RotatedFrame, SphericalTetrad};
pub use gauge::{verify_gauge_covariance, GaugeReport};
pub use point::{coords, SpacetimePoint};
