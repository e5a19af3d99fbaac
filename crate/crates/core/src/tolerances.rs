//! Numerical tolerances shared by the checks in this crate.

/// Identities that hold exactly in exact or dense floating arithmetic.
pub const IDENTITY: f64 = 1e-12;
/// Angular recursions evaluated through the Wigner sum formula.
pub const RECURSION: f64 = 1e-10;
/// Identities involving one level of finite differencing.
pub const FINITE_DIFFERENCE: f64 = 1e-8;
/// Nested finite differences, such as the squared total momentum.
pub const NESTED_FINITE_DIFFERENCE: f64 = 1e-6;
/// Pseudo-orthogonality of a Lorentz matrix.
pub const LORENTZ: f64 = 1e-10;
/// Residual of a field equation built from an integrated radial profile.
pub const FIELD_RESIDUAL: f64 = 1e-5;
/// Residual of the radial system itself on an integrated profile.
pub const RADIAL_RESIDUAL: f64 = 1e-6;
/// Proca equations evaluated with finite differences on a profile.
pub const PROCA_RESIDUAL: f64 = 1e-4;
/// Default distance kept from the poles of the sphere.
pub const POLE_GUARD: f64 = 1e-6;
/// Relative step for central finite differences.
pub const FD_STEP: f64 = 1e-5;
/// Smallest accepted mass.
pub const MIN_MASS: f64 = 1e-14;
