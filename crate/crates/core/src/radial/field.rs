use num_complex::Complex64;

use super::profile::RadialProfile;
use crate::angular::{build_ansatz, QuantumNumbers};
use crate::dk_algebra::{Column, DkBasis};
use crate::error::Result;
use crate::math::{cis, cos};
use crate::tetrad::{dk_operator, SpacetimePoint, SphericalTetrad};

/// `Φ` and its coordinate partials `∂_t, ∂_r, ∂_θ, ∂_φ` at `p`.
pub fn assemble_field(qn: &QuantumNumbers, profile: &RadialProfile, p: &SpacetimePoint) -> Result<(Column, [Column; 4])> {
    let ansatz = build_ansatz(*qn)?;
    let owned;
    let profile = if profile.df.is_some() {
        profile
    } else {
        owned = profile.with_fd_derivatives()?;
        &owned
    };
    let (f, df) = profile.interpolate(p.r)?;
    let time = cis(-qn.epsilon * p.t);
    let d = ansatz.angular(p.theta, p.phi);
    let d_theta = ansatz.angular_d_theta(p.theta, p.phi);
    let d_phi = ansatz.angular_d_phi(p.theta, p.phi);
    let field: Column = core::array::from_fn(|k| time * f[k] * d[k]);
    let partials = [
        field.map(|z| z * Complex64::new(0.0, -qn.epsilon)),
        core::array::from_fn(|k| time * df[k] * d[k]),
        core::array::from_fn(|k| time * f[k] * d_theta[k]),
        core::array::from_fn(|k| time * f[k] * d_phi[k]),
    ];
    Ok((field, partials))
}

/// The monopole potential `A_φ = κ cosθ` in coordinates `(t, r, θ, φ)`.
pub fn monopole_potential(qn: &QuantumNumbers, theta: f64) -> [f64; 4] {
    [0.0, 0.0, 0.0, qn.kappa.as_f64() * cos(theta)]
}

/// Full field equation on the assembled ansatz in the spherical tetrad.
pub fn dk_residual(qn: &QuantumNumbers, profile: &RadialProfile, p: &SpacetimePoint, mass: f64) -> Result<Column> {
    let (field, partials) = assemble_field(qn, profile, p)?;
    dk_operator(
        &SphericalTetrad,
        p,
        DkBasis::Cyclic,
        &field,
        &partials,
        &monopole_potential(qn, p.theta),
        mass,
    )
}
