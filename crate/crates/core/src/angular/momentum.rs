use num_complex::Complex64;

use crate::dk_algebra::Column;
use crate::halfint::HalfInt;
use crate::layout::{DIM, HELICITY};
use crate::math::{cos, sin, I};

/// Sign relating the eigenvalue of `J_3` on the ansatz to `m`.
pub const J3_SIGN: i32 = 1;

/// One Cartesian component of the total angular momentum in the monopole
/// field, acting on cyclic columns:
/// `J_1 = l_1 + cos φ/sin θ (i j^{12} - κ)`,
/// `J_2 = l_2 + sin φ/sin θ (i j^{12} - κ)`, `J_3 = l_3`, with
/// `l_1 = i(sin φ ∂_θ + cot θ cos φ ∂_φ)`, `l_2 = i(-cos φ ∂_θ + cot θ sin φ ∂_φ)`,
/// `l_3 = -i ∂_φ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MomentumComponent {
    pub axis: u8,
    pub kappa: HalfInt,
}

impl MomentumComponent {
    pub fn d_theta_coeff(&self, _theta: f64, phi: f64) -> Complex64 {
        match self.axis {
            1 => I * sin(phi),
            2 => -I * cos(phi),
            _ => Complex64::new(0.0, 0.0),
        }
    }

    pub fn d_phi_coeff(&self, theta: f64, phi: f64) -> Complex64 {
        let cot = cos(theta) / sin(theta);
        match self.axis {
            1 => I * cot * cos(phi),
            2 => I * cot * sin(phi),
            _ => -I,
        }
    }

    /// Factor multiplying `i j^{12} - κ`.
    pub fn helicity_coeff(&self, theta: f64, phi: f64) -> f64 {
        match self.axis {
            1 => cos(phi) / sin(theta),
            2 => sin(phi) / sin(theta),
            _ => 0.0,
        }
    }
}

pub fn total_momentum(kappa: HalfInt) -> [MomentumComponent; 3] {
    [1, 2, 3].map(|axis| MomentumComponent { axis, kappa })
}

/// `J_i Φ` at `(θ, φ)` by central differences with step `h`.
pub fn apply_total_momentum(
    comp: &MomentumComponent,
    field: &dyn Fn(f64, f64) -> Column,
    theta: f64,
    phi: f64,
    h: f64,
) -> Column {
    let centre = field(theta, phi);
    let (tp, tm) = (field(theta + h, phi), field(theta - h, phi));
    let (pp, pm) = (field(theta, phi + h), field(theta, phi - h));
    let (a, b) = (comp.d_theta_coeff(theta, phi), comp.d_phi_coeff(theta, phi));
    let w = comp.helicity_coeff(theta, phi);
    let kappa = comp.kappa.as_f64();
    core::array::from_fn(|k| {
        let dt = (tp[k] - tm[k]) / (2.0 * h);
        let dp = (pp[k] - pm[k]) / (2.0 * h);
        a * dt + b * dp + w * (f64::from(HELICITY[k]) - kappa) * centre[k]
    })
}

/// `J^2 Φ = Σ_i J_i (J_i Φ)` with nested central differences.
pub fn apply_total_momentum_squared(
    kappa: HalfInt,
    field: &dyn Fn(f64, f64) -> Column,
    theta: f64,
    phi: f64,
    h: f64,
) -> Column {
    let mut out = [Complex64::new(0.0, 0.0); DIM];
    for comp in total_momentum(kappa) {
        let inner = |t: f64, p: f64| apply_total_momentum(&comp, field, t, p, h);
        let v = apply_total_momentum(&comp, &inner, theta, phi, h);
        for k in 0..DIM {
            out[k] += v[k];
        }
    }
    out
}
