use num_complex::Complex64;

use super::ansatz::FieldAnsatz;
use super::recursion::{ladder_lower, ladder_raise};
use crate::dk_algebra::{build_beta, build_j, Column, DkBasis, LorentzIndex};
use crate::halfint::HalfInt;
use crate::layout::SIGMA_OFFSET;
use crate::math::{cos, sin, I};

/// `Σ^κ Φ = [i β^1 ∂_θ + β^2 (i ∂_φ + (i j^{12} - κ) cos θ)/sin θ] Φ` at
/// `t = 0`, for `Φ_k = f_k D_{σ_k}`, with the cyclic matrices.
pub fn sigma_apply(ansatz: &FieldAnsatz, f: &Column, theta: f64, phi: f64) -> Column {
    let idx = |a: u8| LorentzIndex::new(a).expect("index < 4");
    let b1 = build_beta(idx(1), DkBasis::Cyclic);
    let b2 = build_beta(idx(2), DkBasis::Cyclic);
    let ij12 = build_j(idx(1), idx(2), DkBasis::Cyclic).scale(I);
    let d = ansatz.angular(theta, phi);
    let dt = ansatz.angular_d_theta(theta, phi);
    let dp = ansatz.angular_d_phi(theta, phi);
    let field: Column = core::array::from_fn(|k| f[k] * d[k]);
    let d_theta: Column = core::array::from_fn(|k| f[k] * dt[k]);
    let d_phi: Column = core::array::from_fn(|k| f[k] * dp[k]);
    let kappa = ansatz.qn.kappa.as_f64();
    let (s, c) = (sin(theta), cos(theta));
    let helicity = ij12.apply(&field);
    let inner: Column = core::array::from_fn(|k| (I * d_phi[k] + (helicity[k] - kappa * field[k]) * c) / s);
    let first = b1.apply(&d_theta);
    let second = b2.apply(&inner);
    core::array::from_fn(|k| I * first[k] + second[k])
}

/// Coefficient of `D_{σ_r}` in row `r` of `Σ^κ Φ`, from the recursions:
/// `√2 (-(c f5 + d f7), i c f9, -i c f8 + i d f10, -i d f9, c f1, 0, d f1,
/// -i c f3, i c f2 - i d f4, i d f3)` with `c = u(κ)`, `d = l(κ)`.
pub fn sigma_pattern(ansatz: &FieldAnsatz, f: &Column) -> Column {
    let s2 = core::f64::consts::SQRT_2;
    let c = s2 * ladder_lower(ansatz.qn.j, ansatz.qn.kappa);
    let d = s2 * ladder_raise(ansatz.qn.j, ansatz.qn.kappa);
    let g: Column = core::array::from_fn(|k| if ansatz.is_active(k) { f[k] } else { Complex64::new(0.0, 0.0) });
    [
        -(c * g[4] + d * g[6]),
        I * c * g[8],
        -I * c * g[7] + I * d * g[9],
        -I * d * g[8],
        c * g[0],
        Complex64::new(0.0, 0.0),
        d * g[0],
        -I * c * g[2],
        I * c * g[1] - I * d * g[3],
        I * d * g[2],
    ]
}

/// `sigma_pattern` with every row multiplied by its `D_{σ_r}(θ, φ)`.
pub fn sigma_expected(ansatz: &FieldAnsatz, f: &Column, theta: f64, phi: f64) -> Column {
    let p = sigma_pattern(ansatz, f);
    core::array::from_fn(|r| {
        let sigma = ansatz.qn.kappa + HalfInt::from_int(SIGMA_OFFSET[r]);
        p[r] * ansatz.d(sigma, theta, phi)
    })
}

/// Row coefficients of `Σ^κ Φ` as commonly tabulated for generic `j`.
pub fn tabulated_sigma_generic(c: f64, d: f64, f: &Column) -> Column {
    let s2 = core::f64::consts::SQRT_2;
    let col = [
        -(c * f[4] + d * f[6]),
        -I * c * f[8],
        -I * c * f[7] + I * d * f[9],
        -I * d * f[8],
        c * f[0],
        Complex64::new(0.0, 0.0),
        d * f[0],
        -I * c * f[2],
        I * c * f[1] - I * d * f[3],
        I * d * f[2],
    ];
    col.map(|z| s2 * z)
}

/// Row coefficients tabulated for `j = κ > 0`, where `√2 c = √κ`.
pub fn tabulated_sigma_top_positive(kappa: f64, f: &Column) -> Column {
    let k = crate::math::sqrt(kappa);
    let zero = Complex64::new(0.0, 0.0);
    [
        -k * f[4],
        I * k * f[8],
        -I * k * f[7],
        zero,
        k * f[0],
        zero,
        zero,
        -I * k * f[2],
        I * k * f[1],
        zero,
    ]
}

/// Rows (1-based) where [`tabulated_sigma_generic`] departs from
/// [`sigma_pattern`].
pub const TABULATED_SIGMA_DEFECTS: [usize; 1] = [2];

