use num_bigint::BigInt;
use num_rational::BigRational;

use super::wigner::{wigner_d, wigner_d_derivative, WignerDSpec};
use crate::error::{Error, Result};
use crate::exact::Radical;
use crate::halfint::HalfInt;
use crate::math::{cos, sin, sqrt};

/// `(j + σ)(j - σ + 1) / 4` as an exact rational.
fn lower_radicand(j: HalfInt, sigma: HalfInt) -> BigRational {
    let a = BigInt::from((j + sigma).twice());
    let b = BigInt::from((j - sigma).twice() + 2);
    BigRational::new(a * b, BigInt::from(16))
}

fn raise_radicand(j: HalfInt, sigma: HalfInt) -> BigRational {
    lower_radicand(j, -sigma)
}

fn in_range(j: HalfInt, sigma: HalfInt) -> bool {
    sigma.abs() <= j && sigma.same_parity(j)
}

/// `u(σ) = ½ √((j + σ)(j - σ + 1))`, the weight of `D_{σ-1}` in
/// `∂_θ D_σ`; zero when `D_σ` does not exist.
pub fn exact_ladder_lower(j: HalfInt, sigma: HalfInt) -> Radical {
    if !in_range(j, sigma) {
        return Radical::zero();
    }
    Radical::sqrt_rational(&lower_radicand(j, sigma)).expect("non-negative in range")
}

/// `l(σ) = ½ √((j - σ)(j + σ + 1))`, the weight of `D_{σ+1}`.
pub fn exact_ladder_raise(j: HalfInt, sigma: HalfInt) -> Radical {
    if !in_range(j, sigma) {
        return Radical::zero();
    }
    Radical::sqrt_rational(&raise_radicand(j, sigma)).expect("non-negative in range")
}

pub fn ladder_lower(j: HalfInt, sigma: HalfInt) -> f64 {
    exact_ladder_lower(j, sigma).to_f64()
}

pub fn ladder_raise(j: HalfInt, sigma: HalfInt) -> f64 {
    exact_ladder_raise(j, sigma).to_f64()
}

/// The four coefficients of the angular recursions around `σ = κ`:
/// `a = ½√((j+κ-1)(j-κ+2))`, `b = ½√((j-κ-1)(j+κ+2))`,
/// `c = ½√((j+κ)(j-κ+1))`, `d = ½√((j-κ)(j+κ+1))`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RecursionCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

pub fn recursion_coeffs(j: HalfInt, kappa: HalfInt) -> Result<RecursionCoeffs> {
    let one = HalfInt::ONE;
    let radicands = [
        lower_radicand(j, kappa - one),
        raise_radicand(j, kappa + one),
        lower_radicand(j, kappa),
        raise_radicand(j, kappa),
    ];
    let mut out = [0.0; 4];
    for (o, q) in out.iter_mut().zip(&radicands) {
        *o = Radical::sqrt_rational(q).ok_or(Error::NegativeRadicand { j, kappa })?.to_f64();
    }
    Ok(RecursionCoeffs { a: out[0], b: out[1], c: out[2], d: out[3] })
}

/// Residuals of the derivative and angular relations for
/// `σ = κ - 1, κ, κ + 1`; `None` where `D_σ` does not exist.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct RecursionResiduals {
    pub derivative: [Option<f64>; 3],
    pub angular: [Option<f64>; 3],
}

impl RecursionResiduals {
    pub fn worst(&self) -> f64 {
        self.derivative.iter().chain(&self.angular).flatten().fold(0.0, |acc, &x| acc.max(x))
    }
}

fn d_sigma(j: HalfInt, m: HalfInt, sigma: HalfInt, theta: f64) -> f64 {
    match WignerDSpec::new(j, -m, sigma) {
        Ok(s) => wigner_d(s, theta),
        Err(_) => 0.0,
    }
}

fn d_sigma_prime(j: HalfInt, m: HalfInt, sigma: HalfInt, theta: f64) -> f64 {
    match WignerDSpec::new(j, -m, sigma) {
        Ok(s) => wigner_d_derivative(s, theta),
        Err(_) => 0.0,
    }
}

/// Checks, for `D_σ = D^j_{-m,σ}(φ, θ, 0)`,
/// `∂_θ D_σ = u(σ) D_{σ-1} - l(σ) D_{σ+1}` and
/// `(-m - σ cos θ)/sin θ D_σ = -u(σ) D_{σ-1} - l(σ) D_{σ+1}`.
pub fn verify_recursions(j: HalfInt, kappa: HalfInt, m: HalfInt, theta: f64) -> Result<RecursionResiduals> {
    if !m.same_parity(j) || m.abs() > j || !kappa.same_parity(j) {
        return Err(Error::InvalidQuantumNumbers(alloc::format!("j = {j}, m = {m}, kappa = {kappa}")));
    }
    let (s, c) = (sin(theta), cos(theta));
    let mut out = RecursionResiduals::default();
    for (k, shift) in [-1, 0, 1].into_iter().enumerate() {
        let sigma = kappa + HalfInt::from_int(shift);
        if !in_range(j, sigma) {
            continue;
        }
        let d = |x: HalfInt| d_sigma(j, m, x, theta);
        let u = ladder_lower(j, sigma);
        let l = ladder_raise(j, sigma);
        let below = d(sigma - HalfInt::ONE);
        let above = d(sigma + HalfInt::ONE);
        let lhs_d = d_sigma_prime(j, m, sigma, theta);
        out.derivative[k] = Some((lhs_d - (u * below - l * above)).abs());
        let lhs_a = (-m.as_f64() - sigma.as_f64() * c) / s * d(sigma);
        out.angular[k] = Some((lhs_a - (-u * below - l * above)).abs());
    }
    Ok(out)
}

/// Residuals of the paired combinations that isolate `D_κ`:
/// `∂_θ D_{κ-1} - (m + (κ-1)cos θ)/sin θ D_{κ-1} + √((j-κ+1)(j+κ)) D_κ`,
/// then `∂_θ D_{κ+1} ∓ (m + (κ+1)cos θ)/sin θ D_{κ+1} ± √((j+κ+1)(j-κ)) D_κ`
/// with the upper and the lower signs, in that order. The first and the
/// last vanish identically.
pub fn verify_paired_relations(j: HalfInt, kappa: HalfInt, m: HalfInt, theta: f64) -> Option<[f64; 3]> {
    let one = HalfInt::ONE;
    if !(in_range(j, kappa - one) && in_range(j, kappa) && in_range(j, kappa + one)) {
        return None;
    }
    let (s, c) = (sin(theta), cos(theta));
    let (jf, k, mf) = (j.as_f64(), kappa.as_f64(), m.as_f64());
    let dk = d_sigma(j, m, kappa, theta);
    let lower = d_sigma_prime(j, m, kappa - one, theta) - (mf + (k - 1.0) * c) / s * d_sigma(j, m, kappa - one, theta)
        + sqrt((jf - k + 1.0) * (jf + k)) * dk;
    let derivative = d_sigma_prime(j, m, kappa + one, theta);
    let angular = (mf + (k + 1.0) * c) / s * d_sigma(j, m, kappa + one, theta);
    let root = sqrt((jf + k + 1.0) * (jf - k)) * dk;
    Some([lower.abs(), (derivative - angular + root).abs(), (derivative + angular - root).abs()])
}
