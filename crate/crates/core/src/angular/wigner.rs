use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::math::{cis, cos, powi, sin, sqrt};

/// Labels of `d^j_{m' σ}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WignerDSpec {
    pub j: HalfInt,
    pub m_prime: HalfInt,
    pub sigma: HalfInt,
}

impl WignerDSpec {
    pub fn new(j: HalfInt, m_prime: HalfInt, sigma: HalfInt) -> Result<Self> {
        let spec = WignerDSpec { j, m_prime, sigma };
        let ok = j >= HalfInt::ZERO
            && m_prime.abs() <= j
            && sigma.abs() <= j
            && j.same_parity(m_prime)
            && j.same_parity(sigma);
        if ok {
            Ok(spec)
        } else {
            Err(Error::InvalidWigner { j, m_prime, sigma })
        }
    }
}

fn factorial(n: i32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * f64::from(k))
}

/// Terms `(coefficient, power of cos(θ/2), power of sin(θ/2))` of the sum.
fn terms(spec: WignerDSpec) -> impl Iterator<Item = (f64, i32, i32)> {
    let j = spec.j.twice();
    let mp = spec.m_prime.twice();
    let m = spec.sigma.twice();
    let (jpmp, jmmp, jpm, jmm) = ((j + mp) / 2, (j - mp) / 2, (j + m) / 2, (j - m) / 2);
    let norm = sqrt(factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm));
    let diff = (mp - m) / 2;
    let s_min = 0.max(-diff);
    let s_max = jpm.min(jmmp);
    (s_min..=s_max).map(move |s| {
        let sign = if (s - diff).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let den = factorial(jpm - s) * factorial(s) * factorial(diff + s) * factorial(jmmp - s);
        (sign * norm / den, j - diff - 2 * s, diff + 2 * s)
    })
}

/// `d^j_{m' σ}(θ)` by the explicit sum over `s` of
/// `(-1)^{σ-m'+s} √((j+m')!(j-m')!(j+σ)!(j-σ)!) / ((j+σ-s)! s! (m'-σ+s)! (j-m'-s)!)`
/// `× cos^{2j+σ-m'-2s}(θ/2) sin^{m'-σ+2s}(θ/2)`.
pub fn wigner_d(spec: WignerDSpec, theta: f64) -> f64 {
    let (c, s) = (cos(theta / 2.0), sin(theta / 2.0));
    terms(spec).map(|(k, p, q)| k * powi(c, p) * powi(s, q)).sum()
}

/// `∂_θ d^j_{m' σ}(θ)`.
pub fn wigner_d_derivative(spec: WignerDSpec, theta: f64) -> f64 {
    let (c, s) = (cos(theta / 2.0), sin(theta / 2.0));
    terms(spec)
        .map(|(k, p, q)| {
            let mut v = 0.0;
            if p > 0 {
                v -= f64::from(p) * powi(c, p - 1) * powi(s, q + 1);
            }
            if q > 0 {
                v += f64::from(q) * powi(c, p + 1) * powi(s, q - 1);
            }
            0.5 * k * v
        })
        .sum()
}

/// `D^j_{m' σ}(φ, θ, 0) = e^{-i m' φ} d^j_{m' σ}(θ)`.
pub fn wigner_big_d(spec: WignerDSpec, phi: f64, theta: f64) -> Complex64 {
    cis(-spec.m_prime.as_f64() * phi) * wigner_d(spec, theta)
}
