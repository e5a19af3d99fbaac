use core::fmt;

use num_complex::Complex64;

use super::numbers::QuantumNumbers;
use super::wigner::{wigner_big_d, wigner_d_derivative, WignerDSpec};
use crate::dk_algebra::Column;
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::layout::{DIM, SIGMA_OFFSET};
use crate::math::{cis, I};

/// Which slots survive for given `(κ, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AnsatzKind {
    /// `j ≥ |κ| + 1`: all ten slots.
    Generic,
    /// `j = κ > 0`: slots with `σ = κ + 1` vanish.
    TopPositive,
    /// `j = -κ > 0`: slots with `σ = κ - 1` vanish.
    TopNegative,
    /// `j = κ - 1`: only `f2, f5, f8` (`σ = κ - 1`).
    MinimalPositive,
    /// `j = -κ - 1`: only `f4, f7, f10` (`σ = κ + 1`).
    MinimalNegative,
}

impl AnsatzKind {
    pub fn classify(kappa: HalfInt, j: HalfInt) -> AnsatzKind {
        let k = kappa.abs();
        let positive = kappa > HalfInt::ZERO;
        if j >= k + HalfInt::ONE {
            AnsatzKind::Generic
        } else if j == k {
            if positive {
                AnsatzKind::TopPositive
            } else {
                AnsatzKind::TopNegative
            }
        } else if positive {
            AnsatzKind::MinimalPositive
        } else {
            AnsatzKind::MinimalNegative
        }
    }

    pub fn is_minimal(self) -> bool {
        matches!(self, AnsatzKind::MinimalPositive | AnsatzKind::MinimalNegative)
    }

    pub fn name(self) -> &'static str {
        match self {
            AnsatzKind::Generic => "generic",
            AnsatzKind::TopPositive => "top-positive",
            AnsatzKind::TopNegative => "top-negative",
            AnsatzKind::MinimalPositive => "minimal-positive",
            AnsatzKind::MinimalNegative => "minimal-negative",
        }
    }
}

impl fmt::Display for AnsatzKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Φ_k = e^{-iεt} f_k(r) D_{σ_k}(θ, φ)` with `D_σ = D^j_{-m,σ}(φ, θ, 0)`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct FieldAnsatz {
    pub qn: QuantumNumbers,
    pub kind: AnsatzKind,
    /// Angular index of each slot, `None` where the slot vanishes.
    pub sigma: [Option<HalfInt>; DIM],
}

pub fn build_ansatz(qn: QuantumNumbers) -> Result<FieldAnsatz> {
    qn.validate()?;
    let kind = AnsatzKind::classify(qn.kappa, qn.j);
    let sigma = core::array::from_fn(|k| {
        let s = qn.kappa + HalfInt::from_int(SIGMA_OFFSET[k]);
        (s.abs() <= qn.j).then_some(s)
    });
    Ok(FieldAnsatz { qn, kind, sigma })
}

impl FieldAnsatz {
    pub fn is_active(&self, slot: usize) -> bool {
        self.sigma[slot].is_some()
    }

    pub fn active_slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..DIM).filter(|&k| self.is_active(k))
    }

    fn spec(&self, sigma: HalfInt) -> WignerDSpec {
        WignerDSpec::new(self.qn.j, -self.qn.m, sigma).expect("validated ansatz")
    }

    /// `D_σ(θ, φ)`, or zero when `|σ| > j`.
    pub fn d(&self, sigma: HalfInt, theta: f64, phi: f64) -> Complex64 {
        if sigma.abs() > self.qn.j {
            return Complex64::new(0.0, 0.0);
        }
        wigner_big_d(self.spec(sigma), phi, theta)
    }

    /// `D_{σ_k}(θ, φ)` for every slot.
    pub fn angular(&self, theta: f64, phi: f64) -> Column {
        core::array::from_fn(|k| match self.sigma[k] {
            Some(s) => wigner_big_d(self.spec(s), phi, theta),
            None => Complex64::new(0.0, 0.0),
        })
    }

    /// `∂_θ D_{σ_k}(θ, φ)` for every slot.
    pub fn angular_d_theta(&self, theta: f64, phi: f64) -> Column {
        let phase = cis(self.qn.m.as_f64() * phi);
        core::array::from_fn(|k| match self.sigma[k] {
            Some(s) => phase * wigner_d_derivative(self.spec(s), theta),
            None => Complex64::new(0.0, 0.0),
        })
    }

    /// `∂_φ D_{σ_k}(θ, φ) = i m D_{σ_k}`.
    pub fn angular_d_phi(&self, theta: f64, phi: f64) -> Column {
        let m = self.qn.m.as_f64();
        self.angular(theta, phi).map(|z| I * m * z)
    }

    /// The field at `(t, θ, φ)` for radial values `f`.
    pub fn evaluate(&self, f: &Column, t: f64, theta: f64, phi: f64) -> Column {
        let time = cis(-self.qn.epsilon * t);
        let d = self.angular(theta, phi);
        core::array::from_fn(|k| time * f[k] * d[k])
    }
}
