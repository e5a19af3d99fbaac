//! Lorentz matrices acting on tetrad indices and their spin-1 representation.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use num_complex::Complex64;

use crate::dk_algebra::{DkBasis, DkMatrix};
use crate::error::{Error, Result};
use crate::layout::{BIVECTOR_PAIRS, DIM, ETA};
use crate::math::{cos, sin, sqrt};
use crate::tolerances;

pub type Mat4 = [[f64; 4]; 4];

/// `Λ_a^b`, stored as `m[a][b]`, with `Λ^T η Λ = η`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct LorentzMatrix(Mat4);

/// Largest entry of `Λ^T η Λ - η`.
pub fn pseudo_orthogonality_residual(m: &Mat4) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..4 {
        for j in 0..4 {
            let v: f64 = (0..4).map(|k| m[k][i] * ETA[k] * m[k][j]).sum();
            let e = if i == j { ETA[i] } else { 0.0 };
            worst = worst.max((v - e).abs());
        }
    }
    worst
}

impl LorentzMatrix {
    pub fn new(m: Mat4) -> Result<Self> {
        let res = pseudo_orthogonality_residual(&m);
        if res > tolerances::LORENTZ {
            return Err(Error::NotLorentz(res));
        }
        Ok(LorentzMatrix(m))
    }

    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = 1.0;
        }
        LorentzMatrix(m)
    }

    /// Rotation by `angle` about the unit spatial `axis`.
    pub fn rotation(axis: [f64; 3], angle: f64) -> Result<Self> {
        let n = sqrt(axis.iter().map(|x| x * x).sum());
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidArgument(String::from("rotation axis must be nonzero")));
        }
        let [x, y, z] = axis.map(|v| v / n);
        let (c, s) = (cos(angle), sin(angle));
        let t = 1.0 - c;
        let r = [
            [c + x * x * t, x * y * t - z * s, x * z * t + y * s],
            [y * x * t + z * s, c + y * y * t, y * z * t - x * s],
            [z * x * t - y * s, z * y * t + x * s, c + z * z * t],
        ];
        let mut m = [[0.0; 4]; 4];
        m[0][0] = 1.0;
        for i in 0..3 {
            for j in 0..3 {
                m[i + 1][j + 1] = r[i][j];
            }
        }
        LorentzMatrix::new(m)
    }

    /// Boost with the given rapidity along the unit spatial `direction`.
    pub fn boost(direction: [f64; 3], rapidity: f64) -> Result<Self> {
        let n = sqrt(direction.iter().map(|x| x * x).sum());
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidArgument(String::from("boost direction must be nonzero")));
        }
        let u = direction.map(|v| v / n);
        let ch = libm::cosh(rapidity);
        let sh = libm::sinh(rapidity);
        let mut m = [[0.0; 4]; 4];
        m[0][0] = ch;
        for i in 0..3 {
            m[0][i + 1] = sh * u[i];
            m[i + 1][0] = sh * u[i];
            for j in 0..3 {
                m[i + 1][j + 1] = if i == j { 1.0 } else { 0.0 } + (ch - 1.0) * u[i] * u[j];
            }
        }
        LorentzMatrix::new(m)
    }

    /// Rotation taking the Cartesian triad onto `(e_θ, e_φ, e_r)` at `(θ, φ)`.
    pub fn spherical(theta: f64, phi: f64) -> Self {
        let (st, ct, sp, cp) = (sin(theta), cos(theta), sin(phi), cos(phi));
        LorentzMatrix([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, ct * cp, ct * sp, -st],
            [0.0, -sp, cp, 0.0],
            [0.0, st * cp, st * sp, ct],
        ])
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn compose(&self, rhs: &LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(crate::linalg::mul4(&self.0, &rhs.0))
    }

    /// `η Λ^T η`.
    pub fn inverse(&self) -> LorentzMatrix {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = ETA[i] * self.0[j][i] * ETA[j];
            }
        }
        LorentzMatrix(m)
    }

    pub fn residual(&self) -> f64 {
        pseudo_orthogonality_residual(&self.0)
    }
}

/// `S(Λ) = Λ ⊕ M(Λ)` in the Cartesian basis, with
/// `M_{(ab),(mn)} = Λ_a^m Λ_b^n - Λ_a^n Λ_b^m` on the bivector slots.
pub fn lorentz_rep(l: &LorentzMatrix) -> DkMatrix {
    let m = &l.0;
    let mut e = [[Complex64::new(0.0, 0.0); DIM]; DIM];
    for i in 0..4 {
        for j in 0..4 {
            e[i][j] = Complex64::new(m[i][j], 0.0);
        }
    }
    for (i, &(a, b)) in BIVECTOR_PAIRS.iter().enumerate() {
        for (k, &(p, q)) in BIVECTOR_PAIRS.iter().enumerate() {
            e[4 + i][4 + k] = Complex64::new(m[a][p] * m[b][q] - m[a][q] * m[b][p], 0.0);
        }
    }
    DkMatrix::from_entries(e, DkBasis::Cartesian, "S")
}

/// A Lorentz transformation that depends on the spacetime point.
pub struct LocalLorentz {
    name: String,
    map: Box<dyn Fn(&crate::tetrad::SpacetimePoint) -> LorentzMatrix + Send + Sync>,
}

impl LocalLorentz {
    pub fn new(
        name: impl Into<String>,
        map: impl Fn(&crate::tetrad::SpacetimePoint) -> LorentzMatrix + Send + Sync + 'static,
    ) -> Self {
        LocalLorentz { name: name.into(), map: Box::new(map) }
    }

    pub fn constant(name: impl Into<String>, l: LorentzMatrix) -> Self {
        LocalLorentz::new(name, move |_| l)
    }

    pub fn at(&self, p: &crate::tetrad::SpacetimePoint) -> LorentzMatrix {
        (self.map)(p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for LocalLorentz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalLorentz").field("name", &self.name).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boosts_and_rotations_are_lorentz() {
        let b = LorentzMatrix::boost([1.0, 2.0, -0.5], 0.7).unwrap();
        let r = LorentzMatrix::rotation([0.3, 0.1, 1.0], 1.1).unwrap();
        assert!(b.compose(&r).residual() < 1e-12);
        assert!(LorentzMatrix::spherical(0.4, 2.0).residual() < 1e-14);
    }

    #[test]
    fn rejects_non_lorentz() {
        let mut m = *LorentzMatrix::identity().matrix();
        m[1][1] = 2.0;
        assert!(matches!(LorentzMatrix::new(m), Err(Error::NotLorentz(_))));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let b = LorentzMatrix::boost([0.0, 1.0, 1.0], -0.4).unwrap();
        let p = b.compose(&b.inverse());
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((p.matrix()[i][j] - e).abs() < 1e-14);
            }
        }
    }
}
