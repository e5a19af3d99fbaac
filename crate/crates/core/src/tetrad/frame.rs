use alloc::string::String;

use super::point::{coords, SpacetimePoint};
use crate::lorentz::{LocalLorentz, Mat4};
use crate::math::{cos, sin};

/// A field of orthonormal tetrads `e^α_(a)` on flat spacetime written in
/// spherical coordinates. `tetrad(p)[a][α]` is `e^α_(a)`.
pub trait Frame {
    fn name(&self) -> String;

    fn tetrad(&self, p: &SpacetimePoint) -> Mat4;

    /// `∂_α e^β_(a)`, by central differences unless overridden.
    fn tetrad_derivative(&self, p: &SpacetimePoint, alpha: usize) -> Mat4 {
        let h = p.fd_step(alpha);
        let plus = self.tetrad(&p.shifted(alpha, h));
        let minus = self.tetrad(&p.shifted(alpha, -h));
        let mut out = [[0.0; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                out[a][b] = (plus[a][b] - minus[a][b]) / (2.0 * h);
            }
        }
        out
    }

    /// `g_{αβ}` of flat spacetime in spherical coordinates.
    fn metric(&self, p: &SpacetimePoint) -> Mat4 {
        let s = sin(p.theta);
        let mut g = [[0.0; 4]; 4];
        g[coords::T][coords::T] = 1.0;
        g[coords::R][coords::R] = -1.0;
        g[coords::THETA][coords::THETA] = -p.r * p.r;
        g[coords::PHI][coords::PHI] = -p.r * p.r * s * s;
        g
    }

    /// `∂_α g_{βγ}`.
    fn metric_derivative(&self, p: &SpacetimePoint, alpha: usize) -> Mat4 {
        let (s, c) = (sin(p.theta), cos(p.theta));
        let mut d = [[0.0; 4]; 4];
        match alpha {
            coords::R => {
                d[coords::THETA][coords::THETA] = -2.0 * p.r;
                d[coords::PHI][coords::PHI] = -2.0 * p.r * s * s;
            }
            coords::THETA => d[coords::PHI][coords::PHI] = -2.0 * p.r * p.r * s * c,
            _ => {}
        }
        d
    }
}

/// `e_(0) = ∂_t`, `e_(1) = ∂_θ / r`, `e_(2) = ∂_φ / (r sin θ)`, `e_(3) = ∂_r`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SphericalTetrad;

impl Frame for SphericalTetrad {
    fn name(&self) -> String {
        String::from("spherical")
    }

    fn tetrad(&self, p: &SpacetimePoint) -> Mat4 {
        let mut e = [[0.0; 4]; 4];
        e[0][coords::T] = 1.0;
        e[1][coords::THETA] = 1.0 / p.r;
        e[2][coords::PHI] = 1.0 / (p.r * sin(p.theta));
        e[3][coords::R] = 1.0;
        e
    }

    fn tetrad_derivative(&self, p: &SpacetimePoint, alpha: usize) -> Mat4 {
        let (s, c, r) = (sin(p.theta), cos(p.theta), p.r);
        let mut d = [[0.0; 4]; 4];
        match alpha {
            coords::R => {
                d[1][coords::THETA] = -1.0 / (r * r);
                d[2][coords::PHI] = -1.0 / (r * r * s);
            }
            coords::THETA => d[2][coords::PHI] = -c / (r * s * s),
            _ => {}
        }
        d
    }
}

/// The constant Cartesian triad `∂_x, ∂_y, ∂_z` in spherical components.
#[derive(Clone, Copy, Debug, Default)]
pub struct CartesianTetrad;

impl Frame for CartesianTetrad {
    fn name(&self) -> String {
        String::from("cartesian")
    }

    fn tetrad(&self, p: &SpacetimePoint) -> Mat4 {
        let (st, ct, sp, cp, r) = (sin(p.theta), cos(p.theta), sin(p.phi), cos(p.phi), p.r);
        let mut e = [[0.0; 4]; 4];
        e[0][coords::T] = 1.0;
        e[1][coords::R] = st * cp;
        e[1][coords::THETA] = ct * cp / r;
        e[1][coords::PHI] = -sp / (r * st);
        e[2][coords::R] = st * sp;
        e[2][coords::THETA] = ct * sp / r;
        e[2][coords::PHI] = cp / (r * st);
        e[3][coords::R] = ct;
        e[3][coords::THETA] = -st / r;
        e
    }
}

/// `e'^α_(a) = Λ_a^b(x) e^α_(b)`.
pub struct RotatedFrame<'a, F: ?Sized> {
    pub base: &'a F,
    pub lorentz: &'a LocalLorentz,
}

impl<F: Frame + ?Sized> Frame for RotatedFrame<'_, F> {
    fn name(&self) -> String {
        let mut s = self.base.name();
        s.push_str(" rotated by ");
        s.push_str(self.lorentz.name());
        s
    }

    fn tetrad(&self, p: &SpacetimePoint) -> Mat4 {
        crate::linalg::mul4(self.lorentz.at(p).matrix(), &self.base.tetrad(p))
    }
}
