use num_complex::Complex64;

use super::connection::spin_connection;
use super::frame::{Frame, RotatedFrame};
use super::point::SpacetimePoint;
use crate::dk_algebra::{betas, DkBasis, DkMatrix};
use crate::error::{Error, Result};
use crate::layout::DIM;
use crate::lorentz::{lorentz_rep, LocalLorentz};

/// Worst residuals of the covariance checks over the sampled points.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct GaugeReport {
    /// `S β^a S^{-1} - Λ_b^a β^b`.
    pub beta: f64,
    /// Vector-to-bivector block of the same difference.
    pub kappa_block: f64,
    /// Bivector-to-vector block of the same difference.
    pub lambda_block: f64,
    /// `B'_α - S B_α S^{-1} - S ∂_α S^{-1}`.
    pub connection: f64,
    /// Largest pseudo-orthogonality residual of the sampled `Λ`.
    pub pseudo_orthogonality: f64,
}

impl GaugeReport {
    pub fn worst(&self) -> f64 {
        self.beta.max(self.kappa_block).max(self.lambda_block).max(self.connection)
    }
}

fn combination(beta: &[DkMatrix; 4], coeffs: [f64; 4]) -> DkMatrix {
    let mut acc = DkMatrix::zero(DkBasis::Cartesian);
    for (b, c) in beta.iter().zip(coeffs) {
        if c != 0.0 {
            acc = acc.add(&b.scale(Complex64::new(c, 0.0))).expect("cartesian");
        }
    }
    acc
}

/// Checks that the field equation keeps its form under the local Lorentz
/// transformation, at each point.
pub fn verify_gauge_covariance<F: Frame + ?Sized>(
    frame: &F,
    lorentz: &LocalLorentz,
    points: &[SpacetimePoint],
) -> Result<GaugeReport> {
    if points.is_empty() {
        return Err(Error::InvalidArgument(alloc::string::String::from("no sample points")));
    }
    let beta = betas(DkBasis::Cartesian);
    let rotated = RotatedFrame { base: frame, lorentz };
    let mut rep = GaugeReport::default();
    for p in points {
        let l = lorentz.at(p);
        rep.pseudo_orthogonality = rep.pseudo_orthogonality.max(l.residual());
        let m = l.matrix();
        let s = lorentz_rep(&l);
        let s_inv = s.inverse()?;
        for (a, ba) in beta.iter().enumerate() {
            let lhs = s.matmul(ba)?.matmul(&s_inv)?;
            let rhs = combination(&beta, core::array::from_fn(|b| m[b][a]));
            let diff = lhs.sub(&rhs)?;
            rep.beta = rep.beta.max(diff.max_abs());
            for i in 0..DIM {
                for j in 0..DIM {
                    let v = diff.get(i, j).norm();
                    if i < 4 && j >= 4 {
                        rep.kappa_block = rep.kappa_block.max(v);
                    } else if i >= 4 && j < 4 {
                        rep.lambda_block = rep.lambda_block.max(v);
                    }
                }
            }
        }
        let b = spin_connection(frame, p, DkBasis::Cartesian)?;
        let b_rot = spin_connection(&rotated, p, DkBasis::Cartesian)?;
        for al in 0..4 {
            let h = p.fd_step(al);
            let plus = lorentz_rep(&lorentz.at(&p.shifted(al, h))).inverse()?;
            let minus = lorentz_rep(&lorentz.at(&p.shifted(al, -h))).inverse()?;
            let d_s_inv = plus.sub(&minus)?.scale(Complex64::new(0.5 / h, 0.0));
            let expect = s.matmul(&b.b[al])?.matmul(&s_inv)?.add(&s.matmul(&d_s_inv)?)?;
            rep.connection = rep.connection.max(b_rot.b[al].sub(&expect)?.max_abs());
        }
    }
    Ok(rep)
}

