use num_complex::Complex64;

use super::frame::Frame;
use super::point::SpacetimePoint;
use crate::dk_algebra::{build_beta, build_j, Column, DkBasis, DkMatrix, LorentzIndex};
use crate::error::{Error, Result};
use crate::layout::{DIM, ETA};
use crate::linalg::invert4;
use crate::lorentz::Mat4;

/// `Γ^λ_{μν}` stored as `[λ][μ][ν]`.
pub type Christoffel = [[[f64; 4]; 4]; 4];

/// `Γ^λ_{μν} = ½ g^{λσ}(∂_μ g_{σν} + ∂_ν g_{σμ} - ∂_σ g_{μν})`.
pub fn christoffel<F: Frame + ?Sized>(frame: &F, p: &SpacetimePoint) -> Result<Christoffel> {
    let g_inv = invert4(&frame.metric(p))?;
    let dg: [Mat4; 4] = core::array::from_fn(|a| frame.metric_derivative(p, a));
    let mut out = [[[0.0; 4]; 4]; 4];
    for (l, out_l) in out.iter_mut().enumerate() {
        for mu in 0..4 {
            for nu in 0..4 {
                out_l[mu][nu] = 0.5
                    * (0..4)
                        .map(|s| g_inv[l][s] * (dg[mu][s][nu] + dg[nu][s][mu] - dg[s][mu][nu]))
                        .sum::<f64>();
            }
        }
    }
    Ok(out)
}

/// Largest entry of `g_{αβ} e^α_(a) e^β_(b) - η_{ab}`.
pub fn orthonormality_residual<F: Frame + ?Sized>(frame: &F, p: &SpacetimePoint) -> f64 {
    let g = frame.metric(p);
    let e = frame.tetrad(p);
    let mut worst = 0.0_f64;
    for a in 0..4 {
        for b in 0..4 {
            let mut v = 0.0;
            for al in 0..4 {
                for be in 0..4 {
                    v += g[al][be] * e[a][al] * e[b][be];
                }
            }
            let expect = if a == b { ETA[a] } else { 0.0 };
            worst = worst.max((v - expect).abs());
        }
    }
    worst
}

/// `∇_β e_(a)α`, stored as `[a][β][α]`.
fn covariant_lowered_derivative<F: Frame + ?Sized>(frame: &F, p: &SpacetimePoint) -> Result<[[[f64; 4]; 4]; 4]> {
    let g = frame.metric(p);
    let e = frame.tetrad(p);
    let gamma = christoffel(frame, p)?;
    let lower = |a: usize, al: usize| (0..4).map(|c| g[al][c] * e[a][c]).sum::<f64>();
    let mut out = [[[0.0; 4]; 4]; 4];
    for be in 0..4 {
        let de = frame.tetrad_derivative(p, be);
        let dg = frame.metric_derivative(p, be);
        for a in 0..4 {
            for al in 0..4 {
                let partial: f64 = (0..4).map(|c| dg[al][c] * e[a][c] + g[al][c] * de[a][c]).sum();
                let conn: f64 = (0..4).map(|l| gamma[l][be][al] * lower(a, l)).sum();
                out[a][be][al] = partial - conn;
            }
        }
    }
    Ok(out)
}

/// `γ_{abc} = -(∇_β e_(a)α) e^α_(b) e^β_(c)`, stored as `[a][b][c]`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RicciCoefficients(pub [[[f64; 4]; 4]; 4]);

impl RicciCoefficients {
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.0[a][b][c]
    }

    /// Largest `|γ_{abc} + γ_{bac}|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    worst = worst.max((self.0[a][b][c] + self.0[b][a][c]).abs());
                }
            }
        }
        worst
    }
}

pub fn ricci_coefficients<F: Frame + ?Sized>(frame: &F, p: &SpacetimePoint) -> Result<RicciCoefficients> {
    let nabla = covariant_lowered_derivative(frame, p)?;
    let e = frame.tetrad(p);
    let mut out = [[[0.0; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let mut v = 0.0;
                for al in 0..4 {
                    for be in 0..4 {
                        v += nabla[a][be][al] * e[b][al] * e[c][be];
                    }
                }
                out[a][b][c] = -v;
            }
        }
    }
    Ok(RicciCoefficients(out))
}

/// `B_α = ½ j^{ab} e^β_(a) ∇_α e_(b)β` for `α = t, r, θ, φ`.
#[derive(Clone, PartialEq, Debug)]
pub struct SpinConnection {
    pub b: [DkMatrix; 4],
}

pub fn spin_connection<F: Frame + ?Sized>(frame: &F, p: &SpacetimePoint, basis: DkBasis) -> Result<SpinConnection> {
    let nabla = covariant_lowered_derivative(frame, p)?;
    let e = frame.tetrad(p);
    let gens: [[DkMatrix; 4]; 4] = core::array::from_fn(|a| {
        core::array::from_fn(|b| build_j(LorentzIndex::ALL[a], LorentzIndex::ALL[b], basis))
    });
    let b = core::array::from_fn(|al| {
        let mut acc = DkMatrix::zero(basis);
        for a in 0..4 {
            for bb in 0..4 {
                if a == bb {
                    continue;
                }
                let w: f64 = (0..4).map(|be| e[a][be] * nabla[bb][al][be]).sum();
                if w != 0.0 {
                    acc = acc.add(&gens[a][bb].scale(Complex64::new(0.5 * w, 0.0))).expect("same basis");
                }
            }
        }
        acc.with_label("B")
    });
    Ok(SpinConnection { b })
}

/// `e^{(a)α}_{;α}` for `a = 0..3`.
pub fn tetrad_divergence<F: Frame + ?Sized>(frame: &F, p: &SpacetimePoint) -> Result<[f64; 4]> {
    let e = frame.tetrad(p);
    let gamma = christoffel(frame, p)?;
    let de: [Mat4; 4] = core::array::from_fn(|al| frame.tetrad_derivative(p, al));
    Ok(core::array::from_fn(|a| {
        let partial: f64 = (0..4).map(|al| de[al][a][al]).sum();
        let conn: f64 = (0..4)
            .map(|al| (0..4).map(|l| gamma[al][al][l] * e[a][l]).sum::<f64>())
            .sum();
        ETA[a] * (partial + conn)
    }))
}

/// `i β^a e^α_(a) (∂_α + B_α + i A_α) Φ - m Φ`.
///
/// `partials[α]` holds `∂_α Φ` and `potential[α]` the covariant `A_α`.
pub fn dk_operator<F: Frame + ?Sized>(
    frame: &F,
    p: &SpacetimePoint,
    basis: DkBasis,
    field: &Column,
    partials: &[Column; 4],
    potential: &[f64; 4],
    mass: f64,
) -> Result<Column> {
    if !mass.is_finite() {
        return Err(Error::InvalidArgument(alloc::string::String::from("mass must be finite")));
    }
    let e = frame.tetrad(p);
    let conn = spin_connection(frame, p, basis)?;
    let i = Complex64::new(0.0, 1.0);
    let mut covariant = [[Complex64::new(0.0, 0.0); DIM]; 4];
    for (al, cov) in covariant.iter_mut().enumerate() {
        let bphi = conn.b[al].apply(field);
        for k in 0..DIM {
            cov[k] = partials[al][k] + bphi[k] + i * potential[al] * field[k];
        }
    }
    let mut out = [Complex64::new(0.0, 0.0); DIM];
    for (a, beta) in LorentzIndex::ALL.iter().map(|&a| build_beta(a, basis)).enumerate() {
        let mut tangent = [Complex64::new(0.0, 0.0); DIM];
        for (al, cov) in covariant.iter().enumerate() {
            if e[a][al] != 0.0 {
                for k in 0..DIM {
                    tangent[k] += e[a][al] * cov[k];
                }
            }
        }
        let bt = beta.apply(&tangent);
        for k in 0..DIM {
            out[k] += i * bt[k];
        }
    }
    for k in 0..DIM {
        out[k] -= mass * field[k];
    }
    Ok(out)
}
