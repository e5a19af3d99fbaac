//! The vector-field (Proca) form of the equations in tetrad components.
//!
//! In the Cartesian basis the ten components split into a vector `Ψ_a` and
//! an antisymmetric tensor `Ψ_ab`, and the field equation becomes
//! `D^b Ψ_ab = m Ψ_a` together with `D_a Ψ_b - D_b Ψ_a = m Ψ_ab`, where
//! `D_a` is the tetrad covariant derivative plus the charge coupling.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::angular::{exact_ladder_lower, exact_ladder_raise, QuantumNumbers};
use crate::dk_algebra::{column_to_cartesian, Column};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::layout::{BIVECTOR_PAIRS, ETA};
use crate::math::{cos, sin, I, ZERO};
use crate::radial::{assemble_field, monopole_potential, RadialProfile};
use crate::tetrad::{ricci_coefficients, Frame, RicciCoefficients, SpacetimePoint, SphericalTetrad};

/// Tetrad components `Ψ_a` and `Ψ_ab` (pairs 01, 02, 03, 23, 31, 12).
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct ProcaComponents {
    pub vector: [Complex64; 4],
    pub bivector: [Complex64; 6],
}

impl ProcaComponents {
    pub fn from_cartesian(phi: &Column) -> Self {
        ProcaComponents {
            vector: core::array::from_fn(|a| phi[a]),
            bivector: core::array::from_fn(|k| phi[4 + k]),
        }
    }

    /// `Ψ_ab` for any ordered pair, antisymmetry included.
    pub fn tensor(&self, a: usize, b: usize) -> Complex64 {
        BIVECTOR_PAIRS
            .iter()
            .enumerate()
            .find_map(|(k, &(p, q))| {
                if (p, q) == (a, b) {
                    Some(self.bivector[k])
                } else if (q, p) == (a, b) {
                    Some(-self.bivector[k])
                } else {
                    None
                }
            })
            .unwrap_or(ZERO)
    }
}

/// Cyclic column to Proca components through the basis change.
pub fn dk_to_proca(cyclic: &Column) -> ProcaComponents {
    ProcaComponents::from_cartesian(&column_to_cartesian(cyclic))
}

/// Monopole strength `g` paired with the coupling `κ` of the angular part.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct MonopoleConfig {
    pub g: f64,
    pub kappa: HalfInt,
}

impl MonopoleConfig {
    /// Natural units: `g = κ`.
    pub fn from_kappa(kappa: HalfInt) -> Result<Self> {
        MonopoleConfig::new(kappa.as_f64(), kappa)
    }

    pub fn new(g: f64, kappa: HalfInt) -> Result<Self> {
        if kappa == HalfInt::ZERO {
            return Err(Error::InvalidQuantumNumbers("kappa = 0 is excluded".into()));
        }
        if g.is_nan() || (g - kappa.as_f64()).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!("g = {g} does not match kappa = {kappa}")));
        }
        Ok(MonopoleConfig { g, kappa })
    }
}

/// Tetrad components `A^a` and `F^{ab}` of the monopole field.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct MonopoleField {
    pub potential: [f64; 4],
    pub strength: [[f64; 4]; 4],
}

/// `A^2 = -g cosθ/(r sinθ)`, `F^{12} = -g/r²`, everything else zero.
pub fn monopole_field(cfg: &MonopoleConfig, p: &SpacetimePoint) -> MonopoleField {
    let mut potential = [0.0; 4];
    potential[2] = -cfg.g * cos(p.theta) / (p.r * sin(p.theta));
    let mut strength = [[0.0; 4]; 4];
    strength[1][2] = -cfg.g / (p.r * p.r);
    strength[2][1] = cfg.g / (p.r * p.r);
    MonopoleField { potential, strength }
}

/// Tetrad covariant derivatives `D_c Ψ_b` and `D_c Ψ_ab` (`[c][..]`).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ProcaDerivatives {
    pub vector: [[Complex64; 4]; 4],
    pub tensor: [[[Complex64; 4]; 4]; 4],
}

/// `D_c Ψ_b = ∂_(c) Ψ_b + iA_(c) Ψ_b + η^{dd} γ_{bdc} Ψ_d`, and the same
/// rule on each index of `Ψ_ab`. `partials[α]` are coordinate derivatives,
/// `potential` the covariant coordinate components `A_α`.
pub fn covariant_derivatives<F: Frame + ?Sized>(
    frame: &F,
    p: &SpacetimePoint,
    field: &ProcaComponents,
    partials: &[ProcaComponents; 4],
    potential: &[f64; 4],
) -> Result<ProcaDerivatives> {
    let e = frame.tetrad(p);
    let gamma: RicciCoefficients = ricci_coefficients(frame, p)?;
    let mut vector = [[ZERO; 4]; 4];
    let mut tensor = [[[ZERO; 4]; 4]; 4];
    for c in 0..4 {
        let dir = |get: &dyn Fn(&ProcaComponents) -> Complex64| -> Complex64 {
            (0..4).map(|al| get(&partials[al]) * e[c][al]).sum::<Complex64>()
        };
        let a_c: f64 = (0..4).map(|al| e[c][al] * potential[al]).sum();
        for b in 0..4 {
            let conn: Complex64 = (0..4).map(|d| field.vector[d] * (ETA[d] * gamma.get(b, d, c))).sum();
            vector[c][b] = dir(&|x| x.vector[b]) + I * a_c * field.vector[b] + conn;
        }
        for a in 0..4 {
            for b in 0..4 {
                let conn: Complex64 = (0..4)
                    .map(|d| {
                        field.tensor(d, b) * (ETA[d] * gamma.get(a, d, c))
                            + field.tensor(a, d) * (ETA[d] * gamma.get(b, d, c))
                    })
                    .sum();
                tensor[c][a][b] = dir(&|x| x.tensor(a, b)) + I * a_c * field.tensor(a, b) + conn;
            }
        }
    }
    Ok(ProcaDerivatives { vector, tensor })
}

/// Left-hand sides of the two Proca equations.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ProcaResidual {
    /// `D^b Ψ_ab - m Ψ_a`.
    pub vector: [Complex64; 4],
    /// `D_a Ψ_b - D_b Ψ_a - m Ψ_ab` on the stored pairs.
    pub tensor: [Complex64; 6],
}

impl ProcaResidual {
    pub fn worst(&self) -> f64 {
        self.vector.iter().chain(self.tensor.iter()).map(|z| z.norm()).fold(0.0, f64::max)
    }
}

pub fn proca_equations(d: &ProcaDerivatives, field: &ProcaComponents, mass: f64) -> ProcaResidual {
    ProcaResidual {
        vector: core::array::from_fn(|a| {
            (0..4).map(|b| d.tensor[b][a][b] * ETA[b]).sum::<Complex64>() - field.vector[a] * mass
        }),
        tensor: core::array::from_fn(|k| {
            let (a, b) = BIVECTOR_PAIRS[k];
            d.vector[a][b] - d.vector[b][a] - field.bivector[k] * mass
        }),
    }
}

/// `D^a Ψ_a`.
pub fn divergence(d: &ProcaDerivatives) -> Complex64 {
    (0..4).map(|a| d.vector[a][a] * ETA[a]).sum()
}

/// Proca components of the assembled ansatz and their coordinate partials.
pub fn proca_field(qn: &QuantumNumbers, profile: &RadialProfile, p: &SpacetimePoint) -> Result<(ProcaComponents, [ProcaComponents; 4])> {
    let (field, partials) = assemble_field(qn, profile, p)?;
    Ok((dk_to_proca(&field), partials.map(|c| dk_to_proca(&c))))
}

/// Proca equations with the monopole coupling on the assembled ansatz.
pub fn proca_residual(qn: &QuantumNumbers, profile: &RadialProfile, points: &[SpacetimePoint], mass: f64) -> Result<Vec<ProcaResidual>> {
    points
        .iter()
        .map(|p| {
            let (field, partials) = proca_field(qn, profile, p)?;
            let d = covariant_derivatives(&SphericalTetrad, p, &field, &partials, &monopole_potential(qn, p.theta))?;
            Ok(proca_equations(&d, &field, mass))
        })
        .collect()
}

/// Pointwise generalized Lorentz condition
/// `m D^a Ψ_a - i F^{12} Ψ_12` on the assembled ansatz.
pub fn lorentz_condition_pointwise(qn: &QuantumNumbers, profile: &RadialProfile, p: &SpacetimePoint, mass: f64) -> Result<Complex64> {
    let (field, partials) = proca_field(qn, profile, p)?;
    let d = covariant_derivatives(&SphericalTetrad, p, &field, &partials, &monopole_potential(qn, p.theta))?;
    let cfg = MonopoleConfig::from_kappa(qn.kappa)?;
    let f = monopole_field(&cfg, p);
    Ok(divergence(&d) * mass - I * f.strength[1][2] * field.tensor(1, 2))
}

/// Radial form of the generalized Lorentz condition at grid point `i`:
/// `m[-iε f1 - (f3' + 2 f3/r) - √2(c f2 + d f4)/r] + iκ f9/r²`, with
/// `c = u(κ)` and `d = l(κ)` (zero where the ladder leaves `|σ| ≤ j`).
pub fn lorentz_condition_residual(qn: &QuantumNumbers, profile: &RadialProfile, i: usize, mass: f64) -> Result<Complex64> {
    if i >= profile.len() {
        return Err(Error::InvalidArgument(format!("grid index {i} out of range")));
    }
    let jets = profile.jets(1)?;
    let (f, df, r) = (jets[0][i], jets[1][i], profile.r[i]);
    let s2 = crate::math::sqrt(2.0);
    let c = exact_ladder_lower(qn.j, qn.kappa).to_f64();
    let d = exact_ladder_raise(qn.j, qn.kappa).to_f64();
    let bracket = -I * qn.epsilon * f[0] - (df[2] + f[2] * (2.0 / r)) - (f[1] * c + f[3] * d) * (s2 / r);
    Ok(bracket * mass + I * qn.kappa.as_f64() * f[8] / (r * r))
}

/// Largest radial Lorentz residual over the grid.
pub fn lorentz_condition_max(qn: &QuantumNumbers, profile: &RadialProfile, mass: f64) -> Result<f64> {
    (0..profile.len())
        .map(|i| lorentz_condition_residual(qn, profile, i, mass).map(|z| z.norm()))
        .try_fold(0.0, |acc, v| v.map(|v| f64::max(acc, v)))
}
