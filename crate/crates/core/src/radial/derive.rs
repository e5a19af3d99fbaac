use alloc::format;
use alloc::vec::Vec;

use super::system::{Equation, RadialParams, RadialSystem, SystemOrder};
use crate::angular::{build_ansatz, exact_ladder_lower, exact_ladder_raise, QuantumNumbers};
use crate::dk_algebra::{exact_beta, DkBasis, ExactMatrix, LorentzIndex};
use crate::error::{Error, Result};
use crate::exact::{ExactComplex, Poly};
use crate::halfint::HalfInt;
use crate::layout::{DIM, SIGMA_OFFSET};

struct Operator {
    beta0: ExactMatrix,
    beta3: ExactMatrix,
    /// `β^1 j^{31} + β^2 j^{32}`.
    spin: ExactMatrix,
    /// `i β^1 - β^2`, paired with `D_{σ-1}`.
    lower: ExactMatrix,
    /// `-i β^1 - β^2`, paired with `D_{σ+1}`.
    raise: ExactMatrix,
}

fn operator() -> Operator {
    let b = |a: u8| exact_beta(LorentzIndex::new(a).expect("index < 4"), DkBasis::Cyclic);
    let (b0, b1, b2, b3) = (b(0), b(1), b(2), b(3));
    let j = |x: &ExactMatrix, y: &ExactMatrix| x.mul(y).sub(&y.mul(x));
    let spin = b1.mul(&j(&b3, &b1)).add(&b2.mul(&j(&b3, &b2)));
    let i = ExactComplex::i();
    let ib1 = b1.scale(&i);
    let lower = ib1.sub(&b2);
    let raise = ib1.scale(&ExactComplex::from_int(-1)).sub(&b2);
    Operator { beta0: b0, beta3: b3, spin, lower, raise }
}

fn sigma_of(kappa: HalfInt, slot: usize) -> HalfInt {
    kappa + HalfInt::from_int(SIGMA_OFFSET[slot])
}

/// Separates the field equation on the ansatz for `(κ, j)` and returns one
/// equation per surviving row, with exact coefficients in `ε`, `m` and `r`.
///
/// Every row `r` collects
/// `ε β^0 f + i β^3 f' + (i/r)(β^1 j^{31} + β^2 j^{32}) f`
/// `+ (1/r)[(iβ^1 - β^2) u(σ) + (-iβ^1 - β^2) l(σ)] f - m f`,
/// and a contribution whose angular index differs from the row's is a
/// separation failure.
pub fn radial_system(qn: &QuantumNumbers, mass: f64) -> Result<RadialSystem> {
    let ansatz = build_ansatz(*qn)?;
    if !mass.is_finite() {
        return Err(Error::InvalidArgument(format!("mass = {mass} must be finite")));
    }
    let op = operator();
    let (kappa, j) = (qn.kappa, qn.j);
    let inv_r = Poly::r_pow(-1);
    let i = ExactComplex::i();
    let mut equations = Vec::new();
    let mut trivial_rows = Vec::new();
    for row in 0..DIM {
        let row_sigma = sigma_of(kappa, row);
        let mut eq = Equation::new(row);
        for slot in ansatz.active_slots() {
            let sigma = sigma_of(kappa, slot);
            let mut push = |target: HalfInt, order: u8, coeff: Poly, what: &str| -> Result<()> {
                if coeff.is_zero() {
                    return Ok(());
                }
                if target != row_sigma {
                    return Err(Error::SeparationFailure(format!(
                        "{what} couples slot {} (D_{target}) into row {} (D_{row_sigma})",
                        slot + 1,
                        row + 1
                    )));
                }
                if target.abs() <= j {
                    eq.add(slot, order, &coeff);
                }
                Ok(())
            };
            push(sigma, 0, Poly::epsilon().scale(op.beta0.get(row, slot)), "beta0")?;
            push(sigma, 1, Poly::constant(&i * op.beta3.get(row, slot)), "beta3")?;
            push(sigma, 0, inv_r.scale(&(&i * op.spin.get(row, slot))), "spin term")?;
            let u = ExactComplex::real(exact_ladder_lower(j, sigma));
            let l = ExactComplex::real(exact_ladder_raise(j, sigma));
            push(sigma - HalfInt::ONE, 0, inv_r.scale(&(op.lower.get(row, slot) * &u)), "lowering")?;
            push(sigma + HalfInt::ONE, 0, inv_r.scale(&(op.raise.get(row, slot) * &l)), "raising")?;
            if row == slot {
                push(sigma, 0, Poly::mass().scale_int(-1), "mass")?;
            }
        }
        if row_sigma.abs() > j || eq.is_zero() {
            trivial_rows.push(row);
        } else {
            equations.push(eq);
        }
    }
    let vacant_slots = (0..DIM).filter(|&k| !ansatz.is_active(k)).collect();
    Ok(RadialSystem {
        kappa,
        j,
        kind: ansatz.kind,
        order: SystemOrder::FirstOrder10,
        params: RadialParams { epsilon: qn.epsilon, mass },
        source: equations.clone(),
        equations,
        trivial_rows,
        vacant_slots,
        rules: Vec::new(),
    })
}
