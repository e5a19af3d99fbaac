use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::numeric::Compiled;
use super::profile::{Provenance, RadialProfile};
use super::reduce::eliminate_auxiliary;
use super::system::{RadialSystem, SystemOrder};
use crate::dk_algebra::Column;
use crate::error::{Error, Result};
use crate::math::ZERO;

/// `f1..f4` and their first derivatives at `r0`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct InitialData {
    pub r0: f64,
    pub values: [Complex64; 4],
    pub derivatives: [Complex64; 4],
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct IntegrationOptions {
    /// Output intervals between `r0` and `r1`.
    pub steps: usize,
    /// Each output interval is subdivided so no RK4 step exceeds this
    /// fraction of the current radius.
    pub max_relative_step: f64,
}

impl Default for IntegrationOptions {
    fn default() -> Self {
        IntegrationOptions { steps: 4096, max_relative_step: 0.01 }
    }
}

fn reduced(sys: &RadialSystem) -> Result<RadialSystem> {
    match sys.order {
        SystemOrder::Reduced4 => Ok(sys.clone()),
        SystemOrder::FirstOrder10 => eliminate_auxiliary(sys),
    }
}

/// Full column at `r0` from `f1..f4` data through the reconstruction rules.
pub fn initial_column(sys: &RadialSystem, init: &InitialData) -> Result<Column> {
    let red = reduced(sys)?;
    let mut jet = [[ZERO; 10]; 2];
    for k in 0..4 {
        if red.is_active(k) {
            jet[0][k] = init.values[k];
            jet[1][k] = init.derivatives[k];
        }
    }
    let mut f = jet[0];
    for rule in &red.rules {
        f[rule.slot] = rule.expr.evaluate(&red.params, init.r0, &jet);
    }
    Ok(f)
}

fn axpy(y: &[Complex64], h: f64, k: &[Complex64]) -> Vec<Complex64> {
    y.iter().zip(k).map(|(a, b)| a + b * h).collect()
}

/// Integrates from `f1..f4` data at `r0` to `r1`.
///
/// The differentiated slots of the first-order system are taken from the
/// reconstructed column at `r0`; algebraic slots follow from them, so
/// inconsistent data is projected onto the constraint rows.
pub fn integrate(sys: &RadialSystem, init: &InitialData, r1: f64, opts: &IntegrationOptions) -> Result<RadialProfile> {
    let column = initial_column(sys, init)?;
    integrate_column(sys, init.r0, &column, r1, opts)
}

/// Integrates from a full column at `r0`; only its differentiated slots
/// are used.
pub fn integrate_column(
    sys: &RadialSystem,
    r0: f64,
    column: &Column,
    r1: f64,
    opts: &IntegrationOptions,
) -> Result<RadialProfile> {
    if !(r0 > 0.0 && r1 > r0 && r1.is_finite()) {
        return Err(Error::InvalidArgument(format!("need 0 < r0 < r1, got r0 = {r0}, r1 = {r1}")));
    }
    if opts.steps == 0 || opts.max_relative_step.is_nan() || opts.max_relative_step <= 0.0 {
        return Err(Error::InvalidArgument("steps and max_relative_step must be positive".into()));
    }
    if column.iter().any(|z| !z.is_finite()) {
        return Err(Error::IntegrationFailure { last_good_r: r0 });
    }
    let compiled = Compiled::new(sys)?;
    let h = (r1 - r0) / opts.steps as f64;
    let mut y = compiled.state_of(column);
    let mut grid = Vec::with_capacity(opts.steps + 1);
    let mut jets: [Vec<Column>; 3] = Default::default();
    let mut push = |r: f64, y: &[Complex64]| -> Result<()> {
        let jet = compiled.jet(r, y, 2).map_err(|_| Error::IntegrationFailure { last_good_r: r })?;
        if jet.iter().flatten().any(|z| !z.is_finite()) {
            return Err(Error::IntegrationFailure { last_good_r: grid.last().copied().unwrap_or(r0) });
        }
        grid.push(r);
        for (k, j) in jet.into_iter().enumerate() {
            jets[k].push(j);
        }
        Ok(())
    };
    push(r0, &y)?;
    for step in 0..opts.steps {
        let a = r0 + h * step as f64;
        let b = if step + 1 == opts.steps { r1 } else { r0 + h * (step + 1) as f64 };
        let sub = libm::ceil((b - a) / (opts.max_relative_step * a)).max(1.0) as usize;
        let dh = (b - a) / sub as f64;
        for s in 0..sub {
            let r = a + dh * s as f64;
            let fail = |_| Error::IntegrationFailure { last_good_r: a };
            let k1 = compiled.rhs(r, &y).map_err(fail)?;
            let k2 = compiled.rhs(r + 0.5 * dh, &axpy(&y, 0.5 * dh, &k1)).map_err(fail)?;
            let k3 = compiled.rhs(r + 0.5 * dh, &axpy(&y, 0.5 * dh, &k2)).map_err(fail)?;
            let k4 = compiled.rhs(r + dh, &axpy(&y, dh, &k3)).map_err(fail)?;
            for i in 0..y.len() {
                y[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (dh / 6.0);
            }
            if y.iter().any(|z| !z.is_finite()) {
                return Err(Error::IntegrationFailure { last_good_r: a });
            }
        }
        push(b, &y)?;
    }
    let [f, df, d2f] = jets;
    RadialProfile::new(grid, f, Provenance::Integrated)?.with_derivatives(df, Some(d2f))
}

/// Rebuilds `f5..f10` from `f1..f4` samples (values and two derivatives).
pub fn reconstruct(sys: &RadialSystem, profile: &RadialProfile) -> Result<RadialProfile> {
    let red = reduced(sys)?;
    let jets = profile.jets(2)?;
    let derivative_rules: Vec<_> = red.rules.iter().map(|r| (r.slot, r.expr.clone(), r.expr.derivative())).collect();
    let mut f = Vec::with_capacity(profile.len());
    let mut df = Vec::with_capacity(profile.len());
    for i in 0..profile.len() {
        let mut jet: Vec<Column> = jets.iter().map(|j| j[i]).collect();
        for k in 4..10 {
            for j in jet.iter_mut() {
                j[k] = ZERO;
            }
        }
        let mut v = jet[0];
        let mut d = jet[1];
        for (slot, expr, dexpr) in &derivative_rules {
            v[*slot] = expr.evaluate(&red.params, profile.r[i], &jet);
            d[*slot] = dexpr.evaluate(&red.params, profile.r[i], &jet);
        }
        f.push(v);
        df.push(d);
    }
    RadialProfile::new(profile.r.clone(), f, Provenance::Reconstructed)?.with_derivatives(df, None)
}
