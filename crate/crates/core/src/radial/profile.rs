use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::system::RadialSystem;
use crate::dk_algebra::Column;
use crate::error::{Error, Result};
use crate::math::{max_norm, ZERO};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Provenance {
    ClosedForm,
    Integrated,
    Reconstructed,
}

/// Samples of `f1..f10` on a radial grid, optionally with exact
/// derivatives from the producer.
#[derive(Clone, PartialEq, Debug)]
pub struct RadialProfile {
    pub r: Vec<f64>,
    pub f: Vec<Column>,
    pub df: Option<Vec<Column>>,
    pub d2f: Option<Vec<Column>>,
    pub provenance: Provenance,
}

const STENCIL: usize = 5;

/// Finite-difference weights for derivatives `0..=max_order` at `z` on
/// arbitrary nodes (Fornberg's recursion). `w[k][i]` multiplies `f(x_i)`.
pub fn fd_weights(z: f64, x: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = x.len();
    let mut w = alloc::vec![alloc::vec![0.0; n]; max_order + 1];
    w[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    w[k][i] = c1 * (k as f64 * w[k - 1][i - 1] - c5 * w[k][i - 1]) / c2;
                }
                w[0][i] = -c1 * c5 * w[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                w[k][j] = (c4 * w[k][j] - k as f64 * w[k - 1][j]) / c3;
            }
            w[0][j] = c4 * w[0][j] / c3;
        }
        c1 = c2;
    }
    w
}

impl RadialProfile {
    pub fn new(r: Vec<f64>, f: Vec<Column>, provenance: Provenance) -> Result<Self> {
        if r.len() < 2 || r.len() != f.len() {
            return Err(Error::InvalidArgument(format!("{} radii for {} samples", r.len(), f.len())));
        }
        if r[0] <= 0.0 || r.windows(2).any(|w| w[1] <= w[0]) || r.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument("grid must be positive and strictly increasing".into()));
        }
        if f.iter().flatten().any(|z| !z.is_finite()) {
            return Err(Error::InvalidArgument("profile values must be finite".into()));
        }
        Ok(RadialProfile { r, f, df: None, d2f: None, provenance })
    }

    pub fn with_derivatives(mut self, df: Vec<Column>, d2f: Option<Vec<Column>>) -> Result<Self> {
        let n = self.r.len();
        if df.len() != n || d2f.as_ref().is_some_and(|d| d.len() != n) {
            return Err(Error::InvalidArgument("derivative samples do not match the grid".into()));
        }
        self.df = Some(df);
        self.d2f = d2f;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    /// Largest modulus over all slots and radii.
    pub fn max_norm(&self) -> f64 {
        self.f.iter().map(|c| max_norm(c)).fold(0.0, f64::max)
    }

    /// Rescaled so the largest modulus is 1; a zero profile is unchanged.
    pub fn normalized(&self) -> RadialProfile {
        let n = self.max_norm();
        if n == 0.0 {
            return self.clone();
        }
        let scale = |v: &Vec<Column>| v.iter().map(|c| c.map(|z| z / n)).collect::<Vec<_>>();
        RadialProfile {
            r: self.r.clone(),
            f: scale(&self.f),
            df: self.df.as_ref().map(scale),
            d2f: self.d2f.as_ref().map(scale),
            provenance: self.provenance,
        }
    }

    fn stencil(&self, i: usize) -> usize {
        i.saturating_sub(STENCIL / 2).min(self.len() - STENCIL)
    }

    /// `f^(order)` at grid point `i` from a 5-point stencil.
    fn fd_at(&self, i: usize, order: usize) -> Column {
        let s = self.stencil(i);
        let w = fd_weights(self.r[i], &self.r[s..s + STENCIL], order);
        let mut out = [ZERO; 10];
        for (k, wk) in w[order].iter().enumerate() {
            for (o, v) in out.iter_mut().zip(self.f[s + k].iter()) {
                *o += v * *wk;
            }
        }
        out
    }

    /// Derivative samples up to `order`, stored when available and by
    /// finite differences otherwise.
    pub fn jets(&self, order: usize) -> Result<Vec<Vec<Column>>> {
        let stored = [Some(&self.f), self.df.as_ref(), self.d2f.as_ref()];
        let mut out = Vec::new();
        for k in 0..=order {
            match stored.get(k).copied().flatten() {
                Some(v) => out.push(v.clone()),
                None => {
                    if self.len() < STENCIL {
                        return Err(Error::GridTooCoarse(self.len()));
                    }
                    out.push((0..self.len()).map(|i| self.fd_at(i, k)).collect());
                }
            }
        }
        Ok(out)
    }

    /// Copy with `df` (and `d2f`) filled by finite differences where missing.
    pub fn with_fd_derivatives(&self) -> Result<RadialProfile> {
        let jets = self.jets(2)?;
        Ok(RadialProfile {
            df: Some(jets[1].clone()),
            d2f: Some(jets[2].clone()),
            ..self.clone()
        })
    }

    /// `(f, f')` at `r` by cubic Hermite interpolation between samples.
    pub fn interpolate(&self, r: f64) -> Result<(Column, Column)> {
        let df = self
            .df
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("profile has no derivative samples".into()))?;
        let (lo, hi) = (self.r[0], self.r[self.len() - 1]);
        if !(r >= lo && r <= hi) {
            return Err(Error::InvalidPoint(format!("r = {r} outside [{lo}, {hi}]")));
        }
        let i = match self.r.partition_point(|&x| x <= r) {
            0 => 0,
            k => (k - 1).min(self.len() - 2),
        };
        let h = self.r[i + 1] - self.r[i];
        let t = (r - self.r[i]) / h;
        let (t2, t3) = (t * t, t * t * t);
        let (h00, h10, h01, h11) = (2.0 * t3 - 3.0 * t2 + 1.0, t3 - 2.0 * t2 + t, -2.0 * t3 + 3.0 * t2, t3 - t2);
        let (d00, d10, d01, d11) = (6.0 * (t2 - t) / h, 3.0 * t2 - 4.0 * t + 1.0, -6.0 * (t2 - t) / h, 3.0 * t2 - 2.0 * t);
        let mut f = [ZERO; 10];
        let mut d = [ZERO; 10];
        for k in 0..10 {
            let (y0, y1, m0, m1) = (self.f[i][k], self.f[i + 1][k], df[i][k], df[i + 1][k]);
            f[k] = y0 * h00 + m0 * (h10 * h) + y1 * h01 + m1 * (h11 * h);
            d[k] = y0 * d00 + m0 * d10 + y1 * d01 + m1 * d11;
        }
        Ok((f, d))
    }
}

/// Left-hand sides of every row at every grid point, `[point][row]`.
pub fn residual_samples(sys: &RadialSystem, profile: &RadialProfile) -> Result<Vec<Vec<Complex64>>> {
    let order = sys.equations.iter().map(|e| e.max_order() as usize).max().unwrap_or(0);
    let jets = profile.jets(order)?;
    let stored = [profile.df.is_some(), profile.d2f.is_some()];
    let fd = (1..=order).any(|k| !stored[k - 1]);
    let range = if fd { 2..profile.len() - 2 } else { 0..profile.len() };
    Ok(range
        .map(|i| {
            let jet: Vec<Column> = jets.iter().map(|j| j[i]).collect();
            sys.equations.iter().map(|e| e.evaluate(&sys.params, profile.r[i], &jet)).collect()
        })
        .collect())
}

/// Largest `|row|` over the grid (interior points when derivatives come
/// from finite differences).
pub fn residual(sys: &RadialSystem, profile: &RadialProfile) -> Result<f64> {
    Ok(residual_samples(sys, profile)?
        .iter()
        .map(|v| max_norm(v))
        .fold(0.0, f64::max))
}
