use alloc::format;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::tolerances;

/// Coordinate indices.
pub mod coords {
    pub const T: usize = 0;
    pub const R: usize = 1;
    pub const THETA: usize = 2;
    pub const PHI: usize = 3;
}

/// An event `(t, r, θ, φ)` with `r > 0` and `θ` kept away from the poles.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SpacetimePoint {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SpacetimePoint {
    pub fn new(t: f64, r: f64, theta: f64, phi: f64) -> Result<Self> {
        SpacetimePoint::with_guard(t, r, theta, phi, tolerances::POLE_GUARD)
    }

    /// Like [`SpacetimePoint::new`] with an explicit pole guard.
    pub fn with_guard(t: f64, r: f64, theta: f64, phi: f64, guard: f64) -> Result<Self> {
        if ![t, r, theta, phi].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidPoint(format!("non-finite coordinates ({t}, {r}, {theta}, {phi})")));
        }
        if r <= 0.0 {
            return Err(Error::InvalidPoint(format!("r = {r} must be positive")));
        }
        if theta < guard || theta > PI - guard {
            return Err(Error::InvalidPoint(format!("theta = {theta} is within {guard} of a pole")));
        }
        Ok(SpacetimePoint { t, r, theta, phi })
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.t, self.r, self.theta, self.phi]
    }

    /// The point with coordinate `alpha` shifted by `h`; used for differencing.
    pub fn shifted(&self, alpha: usize, h: f64) -> SpacetimePoint {
        let mut c = self.coords();
        c[alpha] += h;
        SpacetimePoint { t: c[0], r: c[1], theta: c[2], phi: c[3] }
    }

    /// The spatially reflected point `(t, r, π - θ, φ + π)`.
    pub fn antipode(&self) -> SpacetimePoint {
        SpacetimePoint { t: self.t, r: self.r, theta: PI - self.theta, phi: self.phi + PI }
    }

    /// Difference step for coordinate `alpha`.
    pub fn fd_step(&self, alpha: usize) -> f64 {
        tolerances::FD_STEP * (1.0 + self.coords()[alpha].abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards_reject_bad_points() {
        assert!(SpacetimePoint::new(0.0, 0.0, 1.0, 0.0).is_err());
        assert!(SpacetimePoint::new(0.0, 1.0, 1e-8, 0.0).is_err());
        assert!(SpacetimePoint::new(0.0, 1.0, PI, 0.0).is_err());
        assert!(SpacetimePoint::with_guard(0.0, 1.0, 1e-8, 0.0, 1e-9).is_ok());
    }
}
