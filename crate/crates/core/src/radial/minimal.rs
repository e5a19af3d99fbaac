use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::derive::radial_system;
use super::integrate::reconstruct;
use super::profile::{Provenance, RadialProfile};
use super::reduce::eliminate_auxiliary;
use crate::angular::{AnsatzKind, QuantumNumbers};
use crate::error::{Error, Result};
use crate::math::{cis, exp, sqrt, I, ONE, ZERO};

/// Which of the two independent solutions of `F'' + (ε² - m²)F = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Branch {
    /// `e^{ikr}` above threshold, `e^{-qr}` below it.
    #[default]
    Primary,
    /// `e^{-ikr}` above threshold, `e^{qr}` below it.
    Secondary,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Behaviour {
    /// `F = e^{±ikr}`, `k = √(ε² - m²)`.
    Oscillatory { k: f64 },
    /// `F = e^{-qr}`, `q = √(m² - ε²)`.
    Decaying { q: f64 },
    /// `F = e^{qr}`.
    Growing { q: f64 },
    /// `ε = m`: `F = r`.
    Linear,
}

/// Closed-form minimal-`j` state.
#[derive(Clone, PartialEq, Debug)]
pub struct MinimalSolution {
    pub qn: QuantumNumbers,
    pub mass: f64,
    pub branch: Branch,
    pub behaviour: Behaviour,
    /// The slot carrying `f = F/r` (0-based): `f2` for `κ > 0`, `f4` for `κ < 0`.
    pub slot: usize,
    pub profile: RadialProfile,
    pub warning: Option<String>,
}

impl MinimalSolution {
    /// Wave number or decay rate; zero on the linear branch.
    pub fn rate(&self) -> f64 {
        match self.behaviour {
            Behaviour::Oscillatory { k } => k,
            Behaviour::Decaying { q } | Behaviour::Growing { q } => q,
            Behaviour::Linear => 0.0,
        }
    }

    /// `[F, F', F'']` at `r`.
    pub fn radial_function(&self, r: f64) -> [Complex64; 3] {
        let sign = if self.branch == Branch::Primary { 1.0 } else { -1.0 };
        match self.behaviour {
            Behaviour::Oscillatory { k } => {
                let ik = I * (sign * k);
                let f = cis(sign * k * r);
                [f, ik * f, ik * ik * f]
            }
            Behaviour::Decaying { q } | Behaviour::Growing { q } => {
                let s = if matches!(self.behaviour, Behaviour::Decaying { .. }) { -q } else { q };
                let f = Complex64::new(exp(s * r), 0.0);
                [f, f * s, f * (s * s)]
            }
            Behaviour::Linear => [Complex64::new(r, 0.0), ONE, ZERO],
        }
    }

    /// `|F'' + (ε² - m²)F|` at `r`.
    pub fn scalar_residual(&self, r: f64) -> f64 {
        let [f, _, f2] = self.radial_function(r);
        let e = self.qn.epsilon;
        (f2 + f * (e * e - self.mass * self.mass)).norm()
    }
}

/// Closed-form solution for `j = |κ| - 1` on the given grid.
///
/// The carrying slot is `f = F/r`; the two companions follow from the
/// algebraic and derivative rows of the system.
pub fn minimal_j_solution(qn: &QuantumNumbers, mass: f64, grid: &[f64], branch: Branch) -> Result<MinimalSolution> {
    qn.validate()?;
    let kind = AnsatzKind::classify(qn.kappa, qn.j);
    let slot = match kind {
        AnsatzKind::MinimalPositive => 1,
        AnsatzKind::MinimalNegative => 3,
        other => {
            return Err(Error::InvalidQuantumNumbers(format!("j = {} is {other}, not minimal", qn.j)));
        }
    };
    if !(mass > 0.0 && qn.epsilon > 0.0) {
        return Err(Error::InvalidArgument("need eps > 0 and m > 0".into()));
    }
    let (e, m) = (qn.epsilon, mass);
    let gap = e * e - m * m;
    let (behaviour, warning) = if gap > 0.0 {
        (Behaviour::Oscillatory { k: sqrt(gap) }, None)
    } else if gap < 0.0 {
        let q = sqrt(-gap);
        let b = if branch == Branch::Primary { Behaviour::Decaying { q } } else { Behaviour::Growing { q } };
        (b, None)
    } else {
        (Behaviour::Linear, Some(String::from("eps = m: degenerate wave number, returning F = r")))
    };
    let mut sol = MinimalSolution {
        qn: *qn,
        mass,
        branch,
        behaviour,
        slot,
        profile: RadialProfile::new(Vec::from([1.0, 2.0]), alloc::vec![[ZERO; 10]; 2], Provenance::ClosedForm)?,
        warning,
    };
    let (mut f, mut df, mut d2f) = (Vec::new(), Vec::new(), Vec::new());
    for &r in grid {
        let [big, big1, big2] = sol.radial_function(r);
        let mut c = [[ZERO; 10]; 3];
        c[0][slot] = big / r;
        c[1][slot] = big1 / r - big / (r * r);
        c[2][slot] = big2 / r - big1 * (2.0 / (r * r)) + big * (2.0 / (r * r * r));
        f.push(c[0]);
        df.push(c[1]);
        d2f.push(c[2]);
    }
    let carrier = RadialProfile::new(grid.to_vec(), f, Provenance::ClosedForm)?.with_derivatives(df, Some(d2f))?;
    let reduced = eliminate_auxiliary(&radial_system(qn, mass)?)?;
    let mut profile = reconstruct(&reduced, &carrier)?;
    profile.provenance = Provenance::ClosedForm;
    sol.profile = profile;
    Ok(sol)
}
