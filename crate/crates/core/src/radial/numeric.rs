//! First-order systems specialised to numeric `(ε, m)`.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::system::{RadialSystem, SystemOrder};
use crate::dk_algebra::Column;
use crate::error::{Error, Result};
use crate::exact::RPoly;
use crate::linalg::solve_complex;
use crate::math::ZERO;

type Row = Vec<(usize, u8, RPoly)>;

/// A first-order system split into differential rows (those with a
/// derivative term) and algebraic rows, with row derivatives precompiled.
#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    pub active: Vec<usize>,
    pub dynamic_slots: Vec<usize>,
    pub algebraic_slots: Vec<usize>,
    dynamic_rows: Vec<usize>,
    algebraic_rows: Vec<usize>,
    /// `derived[k][row]`: the `k`-th `r`-derivative of each row.
    derived: Vec<Vec<Row>>,
}

pub(crate) const MAX_JET: usize = 2;

impl Compiled {
    pub fn new(sys: &RadialSystem) -> Result<Compiled> {
        let sys = match sys.order {
            SystemOrder::FirstOrder10 => sys.clone(),
            SystemOrder::Reduced4 => sys.first_order(),
        };
        if sys.equations.iter().any(|e| e.max_order() > 1) {
            return Err(Error::InvalidArgument("rows must be first order".into()));
        }
        let (eps, mass) = (sys.params.epsilon, sys.params.mass);
        let active: Vec<usize> = sys.active_slots().collect();
        let mut dynamic_slots: Vec<usize> = sys
            .equations
            .iter()
            .flat_map(|e| e.terms().filter(|t| t.1 == 1).map(|t| t.0).collect::<Vec<_>>())
            .collect();
        dynamic_slots.sort_unstable();
        dynamic_slots.dedup();
        let algebraic_slots: Vec<usize> = active.iter().copied().filter(|s| !dynamic_slots.contains(s)).collect();
        let (dynamic_rows, algebraic_rows): (Vec<usize>, Vec<usize>) =
            (0..sys.equations.len()).partition(|&k| sys.equations[k].max_order() == 1);
        if dynamic_rows.len() != dynamic_slots.len() || algebraic_rows.len() != algebraic_slots.len() {
            return Err(Error::DegeneratePivot(format!(
                "{} differential rows for {} differentiated slots",
                dynamic_rows.len(),
                dynamic_slots.len()
            )));
        }
        let mut eqs = sys.equations.clone();
        let mut derived = Vec::new();
        for _ in 0..=MAX_JET {
            derived.push(
                eqs.iter()
                    .map(|e| e.terms().map(|(s, o, c)| (s, o, c.specialize(eps, mass))).collect())
                    .collect(),
            );
            eqs = eqs.iter().map(|e| e.derivative()).collect();
        }
        Ok(Compiled { active, dynamic_slots, algebraic_slots, dynamic_rows, algebraic_rows, derived })
    }

    fn solve(&self, rows: &[(usize, usize)], unknowns: &[usize], r: f64, jet: &[Column], order: u8) -> Result<Vec<Complex64>> {
        let n = unknowns.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut a = alloc::vec![ZERO; n * n];
        let mut b = alloc::vec![ZERO; n];
        for (i, &(k, row)) in rows.iter().enumerate() {
            for (s, o, c) in &self.derived[k][row] {
                let v = c.eval(r);
                match unknowns.iter().position(|u| u == s) {
                    Some(col) if *o == order => a[i * n + col] += v,
                    _ if *o < order || (*o == order && !unknowns.contains(s)) => b[i] -= v * jet[*o as usize][*s],
                    _ => {}
                }
            }
        }
        solve_complex(n, &a, &b)
    }

    /// Fills the algebraic slots from the differentiated ones.
    pub fn close(&self, r: f64, state: &[Complex64]) -> Result<Column> {
        let mut f = [ZERO; 10];
        for (k, &s) in self.dynamic_slots.iter().enumerate() {
            f[s] = state[k];
        }
        let rows: Vec<(usize, usize)> = self.algebraic_rows.iter().map(|&q| (0, q)).collect();
        let x = self.solve(&rows, &self.algebraic_slots, r, &[f], 0)?;
        for (k, &s) in self.algebraic_slots.iter().enumerate() {
            f[s] = x[k];
        }
        Ok(f)
    }

    /// Derivatives of the differentiated slots.
    pub fn rhs(&self, r: f64, state: &[Complex64]) -> Result<Vec<Complex64>> {
        let f = self.close(r, state)?;
        let rows: Vec<(usize, usize)> = self.dynamic_rows.iter().map(|&q| (0, q)).collect();
        self.solve(&rows, &self.dynamic_slots, r, &[f, [ZERO; 10]], 1)
    }

    /// `[f, f', ..., f^(order)]` at `r` for a state of differentiated slots.
    pub fn jet(&self, r: f64, state: &[Complex64], order: usize) -> Result<Vec<Column>> {
        let order = order.min(MAX_JET);
        let mut jet = alloc::vec![[ZERO; 10]; order + 1];
        jet[0] = self.close(r, state)?;
        for k in 1..=order {
            let rows: Vec<(usize, usize)> = self
                .dynamic_rows
                .iter()
                .map(|&q| (k - 1, q))
                .chain(self.algebraic_rows.iter().map(|&q| (k, q)))
                .collect();
            let x = self.solve(&rows, &self.active, r, &jet, k as u8)?;
            for (i, &s) in self.active.iter().enumerate() {
                jet[k][s] = x[i];
            }
        }
        Ok(jet)
    }

    pub fn state_of(&self, f: &Column) -> Vec<Complex64> {
        self.dynamic_slots.iter().map(|&s| f[s]).collect()
    }
}
