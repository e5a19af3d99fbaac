use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::angular::AnsatzKind;
use crate::exact::Poly;
use crate::halfint::HalfInt;
use crate::layout::CYCLIC_LABELS;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SystemOrder {
    /// First order in all ten slots.
    FirstOrder10,
    /// Second order in `f1..f4` after eliminating `f5..f10`.
    Reduced4,
}

/// Numerical values of the symbols `ε` and `m`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RadialParams {
    pub epsilon: f64,
    pub mass: f64,
}

/// `Σ coeff(slot, order) · d^order f_slot / dr^order = 0`, slots 0-based.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Equation {
    pub row: usize,
    terms: BTreeMap<(usize, u8), Poly>,
}

impl Equation {
    pub fn new(row: usize) -> Self {
        Equation { row, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, slot: usize, order: u8, coeff: &Poly) {
        let sum = match self.terms.get(&(slot, order)) {
            Some(old) => old + coeff,
            None => coeff.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&(slot, order));
        } else {
            self.terms.insert((slot, order), sum);
        }
    }

    pub fn with(mut self, slot: usize, order: u8, coeff: Poly) -> Self {
        self.add(slot, order, &coeff);
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u8, &Poly)> {
        self.terms.iter().map(|(&(s, o), c)| (s, o, c))
    }

    pub fn coeff(&self, slot: usize, order: u8) -> Option<&Poly> {
        self.terms.get(&(slot, order))
    }

    pub fn remove(&mut self, slot: usize, order: u8) -> Option<Poly> {
        self.terms.remove(&(slot, order))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn max_order(&self) -> u8 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn slots(&self) -> impl Iterator<Item = usize> + '_ {
        let mut v: Vec<usize> = self.terms.keys().map(|k| k.0).collect();
        v.dedup();
        v.into_iter()
    }

    pub fn mentions(&self, slot: usize) -> bool {
        self.terms.keys().any(|k| k.0 == slot)
    }

    pub fn scale(&self, p: &Poly) -> Equation {
        let mut out = Equation::new(self.row);
        for (s, o, c) in self.terms() {
            out.add(s, o, &(c * p));
        }
        out
    }

    pub fn plus(&self, other: &Equation) -> Equation {
        let mut out = self.clone();
        for (s, o, c) in other.terms() {
            out.add(s, o, c);
        }
        out
    }

    pub fn minus(&self, other: &Equation) -> Equation {
        self.plus(&other.scale(&Poly::one().scale_int(-1)))
    }

    /// `d/dr` of the whole left-hand side.
    pub fn derivative(&self) -> Equation {
        let mut out = Equation::new(self.row);
        for (s, o, c) in self.terms() {
            out.add(s, o, &c.d_dr());
            out.add(s, o + 1, c);
        }
        out
    }

    /// Left-hand side at radius `r`; `jet[order][slot]` holds derivatives.
    pub fn evaluate(&self, params: &RadialParams, r: f64, jet: &[[Complex64; 10]]) -> Complex64 {
        self.terms()
            .map(|(s, o, c)| c.eval(params.epsilon, params.mass, r) * jet[o as usize][s])
            .sum()
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {}:", self.row + 1)?;
        if self.terms.is_empty() {
            return write!(f, " 0 = 0");
        }
        for (k, (s, o, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " +")?;
            }
            write!(f, " ({c}) {}{}", CYCLIC_LABELS[s], "'".repeat(o as usize))?;
        }
        write!(f, " = 0")
    }
}

/// `f_slot = Σ coeff · d^order f_k / dr^order` in terms of `f1..f4`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReconstructionRule {
    pub slot: usize,
    pub expr: Equation,
}

/// A linear homogeneous radial ODE system with exact coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct RadialSystem {
    pub kappa: HalfInt,
    pub j: HalfInt,
    pub kind: AnsatzKind,
    pub order: SystemOrder,
    pub params: RadialParams,
    pub equations: Vec<Equation>,
    /// Rows (0-based) that reduced to `0 = 0` and were dropped.
    pub trivial_rows: Vec<usize>,
    /// Slots that vanish identically in this ansatz.
    pub vacant_slots: Vec<usize>,
    /// Expressions for eliminated slots (reduced systems only).
    pub rules: Vec<ReconstructionRule>,
    /// First-order rows this system came from; equal to `equations` for
    /// first-order systems.
    pub source: Vec<Equation>,
}

impl RadialSystem {
    pub fn equation(&self, row: usize) -> Option<&Equation> {
        self.equations.iter().find(|e| e.row == row)
    }

    pub fn is_active(&self, slot: usize) -> bool {
        !self.vacant_slots.contains(&slot)
    }

    pub fn active_slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..10).filter(|&k| self.is_active(k))
    }

    /// Copy of the first-order system this one derives from.
    pub fn first_order(&self) -> RadialSystem {
        RadialSystem {
            order: SystemOrder::FirstOrder10,
            equations: self.source.clone(),
            rules: Vec::new(),
            ..self.clone()
        }
    }
}
