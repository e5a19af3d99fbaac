//! Parity operators, the composite-parity constraints on the radial
//! functions and an exact elimination deciding whether they survive.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::angular::{build_ansatz, sigma_pattern, QuantumNumbers};
use crate::dk_algebra::{to_cyclic, Column, DkBasis, DkMatrix};
use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::halfint::HalfInt;
use crate::layout::{DIM, SIGMA_OFFSET};
use crate::linalg::nullspace;
use crate::lorentz::{lorentz_rep, LorentzMatrix};
use crate::math::{max_norm, ZERO};
use crate::radial::{
    integrate_column, radial_system, substitute_rule, Equation, IntegrationOptions, RadialSystem, ReconstructionRule,
};

/// Slot permutation of the cyclic parity operator: `f2 <-> f4`,
/// `f5 <-> f7`, `f8 <-> f10`.
pub const PARITY_SLOT_MAP: [usize; DIM] = [0, 3, 2, 1, 6, 5, 4, 9, 8, 7];

/// Cartesian: `diag(1, -1, -1, -1, -1, -1, -1, 1, 1, 1)`.
/// Cyclic: `diag(1, E, E, -E)` with `E` the 3x3 anti-diagonal unit.
pub fn parity_operator(basis: DkBasis) -> DkMatrix {
    let mut e = [[ZERO; DIM]; DIM];
    match basis {
        DkBasis::Cartesian => {
            for (k, row) in e.iter_mut().enumerate() {
                row[k] = Complex64::new(if k == 0 || k >= 7 { 1.0 } else { -1.0 }, 0.0);
            }
        }
        DkBasis::Cyclic => {
            for (k, &t) in PARITY_SLOT_MAP.iter().enumerate() {
                e[k][t] = Complex64::new(if k >= 7 { -1.0 } else { 1.0 }, 0.0);
            }
        }
    }
    DkMatrix::from_entries(e, basis, "P")
}

/// Largest entry of `U^-1 S(O(x)) P_cart S(O(-x))^-1 U - P_cyc`, where
/// `O(x)` turns the Cartesian triad into `(e_θ, e_φ, e_r)` and `-x` is the
/// antipode `(π - θ, φ + π)`.
pub fn parity_conjugation_residual(theta: f64, phi: f64) -> Result<f64> {
    let here = lorentz_rep(&LorentzMatrix::spherical(theta, phi));
    let there = lorentz_rep(&LorentzMatrix::spherical(core::f64::consts::PI - theta, phi + core::f64::consts::PI).inverse());
    let conj = here.matmul(&parity_operator(DkBasis::Cartesian))?.matmul(&there)?;
    to_cyclic(&conj)?.max_abs_diff(&parity_operator(DkBasis::Cyclic))
}

/// Largest entry of `U^-1 P_cart U - P_cyc` (no frame rotation).
pub fn parity_plain_conjugation_residual() -> Result<f64> {
    to_cyclic(&parity_operator(DkBasis::Cartesian))?.max_abs_diff(&parity_operator(DkBasis::Cyclic))
}

/// Eigenvalue of the composite parity on the state.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NParity {
    /// `N = (-1)^{j+1}`.
    Odd,
    /// `N = (-1)^j`.
    Even,
}

impl NParity {
    pub fn value(self, j: HalfInt) -> Option<i32> {
        let j = j.to_int()?;
        let odd = (j + i32::from(self == NParity::Odd)).rem_euclid(2) == 1;
        Some(if odd { -1 } else { 1 })
    }
}

/// `Σ coeff · f_slot = 0` with 0-based slots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub terms: Vec<(usize, i64)>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.terms.as_slice() {
            [(s, _)] => write!(f, "f{} = 0", s + 1),
            [(a, ca), (b, cb)] => write!(f, "f{} = {}f{}", b + 1, if -ca * cb > 0 { "" } else { "-" }, a + 1),
            _ => write!(f, "{:?}", self.terms),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityConstraint {
    pub n_parity: Option<NParity>,
    pub relations: Vec<Relation>,
}

fn zero(s: usize) -> Relation {
    Relation { terms: alloc::vec![(s - 1, 1)] }
}

/// `f_b = sign · f_a` (1-based slots).
fn tie(b: usize, sign: i64, a: usize) -> Relation {
    Relation { terms: alloc::vec![(a - 1, -sign), (b - 1, 1)] }
}

/// Relations among the radial functions for a given composite parity.
pub fn n_constraints(n: NParity) -> ParityConstraint {
    let relations = match n {
        NParity::Odd => alloc::vec![zero(1), zero(3), zero(6), tie(4, -1, 2), tie(7, -1, 5), tie(10, 1, 8)],
        NParity::Even => alloc::vec![zero(9), tie(4, 1, 2), tie(7, 1, 5), tie(10, -1, 8)],
    };
    ParityConstraint { n_parity: Some(n), relations }
}

impl ParityConstraint {
    pub fn none() -> Self {
        ParityConstraint { n_parity: None, relations: Vec::new() }
    }

    pub fn union(&self, other: &ParityConstraint) -> ParityConstraint {
        let mut relations = self.relations.clone();
        relations.extend(other.relations.iter().cloned());
        ParityConstraint { n_parity: None, relations }
    }

    fn matrix(&self) -> Vec<Complex64> {
        let mut a = alloc::vec![ZERO; self.relations.len() * DIM];
        for (i, rel) in self.relations.iter().enumerate() {
            for &(s, c) in &rel.terms {
                a[i * DIM + s] += Complex64::new(c as f64, 0.0);
            }
        }
        a
    }

    /// Basis of the columns satisfying every relation.
    pub fn subspace(&self) -> Vec<Vec<Complex64>> {
        nullspace(self.relations.len(), DIM, &self.matrix(), 1e-12)
    }

    /// Largest `|relation|` on a column.
    pub fn violation(&self, f: &Column) -> f64 {
        self.relations
            .iter()
            .map(|rel| rel.terms.iter().map(|&(s, c)| f[s] * c as f64).sum::<Complex64>().norm())
            .fold(0.0, f64::max)
    }
}

/// The cyclic parity permutes the angular indices `(κ-1, κ, κ+1)` into
/// `(κ+1, κ, κ-1)`: slot `k` and its image carry opposite offsets.
pub fn parity_reverses_sigma() -> bool {
    (0..DIM).all(|k| SIGMA_OFFSET[PARITY_SLOT_MAP[k]] == -SIGMA_OFFSET[k])
}

/// How far the angular operator moves a column out of the constraint
/// subspace, relative to the input size.
pub fn sigma_constraint_leak(con: &ParityConstraint, qn: &QuantumNumbers) -> Result<f64> {
    let ansatz = build_ansatz(*qn)?;
    let mut worst = 0.0_f64;
    for v in con.subspace() {
        let f: Column = core::array::from_fn(|k| v[k]);
        let out = sigma_pattern(&ansatz, &f);
        worst = worst.max(con.violation(&out) / max_norm(&f).max(1e-300));
    }
    Ok(worst)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StepKind {
    /// A constraint relation substituted into the system.
    Imposed,
    /// A row with a single surviving term forces its slot to vanish.
    Zeroed,
    /// An algebraic row solved for one slot, substituted elsewhere.
    Expressed,
    /// Rows combined to cancel derivatives, leaving an algebraic row.
    Combined,
    /// An expressed slot whose expression collapsed to zero.
    BackSubstituted,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CascadeStep {
    pub kind: StepKind,
    /// 0-based slot affected, if any.
    pub slot: Option<usize>,
    /// 0-based originating row, if any.
    pub row: Option<usize>,
    pub note: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct ConsistencyReport {
    pub dimension: Dimension,
    pub steps: Vec<CascadeStep>,
    /// Slots (0-based) still carrying free data at the end.
    pub free_slots: Vec<usize>,
}

impl ConsistencyReport {
    /// Slots forced to vanish by single-term rows, in order.
    pub fn cascade(&self) -> Vec<usize> {
        self.steps.iter().filter(|s| s.kind == StepKind::Zeroed).filter_map(|s| s.slot).collect()
    }
}

struct Expressed {
    slot: usize,
    /// `p · f_slot + rest = 0`.
    pivot: Poly,
    rest: Equation,
}

struct Eliminator {
    eqs: Vec<Equation>,
    alive: BTreeSet<usize>,
    expressed: Vec<Expressed>,
    steps: Vec<CascadeStep>,
    eps: f64,
    mass: f64,
}

fn zero_rule(slot: usize) -> ReconstructionRule {
    ReconstructionRule { slot, expr: Equation::new(slot) }
}

/// `p^k · E` with every `f_slot^(o)` replaced by `d^o/dr^o (-rest/p)`.
fn substitute_quotient(e: &Equation, slot: usize, pivot: &Poly, rest: &Equation) -> Result<Equation> {
    let own: Vec<(u8, Poly)> = e.terms().filter(|t| t.0 == slot).map(|(_, o, c)| (o, c.clone())).collect();
    if own.is_empty() {
        return Ok(e.clone());
    }
    let top = own.iter().map(|t| t.0).max().unwrap_or(0);
    if top > 1 {
        return Err(Error::InvalidArgument(format!("second derivative of f{} in row {}", slot + 1, e.row + 1)));
    }
    let minus = Poly::one().scale_int(-1);
    let mut out = e.clone();
    for (o, _) in &own {
        out.remove(slot, *o);
    }
    let mut out = if top == 0 { out.scale(pivot) } else { out.scale(&(pivot * pivot)) };
    for (o, c) in own {
        let term = match (o, top) {
            (0, 0) => rest.scale(&minus),
            (0, _) => rest.scale(&(&minus * pivot)),
            _ => rest.derivative().scale(&(&minus * pivot)).plus(&rest.scale(&pivot.d_dr())),
        };
        out = out.plus(&term.scale(&c));
    }
    out.row = e.row;
    Ok(out)
}

impl Eliminator {
    fn usable(&self, p: &Poly) -> bool {
        !p.is_zero() && p.nonvanishing_at(self.eps, self.mass)
    }

    fn apply_zero(&mut self, slot: usize) {
        let rule = zero_rule(slot);
        for e in self.eqs.iter_mut() {
            *e = substitute_rule(e, &rule);
        }
        for x in self.expressed.iter_mut() {
            x.rest = substitute_rule(&x.rest, &rule);
        }
        self.alive.remove(&slot);
    }

    fn prune(&mut self) {
        self.eqs.retain(|e| !e.is_zero());
    }

    fn impose(&mut self, con: &ParityConstraint) -> Result<()> {
        for rel in &con.relations {
            if let Some(&(s, _)) = rel.terms.iter().find(|t| !self.alive.contains(&t.0)) {
                return Err(Error::InvalidArgument(format!("constraint {rel} uses vacant slot f{}", s + 1)));
            }
            let &(hi, c_hi) = rel.terms.iter().max_by_key(|t| t.0).ok_or_else(|| Error::InvalidArgument(String::from("empty relation")))?;
            if c_hi.abs() != 1 {
                return Err(Error::InvalidArgument(format!("relation {rel} needs a unit coefficient on f{}", hi + 1)));
            }
            let mut expr = Equation::new(hi);
            for &(s, c) in rel.terms.iter().filter(|t| t.0 != hi) {
                expr.add(s, 0, &Poly::one().scale_int(-c * c_hi));
            }
            let rule = ReconstructionRule { slot: hi, expr };
            for e in self.eqs.iter_mut() {
                *e = substitute_rule(e, &rule);
            }
            self.alive.remove(&hi);
            self.steps.push(CascadeStep { kind: StepKind::Imposed, slot: Some(hi), row: None, note: format!("{rel}") });
        }
        self.prune();
        Ok(())
    }

    fn zero_single(&mut self) -> bool {
        let found = self.eqs.iter().find_map(|e| {
            let mut terms = e.terms();
            match (terms.next(), terms.next()) {
                (Some((s, 0, c)), None) if self.usable(c) => Some((e.row, s)),
                _ => None,
            }
        });
        let Some((row, slot)) = found else { return false };
        self.apply_zero(slot);
        self.prune();
        self.steps.push(CascadeStep {
            kind: StepKind::Zeroed,
            slot: Some(slot),
            row: Some(row),
            note: format!("row {} leaves only f{}", row + 1, slot + 1),
        });
        true
    }

    fn express(&mut self) -> Result<bool> {
        let Some(idx) = self.eqs.iter().position(|e| e.max_order() == 0) else { return Ok(false) };
        let eq = self.eqs[idx].clone();
        let differentiated = |s: usize| self.eqs.iter().any(|e| e.coeff(s, 1).is_some());
        let candidates: Vec<usize> = eq.slots().filter(|&s| eq.coeff(s, 0).is_some_and(|p| self.usable(p))).collect();
        let score = |s: &usize| {
            let p = eq.coeff(*s, 0).expect("candidate");
            (differentiated(*s), p.as_monomial().is_none(), eq.row != *s, *s)
        };
        let Some(slot) = candidates.iter().copied().min_by_key(score) else {
            return Err(Error::DegeneratePivot(format!("row {} has no usable pivot", eq.row + 1)));
        };
        let mut rest = eq.clone();
        let pivot = rest.remove(slot, 0).expect("candidate");
        self.eqs.remove(idx);
        for e in self.eqs.iter_mut() {
            *e = substitute_quotient(e, slot, &pivot, &rest)?;
        }
        for x in self.expressed.iter_mut() {
            if x.rest.mentions(slot) {
                let scaled = substitute_quotient(&x.rest, slot, &pivot, &rest)?;
                let k = if x.rest.coeff(slot, 1).is_some() { 2 } else { 1 };
                x.pivot = (0..k).fold(x.pivot.clone(), |acc, _| &acc * &pivot);
                x.rest = scaled;
            }
        }
        self.alive.remove(&slot);
        self.expressed.push(Expressed { slot, pivot, rest });
        self.prune();
        self.steps.push(CascadeStep {
            kind: StepKind::Expressed,
            slot: Some(slot),
            row: Some(eq.row),
            note: format!("row {} solved for f{}", eq.row + 1, slot + 1),
        });
        Ok(true)
    }

    /// Fraction-free elimination on the derivative coefficients; returns
    /// true when it uncovers an algebraic row.
    fn combine(&mut self) -> Result<bool> {
        if self.eqs.iter().any(|e| e.max_order() > 1) {
            return Err(Error::InvalidArgument(String::from("rows above first order")));
        }
        let slots: Vec<usize> = self.alive.iter().copied().collect();
        let mut eqs = self.eqs.clone();
        let mut used = alloc::vec![false; eqs.len()];
        for &s in &slots {
            let Some(i) = (0..eqs.len()).find(|&i| !used[i] && eqs[i].coeff(s, 1).is_some_and(|p| self.usable(p))) else {
                continue;
            };
            used[i] = true;
            let lead = eqs[i].coeff(s, 1).expect("pivot").clone();
            for k in 0..eqs.len() {
                if k == i {
                    continue;
                }
                if let Some(c) = eqs[k].coeff(s, 1).cloned() {
                    let row = eqs[k].row;
                    let mut next = eqs[k].scale(&lead).minus(&eqs[i].scale(&c));
                    next.row = row;
                    eqs[k] = next;
                }
            }
        }
        let hidden: Vec<usize> = eqs.iter().filter(|e| !e.is_zero() && e.max_order() == 0).map(|e| e.row).collect();
        let dropped = eqs.iter().filter(|e| e.is_zero()).count();
        if hidden.is_empty() && dropped == 0 {
            return Ok(false);
        }
        self.eqs = eqs;
        self.prune();
        for row in hidden.iter().copied() {
            self.steps.push(CascadeStep {
                kind: StepKind::Combined,
                slot: None,
                row: Some(row),
                note: format!("derivatives cancel in a combination ending at row {}", row + 1),
            });
        }
        Ok(!hidden.is_empty() || dropped > 0)
    }

    fn run(mut self) -> Result<ConsistencyReport> {
        loop {
            if self.zero_single() {
                continue;
            }
            if self.express()? {
                continue;
            }
            if self.combine()? {
                continue;
            }
            break;
        }
        let mut collapsed = true;
        while collapsed {
            collapsed = false;
            let zeros: Vec<usize> = self.expressed.iter().filter(|x| x.rest.is_zero()).map(|x| x.slot).collect();
            for slot in zeros {
                self.expressed.retain(|x| x.slot != slot);
                self.apply_zero(slot);
                self.steps.push(CascadeStep {
                    kind: StepKind::BackSubstituted,
                    slot: Some(slot),
                    row: None,
                    note: format!("f{} vanishes with the slots it was expressed in", slot + 1),
                });
                collapsed = true;
            }
        }
        let free_slots: Vec<usize> = self.alive.iter().copied().collect();
        let differentiated: BTreeSet<usize> =
            self.eqs.iter().flat_map(|e| e.terms().filter(|t| t.1 == 1).map(|t| t.0).collect::<Vec<_>>()).collect();
        let dimension = if self.eqs.len() == free_slots.len() && free_slots.iter().all(|s| differentiated.contains(s)) {
            Dimension::Finite(free_slots.len())
        } else {
            Dimension::Infinite
        };
        Ok(ConsistencyReport { dimension, steps: self.steps, free_slots })
    }
}

/// Imposes the constraints on a first-order radial system and eliminates
/// exactly; returns the dimension of the surviving solution space.
pub fn consistency_rank(sys: &RadialSystem, con: &ParityConstraint) -> Result<ConsistencyReport> {
    let sys = match sys.order {
        crate::radial::SystemOrder::FirstOrder10 => sys.clone(),
        crate::radial::SystemOrder::Reduced4 => sys.first_order(),
    };
    let mut elim = Eliminator {
        eqs: sys.equations.clone(),
        alive: sys.active_slots().collect(),
        expressed: Vec::new(),
        steps: Vec::new(),
        eps: sys.params.epsilon,
        mass: sys.params.mass,
    };
    elim.impose(con)?;
    elim.run()
}

/// Constraint violation along an integrated solution that satisfies the
/// constraints and the algebraic rows at `r0`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct DriftReport {
    pub r0: f64,
    pub r1: f64,
    /// Relative violation at `r0` (round-off only).
    pub initial: f64,
    /// Largest relative violation on `[r0, r1]`.
    pub max: f64,
    pub at_r: f64,
}

pub fn constraint_drift(qn: &QuantumNumbers, mass: f64, con: &ParityConstraint, r0: f64, r1: f64) -> Result<DriftReport> {
    let sys = radial_system(qn, mass)?;
    let params = sys.params;
    let algebraic: Vec<&Equation> = sys.equations.iter().filter(|e| e.max_order() == 0).collect();
    let rows = con.relations.len() + algebraic.len() + sys.vacant_slots.len();
    let mut a = con.matrix();
    for e in &algebraic {
        let mut row = [ZERO; DIM];
        for (s, _, c) in e.terms() {
            row[s] += c.eval(params.epsilon, params.mass, r0);
        }
        a.extend_from_slice(&row);
    }
    for &s in &sys.vacant_slots {
        let mut row = [ZERO; DIM];
        row[s] = Complex64::new(1.0, 0.0);
        a.extend_from_slice(&row);
    }
    let basis = nullspace(rows, DIM, &a, 1e-12);
    if basis.is_empty() {
        return Err(Error::InvalidArgument(String::from("no initial column satisfies the constraints")));
    }
    let mut column = [ZERO; DIM];
    for (k, v) in basis.iter().enumerate() {
        let w = Complex64::new(1.0 / (k as f64 + 1.0), 0.3 * k as f64);
        for s in 0..DIM {
            column[s] += v[s] * w;
        }
    }
    let opts = IntegrationOptions { steps: 512, ..Default::default() };
    let prof = integrate_column(&sys, r0, &column, r1, &opts)?;
    let rel = |f: &Column| con.violation(f) / max_norm(f).max(1e-300);
    let (mut max, mut at_r) = (0.0, r0);
    for (r, f) in prof.r.iter().zip(&prof.f) {
        let v = rel(f);
        if v > max {
            max = v;
            at_r = *r;
        }
    }
    Ok(DriftReport { r0, r1, initial: rel(&prof.f[0]), max, at_r })
}
