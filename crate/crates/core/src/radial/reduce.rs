use alloc::format;
use alloc::vec::Vec;

use super::system::{Equation, RadialSystem, ReconstructionRule, SystemOrder};
use crate::error::{Error, Result};
use crate::exact::Poly;

/// Slots `f1..f4` stay; the rest are auxiliary.
const KEPT: usize = 4;

/// Replaces every occurrence of `rule.slot` (and its derivatives) in `eq`.
pub(crate) fn substitute(eq: &Equation, rule: &ReconstructionRule) -> Equation {
    let mut out = Equation::new(eq.row);
    for (s, o, c) in eq.terms() {
        if s != rule.slot {
            out.add(s, o, c);
            continue;
        }
        let mut expr = rule.expr.clone();
        for _ in 0..o {
            expr = expr.derivative();
        }
        for (t, p, d) in expr.terms() {
            out.add(t, p, &(c * d));
        }
    }
    out
}

/// Rule `f_k = (1/m)(row k without its -m f_k term)`.
fn rule_from_row(eq: &Equation, slot: usize) -> Result<ReconstructionRule> {
    let diagonal = Poly::mass().scale_int(-1);
    let mut rest = eq.clone();
    let pivot = rest.remove(slot, 0);
    if pivot.as_ref() != Some(&diagonal) || rest.mentions(slot) {
        return Err(Error::DegeneratePivot(format!("row {} does not isolate f{}", eq.row + 1, slot + 1)));
    }
    if let Some(bad) = rest.slots().find(|&s| s >= KEPT) {
        return Err(Error::DegeneratePivot(format!(
            "row {} couples f{} to auxiliary f{}",
            eq.row + 1,
            slot + 1,
            bad + 1
        )));
    }
    let mut expr = rest.scale(&Poly::inv_mass());
    expr.row = slot;
    Ok(ReconstructionRule { slot, expr })
}

/// Eliminates `f5..f10` and returns the second-order system in `f1..f4`
/// together with the rules that rebuild the eliminated slots.
pub fn eliminate_auxiliary(sys: &RadialSystem) -> Result<RadialSystem> {
    if sys.order != SystemOrder::FirstOrder10 {
        return Err(Error::InvalidArgument(format!("system is already {:?}", sys.order)));
    }
    if sys.params.mass == 0.0 {
        return Err(Error::ZeroMass);
    }
    let rules = sys
        .active_slots()
        .filter(|&s| s >= KEPT)
        .map(|s| {
            let eq = sys
                .equation(s)
                .ok_or_else(|| Error::DegeneratePivot(format!("no row for f{}", s + 1)))?;
            rule_from_row(eq, s)
        })
        .collect::<Result<Vec<_>>>()?;
    let equations = sys
        .equations
        .iter()
        .filter(|e| e.row < KEPT)
        .map(|e| rules.iter().fold(e.clone(), |acc, rule| substitute(&acc, rule)))
        .filter(|e| !e.is_zero())
        .collect();
    Ok(RadialSystem {
        order: SystemOrder::Reduced4,
        equations,
        rules,
        ..sys.clone()
    })
}
