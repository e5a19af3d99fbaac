//! The radial systems as commonly tabulated, kept as data so the derived
//! systems can be compared against them row by row.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::system::{Equation, RadialSystem};
use crate::angular::{exact_ladder_lower, exact_ladder_raise, AnsatzKind};
use crate::exact::{ExactComplex, Poly, Radical};
use crate::halfint::HalfInt;

fn constant(c: ExactComplex) -> Poly {
    Poly::constant(c)
}

fn eps(c: ExactComplex) -> Poly {
    Poly::epsilon().scale(&c)
}

fn mass(c: ExactComplex) -> Poly {
    Poly::mass().scale(&c)
}

fn over_r(c: ExactComplex) -> Poly {
    Poly::r_pow(-1).scale(&c)
}

fn int(n: i64) -> ExactComplex {
    ExactComplex::from_int(n)
}

fn imag(n: i64) -> ExactComplex {
    ExactComplex::gaussian(0, n)
}

/// Builds a row from `(slot, order, coefficient)` with 1-based slots.
fn row(r: usize, terms: Vec<(usize, u8, Poly)>) -> Equation {
    let mut eq = Equation::new(r - 1);
    for (s, o, c) in terms {
        eq.add(s - 1, o, &c);
    }
    eq
}

/// `(d/dr + k/r)` applied to slot `s`, times `c`.
fn d_plus(s: usize, k: i64, c: ExactComplex) -> [(usize, u8, Poly); 2] {
    [(s, 1, constant(c.clone())), (s, 0, over_r(&c * &int(k)))]
}

fn generic(c: &Radical, d: &Radical) -> Vec<Equation> {
    let s2 = Radical::sqrt_int(2);
    let c2 = ExactComplex::real(&s2 * c);
    let d2 = ExactComplex::real(&s2 * d);
    let ic2 = &c2 * &imag(1);
    let id2 = &d2 * &imag(1);
    let two_ic = ExactComplex::imag(&Radical::from_int(2) * c);
    let two_id = ExactComplex::imag(&Radical::from_int(2) * d);
    let concat = |parts: Vec<Vec<(usize, u8, Poly)>>| parts.into_iter().flatten().collect::<Vec<_>>();
    alloc::vec![
        row(1, concat(alloc::vec![
            d_plus(6, 2, int(-1)).to_vec(),
            alloc::vec![(5, 0, over_r(-&c2)), (7, 0, over_r(-&d2)), (1, 0, mass(int(-1)))],
        ])),
        row(2, concat(alloc::vec![
            alloc::vec![(5, 0, eps(imag(1)))],
            d_plus(8, 1, imag(1)).to_vec(),
            alloc::vec![(9, 0, over_r(ic2.clone())), (2, 0, mass(int(-1)))],
        ])),
        row(3, alloc::vec![
            (6, 0, eps(imag(1))),
            (8, 0, over_r(-&two_ic)),
            (10, 0, over_r(two_id)),
            (3, 0, mass(int(-1))),
        ]),
        row(4, concat(alloc::vec![
            alloc::vec![(7, 0, eps(imag(1)))],
            d_plus(10, 1, imag(-1)).to_vec(),
            alloc::vec![(9, 0, over_r(-&id2)), (4, 0, mass(int(-1)))],
        ])),
        row(5, alloc::vec![(2, 0, eps(imag(1))), (1, 0, over_r(c2.clone())), (5, 0, mass(int(-1)))]),
        row(6, alloc::vec![(3, 0, eps(imag(-1))), (1, 1, constant(int(-1))), (6, 0, mass(int(-1)))]),
        row(7, alloc::vec![(4, 0, eps(imag(-1))), (1, 0, over_r(d2.clone())), (7, 0, mass(int(-1)))]),
        row(8, concat(alloc::vec![
            d_plus(2, 1, imag(-1)).to_vec(),
            alloc::vec![(3, 0, over_r(-&ic2)), (8, 0, mass(int(-1)))],
        ])),
        row(9, alloc::vec![(2, 0, over_r(ic2.clone())), (4, 0, over_r(-&id2)), (9, 0, mass(int(-1)))]),
        row(10, concat(alloc::vec![
            d_plus(4, 1, imag(1)).to_vec(),
            alloc::vec![(3, 0, over_r(id2)), (10, 0, mass(int(-1)))],
        ])),
    ]
}

fn top_positive(k: &Radical) -> Vec<Equation> {
    let k = ExactComplex::real(k.clone());
    let ik = &k * &imag(1);
    let mut rows = alloc::vec![
        row(1, alloc::vec![(5, 0, over_r(-&k)), (1, 0, mass(int(-1)))]),
        row(2, alloc::vec![(5, 0, eps(imag(1))), (9, 0, over_r(ik.clone())), (2, 0, mass(int(-1)))]),
        row(3, alloc::vec![(6, 0, eps(imag(1))), (8, 0, over_r(-&ik)), (3, 0, mass(int(-1)))]),
        row(5, alloc::vec![(2, 0, eps(imag(1))), (1, 0, over_r(k.clone())), (5, 0, mass(int(-1)))]),
        row(6, alloc::vec![(3, 0, eps(imag(-1))), (1, 1, constant(int(-1))), (6, 0, mass(int(-1)))]),
        row(8, alloc::vec![(3, 0, over_r(-&ik)), (8, 0, mass(int(-1)))]),
        row(9, alloc::vec![(2, 0, over_r(ik)), (9, 0, mass(int(-1)))]),
    ];
    for (s, k, c) in [(6, 2, int(-1)), (8, 1, imag(1)), (2, 1, imag(-1))] {
        let r = match s {
            6 => 0,
            8 => 1,
            _ => 5,
        };
        for (slot, o, p) in d_plus(s, k, c) {
            rows[r].add(slot - 1, o, &p);
        }
    }
    rows
}

fn top_negative(k: &Radical) -> Vec<Equation> {
    let k = ExactComplex::real(k.clone());
    let ik = &k * &imag(1);
    let mut rows = alloc::vec![
        row(1, alloc::vec![(7, 0, over_r(k.clone())), (1, 0, mass(int(1)))]),
        row(3, alloc::vec![(6, 0, eps(imag(1))), (10, 0, over_r(-&ik)), (3, 0, mass(int(-1)))]),
        row(4, alloc::vec![(7, 0, eps(imag(1))), (9, 0, over_r(-&ik)), (4, 0, mass(int(-1)))]),
        row(6, alloc::vec![(3, 0, eps(imag(1))), (1, 1, constant(int(1))), (6, 0, mass(int(1)))]),
        row(7, alloc::vec![(4, 0, eps(imag(-1))), (1, 0, over_r(k.clone())), (7, 0, mass(int(1)))]),
        row(9, alloc::vec![(4, 0, over_r(ik.clone())), (9, 0, mass(int(1)))]),
        row(10, alloc::vec![(3, 0, over_r(ik)), (10, 0, mass(int(-1)))]),
    ];
    for (r, s, k, c) in [(0, 6, 2, int(1)), (2, 10, 1, imag(-1)), (6, 4, 1, imag(1))] {
        for (slot, o, p) in d_plus(s, k, c) {
            rows[r].add(slot - 1, o, &p);
        }
    }
    rows
}

fn minimal_positive() -> Vec<Equation> {
    let mut r2 = row(2, alloc::vec![(5, 0, eps(imag(1))), (2, 0, mass(int(-1)))]);
    for (s, o, p) in d_plus(8, 1, imag(1)) {
        r2.add(s - 1, o, &p);
    }
    let r5 = row(5, alloc::vec![(2, 0, constant(imag(-1))), (5, 0, mass(int(-1)))]);
    let mut r8 = row(8, alloc::vec![(8, 0, mass(int(-1)))]);
    for (s, o, p) in d_plus(2, 1, imag(-1)) {
        r8.add(s - 1, o, &p);
    }
    alloc::vec![r2, r5, r8]
}

fn minimal_negative() -> Vec<Equation> {
    let mut r4 = row(4, alloc::vec![(7, 0, eps(imag(1))), (4, 0, mass(int(-1)))]);
    for (s, o, p) in d_plus(10, 1, imag(-1)) {
        r4.add(s - 1, o, &p);
    }
    let r7 = row(7, alloc::vec![(4, 0, constant(imag(-1))), (7, 0, mass(int(-1)))]);
    let mut r10 = row(10, alloc::vec![(10, 0, mass(int(-1)))]);
    for (s, o, p) in d_plus(4, 1, imag(1)) {
        r10.add(s - 1, o, &p);
    }
    alloc::vec![r4, r7, r10]
}

/// The tabulated system for `(κ, j)`, nontrivial rows only.
pub fn tabulated_system(kind: AnsatzKind, kappa: HalfInt, j: HalfInt) -> Vec<Equation> {
    let root = |q: HalfInt| Radical::sqrt_rational(&q.abs().as_rational()).expect("non-negative");
    match kind {
        AnsatzKind::Generic => generic(&exact_ladder_lower(j, kappa), &exact_ladder_raise(j, kappa)),
        AnsatzKind::TopPositive => top_positive(&root(kappa)),
        AnsatzKind::TopNegative => top_negative(&root(kappa)),
        AnsatzKind::MinimalPositive => minimal_positive(),
        AnsatzKind::MinimalNegative => minimal_negative(),
    }
}

/// A row where the derived and tabulated systems differ by more than an
/// overall sign.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowMismatch {
    /// 1-based row.
    pub row: usize,
    pub derived: String,
    pub tabulated: String,
}

fn same_up_to_sign(a: &Equation, b: &Equation) -> bool {
    a.minus(b).is_zero() || a.plus(b).is_zero()
}

/// Compares a derived first-order system with its tabulated counterpart.
pub fn compare_with_tabulated(sys: &RadialSystem) -> Vec<RowMismatch> {
    let table = tabulated_system(sys.kind, sys.kappa, sys.j);
    let mut rows: Vec<usize> = sys.equations.iter().map(|e| e.row).chain(table.iter().map(|e| e.row)).collect();
    rows.sort_unstable();
    rows.dedup();
    let text = |e: Option<&Equation>| e.map_or_else(|| String::from("0 = 0"), |e| e.to_string());
    rows.into_iter()
        .filter_map(|r| {
            let d = sys.equation(r);
            let t = table.iter().find(|e| e.row == r);
            let ok = match (d, t) {
                (Some(x), Some(y)) => same_up_to_sign(x, y),
                _ => false,
            };
            (!ok).then(|| RowMismatch { row: r + 1, derived: text(d), tabulated: text(t) })
        })
        .collect()
}
