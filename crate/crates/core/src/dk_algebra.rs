//! Duffin-Kemmer matrices for spin 1 in the Cartesian and cyclic bases.
//!
//! The matrices satisfy
//! `β^c β^a β^b + β^b β^a β^c = β^c g^{ab} + β^b g^{ac}` and the generators
//! `j^{ab} = β^a β^b - β^b β^a` close on the Lorentz algebra.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::{ExactComplex, Radical};
use crate::layout::{BIVECTOR_PAIRS, DIM, ETA};
use crate::linalg::{invert_complex, solve_real};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DkBasis {
    Cartesian,
    Cyclic,
}

impl fmt::Display for DkBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DkBasis::Cartesian => "cartesian",
            DkBasis::Cyclic => "cyclic",
        })
    }
}

/// A tetrad index `a ∈ {0, 1, 2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LorentzIndex(u8);

impl LorentzIndex {
    pub const ALL: [LorentzIndex; 4] = [LorentzIndex(0), LorentzIndex(1), LorentzIndex(2), LorentzIndex(3)];

    pub fn new(a: u8) -> Result<Self> {
        if a < 4 {
            Ok(LorentzIndex(a))
        } else {
            Err(Error::IndexOutOfRange(a))
        }
    }

    pub const fn get(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<u8> for LorentzIndex {
    type Error = Error;
    fn try_from(a: u8) -> Result<Self> {
        LorentzIndex::new(a)
    }
}

pub type Column = [Complex64; DIM];

/// A 10x10 complex matrix tagged with the basis it acts in.
#[derive(Clone, PartialEq, Debug)]
pub struct DkMatrix {
    entries: [[Complex64; DIM]; DIM],
    basis: DkBasis,
    label: String,
}

impl DkMatrix {
    pub fn from_entries(entries: [[Complex64; DIM]; DIM], basis: DkBasis, label: impl Into<String>) -> Self {
        DkMatrix { entries, basis, label: label.into() }
    }

    pub fn zero(basis: DkBasis) -> Self {
        DkMatrix::from_entries([[Complex64::new(0.0, 0.0); DIM]; DIM], basis, "0")
    }

    pub fn identity(basis: DkBasis) -> Self {
        let mut m = DkMatrix::zero(basis);
        for k in 0..DIM {
            m.entries[k][k] = Complex64::new(1.0, 0.0);
        }
        m.label = "1".to_string();
        m
    }

    pub fn from_exact(e: &ExactMatrix, basis: DkBasis, label: impl Into<String>) -> Self {
        let mut entries = [[Complex64::new(0.0, 0.0); DIM]; DIM];
        for (i, row) in e.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                entries[i][j] = v.to_complex();
            }
        }
        DkMatrix::from_entries(entries, basis, label)
    }

    pub fn entries(&self) -> &[[Complex64; DIM]; DIM] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn basis(&self) -> DkBasis {
        self.basis
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn check_basis(&self, other: &DkMatrix) -> Result<()> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch(format!(
                "{} ({}) with {} ({})",
                self.label, self.basis, other.label, other.basis
            )))
        }
    }

    /// Matrix product; both factors must share a basis.
    pub fn matmul(&self, rhs: &DkMatrix) -> Result<DkMatrix> {
        self.check_basis(rhs)?;
        Ok(self.mul_same(rhs))
    }

    pub(crate) fn mul_same(&self, rhs: &DkMatrix) -> DkMatrix {
        let mut out = [[Complex64::new(0.0, 0.0); DIM]; DIM];
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.entries[i][k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..DIM {
                    out[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        DkMatrix::from_entries(out, self.basis, format!("{}*{}", self.label, rhs.label))
    }

    pub fn add(&self, rhs: &DkMatrix) -> Result<DkMatrix> {
        self.check_basis(rhs)?;
        Ok(self.zip(rhs, |a, b| a + b, "+"))
    }

    pub fn sub(&self, rhs: &DkMatrix) -> Result<DkMatrix> {
        self.check_basis(rhs)?;
        Ok(self.zip(rhs, |a, b| a - b, "-"))
    }

    fn zip(&self, rhs: &DkMatrix, f: impl Fn(Complex64, Complex64) -> Complex64, op: &str) -> DkMatrix {
        let mut out = self.entries;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = f(*v, rhs.entries[i][j]);
            }
        }
        DkMatrix::from_entries(out, self.basis, format!("{}{op}{}", self.label, rhs.label))
    }

    pub fn scale(&self, s: Complex64) -> DkMatrix {
        let mut out = self.entries;
        for v in out.iter_mut().flatten() {
            *v *= s;
        }
        DkMatrix::from_entries(out, self.basis, self.label.clone())
    }

    /// `[self, rhs]`.
    pub fn commutator(&self, rhs: &DkMatrix) -> Result<DkMatrix> {
        let ab = self.matmul(rhs)?;
        let ba = rhs.matmul(self)?;
        Ok(ab.zip(&ba, |a, b| a - b, "-").with_label(format!("[{},{}]", self.label, rhs.label)))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().flatten().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    /// Largest entrywise difference; bases must match.
    pub fn max_abs_diff(&self, rhs: &DkMatrix) -> Result<f64> {
        Ok(self.sub(rhs)?.max_abs())
    }

    pub fn inverse(&self) -> Result<DkMatrix> {
        let flat: Vec<Complex64> = self.entries.iter().flatten().copied().collect();
        let inv = invert_complex(DIM, &flat)?;
        let mut out = [[Complex64::new(0.0, 0.0); DIM]; DIM];
        for i in 0..DIM {
            out[i].copy_from_slice(&inv[i * DIM..(i + 1) * DIM]);
        }
        Ok(DkMatrix::from_entries(out, self.basis, format!("{}^-1", self.label)))
    }

    pub fn apply(&self, v: &Column) -> Column {
        let mut out = [Complex64::new(0.0, 0.0); DIM];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..DIM).map(|k| self.entries[i][k] * v[k]).sum();
        }
        out
    }

    /// Entries `(row, col, value)` above `tol` in modulus.
    pub fn nonzero_entries(&self, tol: f64) -> Vec<(usize, usize, Complex64)> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                if self.entries[i][j].norm() > tol {
                    out.push((i, j, self.entries[i][j]));
                }
            }
        }
        out
    }
}

/// A 10x10 matrix over `Q(i, √2)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: Vec<Vec<ExactComplex>>,
}

impl ExactMatrix {
    pub fn zero() -> Self {
        ExactMatrix { rows: vec![vec![ExactComplex::zero(); DIM]; DIM] }
    }

    pub fn get(&self, row: usize, col: usize) -> &ExactComplex {
        &self.rows[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: ExactComplex) {
        self.rows[row][col] = v;
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zero();
        for i in 0..DIM {
            for k in 0..DIM {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..DIM {
                    if rhs.rows[k][j].is_zero() {
                        continue;
                    }
                    let t = &self.rows[i][k] * &rhs.rows[k][j];
                    out.rows[i][j] = &out.rows[i][j] + &t;
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut out = self.clone();
        for i in 0..DIM {
            for j in 0..DIM {
                out.rows[i][j] = &self.rows[i][j] - &rhs.rows[i][j];
            }
        }
        out
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut out = self.clone();
        for i in 0..DIM {
            for j in 0..DIM {
                out.rows[i][j] = &self.rows[i][j] + &rhs.rows[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: &ExactComplex) -> ExactMatrix {
        let mut out = self.clone();
        for v in out.rows.iter_mut().flatten() {
            *v = &*v * s;
        }
        out
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                out.rows[j][i] = self.rows[i][j].conj();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(ExactComplex::is_zero)
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn exact_beta_cartesian(a: usize) -> ExactMatrix {
    let g = |i: usize| ETA[i] as i64;
    let mut m = ExactMatrix::zero();
    for j in 0..4 {
        for (k, &(p, q)) in BIVECTOR_PAIRS.iter().enumerate() {
            let upper = delta(p, j) * delta(q, a) * g(a) - delta(q, j) * delta(p, a) * g(a);
            m.set(j, 4 + k, ExactComplex::gaussian(0, -upper));
            let lower = delta(a, p) * delta(j, q) - delta(a, q) * delta(j, p);
            m.set(4 + k, j, ExactComplex::gaussian(0, -lower));
        }
    }
    m
}

/// Exact `U` with `Φ_cartesian = U f_cyclic`, and its inverse `U^†`.
pub fn exact_basis_change() -> (ExactMatrix, ExactMatrix) {
    let w = || Radical::sqrt_rational(&num_rational::BigRational::new(1.into(), 2.into())).expect("1/2 >= 0");
    let re = |s: i64| ExactComplex::real(w().scale(&num_rational::BigRational::from_integer(s.into())));
    let im = |s: i64| ExactComplex::imag(w().scale(&num_rational::BigRational::from_integer(s.into())));
    let mut u = ExactMatrix::zero();
    u.set(0, 0, ExactComplex::one());
    u.set(3, 2, ExactComplex::one());
    u.set(6, 5, ExactComplex::one());
    u.set(9, 8, ExactComplex::one());
    // Vector, electric and magnetic triplets share one pattern.
    for (x, y, lo, hi) in [(1, 2, 1, 3), (4, 5, 4, 6), (7, 8, 7, 9)] {
        u.set(x, lo, re(-1));
        u.set(x, hi, re(1));
        u.set(y, lo, im(-1));
        u.set(y, hi, im(-1));
    }
    let inv = u.conj_transpose();
    (u, inv)
}

/// Exact `β^a` in the requested basis.
pub fn exact_beta(a: LorentzIndex, basis: DkBasis) -> ExactMatrix {
    let cart = exact_beta_cartesian(a.get());
    match basis {
        DkBasis::Cartesian => cart,
        DkBasis::Cyclic => {
            let (u, u_inv) = exact_basis_change();
            u_inv.mul(&cart).mul(&u)
        }
    }
}

/// Exact `j^{ab} = β^a β^b - β^b β^a`.
pub fn exact_j(a: LorentzIndex, b: LorentzIndex, basis: DkBasis) -> ExactMatrix {
    let ba = exact_beta(a, basis);
    let bb = exact_beta(b, basis);
    ba.mul(&bb).sub(&bb.mul(&ba))
}

pub fn build_beta(a: LorentzIndex, basis: DkBasis) -> DkMatrix {
    DkMatrix::from_exact(&exact_beta(a, basis), basis, format!("beta{}", a.get()))
}

pub fn build_j(a: LorentzIndex, b: LorentzIndex, basis: DkBasis) -> DkMatrix {
    let ba = build_beta(a, basis);
    let bb = build_beta(b, basis);
    ba.commutator(&bb)
        .expect("same basis")
        .with_label(format!("j{}{}", a.get(), b.get()))
}

/// All four `β^a` in one basis.
pub fn betas(basis: DkBasis) -> [DkMatrix; 4] {
    LorentzIndex::ALL.map(|a| build_beta(a, basis))
}

/// The matrix `U` mapping cyclic columns to Cartesian columns.
pub fn basis_change_matrix() -> DkMatrix {
    let (u, _) = exact_basis_change();
    DkMatrix::from_exact(&u, DkBasis::Cartesian, "U")
}

/// `U M U^{-1}` for a cyclic `M`.
pub fn to_cartesian(m: &DkMatrix) -> Result<DkMatrix> {
    if m.basis() != DkBasis::Cyclic {
        return Err(Error::BasisMismatch(format!("{} is not cyclic", m.label())));
    }
    let (u, u_inv) = exact_basis_change();
    let uf = DkMatrix::from_exact(&u, DkBasis::Cyclic, "U");
    let uif = DkMatrix::from_exact(&u_inv, DkBasis::Cyclic, "U^-1");
    let out = uf.mul_same(m).mul_same(&uif);
    Ok(DkMatrix::from_entries(out.entries, DkBasis::Cartesian, m.label().to_string()))
}

/// `U^{-1} M U` for a Cartesian `M`.
pub fn to_cyclic(m: &DkMatrix) -> Result<DkMatrix> {
    if m.basis() != DkBasis::Cartesian {
        return Err(Error::BasisMismatch(format!("{} is not cartesian", m.label())));
    }
    let (u, u_inv) = exact_basis_change();
    let uf = DkMatrix::from_exact(&u, DkBasis::Cartesian, "U");
    let uif = DkMatrix::from_exact(&u_inv, DkBasis::Cartesian, "U^-1");
    let out = uif.mul_same(m).mul_same(&uf);
    Ok(DkMatrix::from_entries(out.entries, DkBasis::Cyclic, m.label().to_string()))
}

pub fn column_to_cartesian(f: &Column) -> Column {
    basis_change_matrix().apply(f)
}

pub fn column_to_cyclic(phi: &Column) -> Column {
    let (_, u_inv) = exact_basis_change();
    DkMatrix::from_exact(&u_inv, DkBasis::Cyclic, "U^-1").apply(phi)
}

/// Residual of `β^c β^a β^b + β^b β^a β^c - β^c g^{ab} - β^b g^{ac}`.
pub fn verify_trilinear(c: LorentzIndex, a: LorentzIndex, b: LorentzIndex, basis: DkBasis) -> f64 {
    let [bc, ba, bb] = [c, a, b].map(|x| build_beta(x, basis));
    let lhs = bc.mul_same(&ba).mul_same(&bb).zip(&bb.mul_same(&ba).mul_same(&bc), |x, y| x + y, "+");
    let g = |x: LorentzIndex, y: LorentzIndex| if x == y { ETA[x.get()] } else { 0.0 };
    let rhs = bc
        .scale(Complex64::new(g(a, b), 0.0))
        .zip(&bb.scale(Complex64::new(g(a, c), 0.0)), |x, y| x + y, "+");
    lhs.zip(&rhs, |x, y| x - y, "-").max_abs()
}

/// Largest trilinear residual over all 64 index triples.
pub fn verify_all_trilinear(basis: DkBasis) -> f64 {
    let mut worst = 0.0_f64;
    for c in LorentzIndex::ALL {
        for a in LorentzIndex::ALL {
            for b in LorentzIndex::ALL {
                worst = worst.max(verify_trilinear(c, a, b, basis));
            }
        }
    }
    worst
}

/// Largest residual of `[β^c, j^{ab}] = g^{ca}β^b - g^{cb}β^a` and of the
/// Lorentz algebra `[j^{mn}, j^{ab}]`.
pub fn verify_commutators(basis: DkBasis) -> f64 {
    let beta = betas(basis);
    let j = |a: usize, b: usize| beta[a].mul_same(&beta[b]).zip(&beta[b].mul_same(&beta[a]), |x, y| x - y, "-");
    let js: Vec<Vec<DkMatrix>> = (0..4).map(|a| (0..4).map(|b| j(a, b)).collect()).collect();
    let g = |x: usize, y: usize| Complex64::new(if x == y { ETA[x] } else { 0.0 }, 0.0);
    let comm = |x: &DkMatrix, y: &DkMatrix| x.mul_same(y).zip(&y.mul_same(x), |p, q| p - q, "-");
    let mut worst = 0.0_f64;
    for c in 0..4 {
        for a in 0..4 {
            for b in 0..4 {
                let lhs = comm(&beta[c], &js[a][b]);
                let rhs = beta[b].scale(g(c, a)).zip(&beta[a].scale(g(c, b)), |p, q| p - q, "-");
                worst = worst.max(lhs.zip(&rhs, |p, q| p - q, "-").max_abs());
            }
        }
    }
    for m in 0..4 {
        for n in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    let lhs = comm(&js[m][n], &js[a][b]);
                    let mut rhs = DkMatrix::zero(basis);
                    for (coef, mat) in [
                        (g(n, a), &js[m][b]),
                        (-g(n, b), &js[m][a]),
                        (-g(m, a), &js[n][b]),
                        (g(m, b), &js[n][a]),
                    ] {
                        rhs = rhs.zip(&mat.scale(coef), |p, q| p + q, "+");
                    }
                    worst = worst.max(lhs.zip(&rhs, |p, q| p - q, "-").max_abs());
                }
            }
        }
    }
    worst
}

/// Real coefficients `w` with `M ≈ Σ_k w_k j^{p_k q_k}` over the bivector
/// pairs, and the residual of the fit.
pub fn decompose_generators(m: &DkMatrix) -> ([f64; 6], f64) {
    let gens: Vec<DkMatrix> = BIVECTOR_PAIRS
        .iter()
        .map(|&(p, q)| build_j(LorentzIndex(p as u8), LorentzIndex(q as u8), m.basis()))
        .collect();
    // Normal equations over the real inner product Re tr(A^† B).
    let inner = |x: &DkMatrix, y: &DkMatrix| -> f64 {
        x.entries
            .iter()
            .flatten()
            .zip(y.entries.iter().flatten())
            .map(|(p, q)| (p.conj() * q).re)
            .sum()
    };
    let mut a = [0.0; 36];
    let mut b = [0.0; 6];
    for i in 0..6 {
        for k in 0..6 {
            a[i * 6 + k] = inner(&gens[i], &gens[k]);
        }
        b[i] = inner(&gens[i], m);
    }
    let w = solve_real(6, &a, &b).unwrap_or_else(|_| vec![0.0; 6]);
    let mut fit = DkMatrix::zero(m.basis());
    for (k, g) in gens.iter().enumerate() {
        fit = fit.zip(&g.scale(Complex64::new(w[k], 0.0)), |p, q| p + q, "+");
    }
    let mut out = [0.0; 6];
    out.copy_from_slice(&w);
    (out, fit.zip(m, |p, q| p - q, "-").max_abs())
}

/// The cyclic matrices as they are commonly tabulated, including the five
/// entries that break the algebra (see [`TABULATED_DEFECTS`]). Entries are
/// `(a, row, col, value)` with 1-based rows and columns; `β^1` and `β^2`
/// carry an overall `1/√2`.
pub fn tabulated_cyclic_beta(a: LorentzIndex) -> DkMatrix {
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let list: Vec<(usize, usize, Complex64)> = match a.get() {
        0 => vec![(2, 5, i), (3, 6, i), (4, 7, i), (5, 2, -i), (6, 3, -i), (7, 1, i), (7, 4, -i)],
        1 => vec![
            (1, 5, -i), (1, 7, i), (2, 9, one), (3, 8, one), (3, 10, one), (4, 9, one),
            (5, 1, -i), (7, 1, i), (8, 3, -one), (9, 2, -one), (9, 4, -one), (10, 3, -one),
        ]
        .into_iter()
        .map(|(r, c, v)| (r, c, v * s))
        .collect(),
        2 => vec![
            (1, 5, one), (1, 7, one), (2, 9, -i), (3, 8, i), (3, 10, -i), (4, 9, i),
            (5, 1, -one), (7, 1, -one), (8, 3, i), (9, 2, -i), (9, 4, i), (10, 3, -i),
        ]
        .into_iter()
        .map(|(r, c, v)| (r, c, v * s))
        .collect(),
        _ => vec![(1, 6, i), (2, 8, one), (4, 10, -one), (7, 1, i), (8, 2, -one), (10, 3, one), (10, 6, i)],
    };
    let mut entries = [[Complex64::new(0.0, 0.0); DIM]; DIM];
    for (r, c, v) in list {
        entries[r - 1][c - 1] = v;
    }
    DkMatrix::from_entries(entries, DkBasis::Cyclic, format!("tabulated beta{}", a.get()))
}

/// Entries `(a, row, col)` (1-based) where the tabulated cyclic matrices
/// disagree with the ones derived by conjugation.
pub const TABULATED_DEFECTS: [(usize, usize, usize); 6] =
    [(0, 7, 1), (3, 6, 1), (3, 7, 1), (3, 10, 3), (3, 10, 4), (3, 10, 6)];

/// Positions `(row, col)` (1-based) where `derived` and `tabulated` differ.
pub fn entry_mismatches(derived: &DkMatrix, tabulated: &DkMatrix, tol: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..DIM {
        for c in 0..DIM {
            if (derived.get(r, c) - tabulated.get(r, c)).norm() > tol {
                out.push((r + 1, c + 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(a: u8) -> LorentzIndex {
        LorentzIndex::new(a).unwrap()
    }

    #[test]
    fn trilinear_example_triples() {
        assert!(verify_trilinear(idx(0), idx(0), idx(0), DkBasis::Cartesian) < 1e-12);
        assert!(verify_trilinear(idx(1), idx(2), idx(3), DkBasis::Cyclic) < 1e-12);
    }

    #[test]
    fn beta_zero_cubed_is_beta_zero() {
        let b = build_beta(idx(0), DkBasis::Cartesian);
        let cube = b.matmul(&b).unwrap().matmul(&b).unwrap();
        assert!(cube.max_abs_diff(&b).unwrap() < 1e-15);
    }

    #[test]
    fn mixed_basis_product_is_rejected() {
        let a = build_beta(idx(1), DkBasis::Cartesian);
        let b = build_beta(idx(1), DkBasis::Cyclic);
        assert!(matches!(a.matmul(&b), Err(Error::BasisMismatch(_))));
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(LorentzIndex::new(4), Err(Error::IndexOutOfRange(4)));
    }

    #[test]
    fn basis_change_is_unitary() {
        let (u, ui) = exact_basis_change();
        let mut id = ExactMatrix::zero();
        for k in 0..DIM {
            id.set(k, k, ExactComplex::one());
        }
        assert!(u.mul(&ui).sub(&id).is_zero());
    }

    #[test]
    fn j12_is_diagonal_in_cyclic_basis() {
        let j = build_j(idx(1), idx(2), DkBasis::Cyclic).scale(Complex64::new(0.0, 1.0));
        for r in 0..DIM {
            for c in 0..DIM {
                let expect = if r == c { crate::layout::HELICITY[r] as f64 } else { 0.0 };
                assert!((j.get(r, c) - Complex64::new(expect, 0.0)).norm() < 1e-15);
            }
        }
    }
}
