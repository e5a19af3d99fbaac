use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use super::ExactComplex;
use crate::math::powi;

/// `ε^eps m^mass r^r`; all exponents may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub eps: i32,
    pub mass: i32,
    pub r: i32,
}

impl Monomial {
    fn times(self, o: Monomial) -> Monomial {
        Monomial {
            eps: self.eps + o.eps,
            mass: self.mass + o.mass,
            r: self.r + o.r,
        }
    }

    fn eval(self, eps: f64, mass: f64, r: f64) -> f64 {
        powi(eps, self.eps) * powi(mass, self.mass) * powi(r, self.r)
    }
}

/// Laurent polynomial in `ε`, `m` and `r` with exact complex coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, ExactComplex>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: ExactComplex) -> Self {
        Poly::term(c, Monomial::default())
    }

    pub fn term(c: ExactComplex, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Poly { terms }
    }

    pub fn one() -> Self {
        Poly::constant(ExactComplex::one())
    }

    pub fn epsilon() -> Self {
        Poly::term(ExactComplex::one(), Monomial { eps: 1, ..Default::default() })
    }

    pub fn mass() -> Self {
        Poly::term(ExactComplex::one(), Monomial { mass: 1, ..Default::default() })
    }

    pub fn inv_mass() -> Self {
        Poly::term(ExactComplex::one(), Monomial { mass: -1, ..Default::default() })
    }

    pub fn r_pow(k: i32) -> Self {
        Poly::term(ExactComplex::one(), Monomial { r: k, ..Default::default() })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(Monomial, &ExactComplex)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &ExactComplex) -> Poly {
        let mut out = Poly::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Poly {
        self.scale(&ExactComplex::from_int(n))
    }

    fn add_term(&mut self, m: Monomial, c: ExactComplex) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    /// Derivative with respect to `r`.
    pub fn d_dr(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.r != 0 {
                let k = BigRational::from_integer(BigInt::from(m.r));
                out.add_term(Monomial { r: m.r - 1, ..*m }, c.scale(&k));
            }
        }
        out
    }

    pub fn eval(&self, eps: f64, mass: f64, r: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| c.to_complex() * m.eval(eps, mass, r))
            .sum()
    }

    /// Numeric Laurent polynomial in `r` at fixed `ε` and `m`.
    pub fn specialize(&self, eps: f64, mass: f64) -> RPoly {
        let mut by_power: BTreeMap<i32, Complex64> = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.to_complex() * powi(eps, m.eps) * powi(mass, m.mass);
            *by_power.entry(m.r).or_default() += v;
        }
        RPoly {
            terms: by_power.into_iter().collect(),
        }
    }

    /// False when every `r`-coefficient vanishes at the given `ε` and `m`.
    pub fn nonvanishing_at(&self, eps: f64, mass: f64) -> bool {
        let scale = self
            .terms
            .iter()
            .map(|(m, c)| c.to_complex().norm() * powi(eps, m.eps).abs() * powi(mass, m.mass).abs())
            .fold(0.0, f64::max);
        let spec = self.specialize(eps, mass);
        spec.terms.iter().any(|(_, c)| c.norm() > 1e-12 * scale.max(1e-300))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                out.add_term(a.times(*b), p * q);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]")?;
            for (name, e) in [("eps", m.eps), ("m", m.mass), ("r", m.r)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    e => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// `Σ c_k r^k` with floating coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct RPoly {
    terms: Vec<(i32, Complex64)>,
}

impl RPoly {
    pub fn eval(&self, r: f64) -> Complex64 {
        self.terms.iter().map(|(k, c)| c * powi(r, *k)).sum()
    }
}
