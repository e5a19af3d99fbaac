use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A finite sum `Σ q_n √n` with rational `q_n` and squarefree `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Radical {
    terms: BTreeMap<u64, BigRational>,
}

fn split_square(n: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut inside = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut count = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= p;
        }
        if count % 2 == 1 {
            inside *= p;
        }
        p += 1;
    }
    (outside, inside * rest)
}

impl Radical {
    pub fn zero() -> Self {
        Radical::default()
    }

    pub fn one() -> Self {
        Radical::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Radical::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        Radical { terms }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Radical::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `√q` for a non-negative rational `q`.
    pub fn sqrt_rational(q: &BigRational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(Radical::zero());
        }
        let num = q.numer().to_u64()?;
        let den = q.denom().to_u64()?;
        let (outside, inside) = split_square(num.checked_mul(den)?);
        let coeff = BigRational::new(BigInt::from(outside), BigInt::from(den));
        let mut terms = BTreeMap::new();
        terms.insert(inside, coeff);
        Some(Radical { terms })
    }

    pub fn sqrt_int(n: u64) -> Self {
        Radical::sqrt_rational(&BigRational::from_integer(BigInt::from(n)))
            .expect("non-negative radicand")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value, when there is no irrational part.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(n, q)| q.to_f64().unwrap_or(f64::NAN) * libm::sqrt(*n as f64))
            .sum()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Radical::zero();
        }
        Radical {
            terms: self.terms.iter().map(|(n, c)| (*n, c * q)).collect(),
        }
    }

    fn insert(terms: &mut BTreeMap<u64, BigRational>, n: u64, q: BigRational) {
        let entry = terms.entry(n).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            terms.remove(&n);
        }
    }
}

impl Add for &Radical {
    type Output = Radical;
    fn add(self, rhs: &Radical) -> Radical {
        let mut terms = self.terms.clone();
        for (n, q) in &rhs.terms {
            Radical::insert(&mut terms, *n, q.clone());
        }
        Radical { terms }
    }
}

impl Sub for &Radical {
    type Output = Radical;
    fn sub(self, rhs: &Radical) -> Radical {
        self + &(-rhs)
    }
}

impl Neg for &Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        Radical {
            terms: self.terms.iter().map(|(n, q)| (*n, -q)).collect(),
        }
    }
}

impl Mul for &Radical {
    type Output = Radical;
    fn mul(self, rhs: &Radical) -> Radical {
        let mut terms = BTreeMap::new();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                // a and b squarefree: √a √b = g √((a/g)(b/g)), g = gcd(a, b).
                let g = a.gcd(b);
                let inside = (a / g) * (b / g);
                let coeff = p * q * BigRational::from_integer(BigInt::from(g));
                Radical::insert(&mut terms, inside, coeff);
            }
        }
        Radical { terms }
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (n, q)) in self.terms.iter().enumerate() {
            let (sign, mag) = if q.is_negative() { ("-", -q) } else { ("+", q.clone()) };
            if k > 0 || sign == "-" {
                write!(f, "{sign}")?;
            }
            match (*n, mag.is_one()) {
                (1, _) => write!(f, "{mag}")?,
                (n, true) => write!(f, "sqrt({n})")?,
                (n, false) => write!(f, "{mag}*sqrt({n})")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_roots_multiply_back() {
        let s2 = Radical::sqrt_int(2);
        let s6 = Radical::sqrt_int(6);
        let s3 = Radical::sqrt_int(3);
        assert_eq!(&s2 * &s2, Radical::from_int(2));
        assert_eq!(&s2 * &s3, s6);
        assert_eq!(&s6 * &s2, &Radical::from_int(2) * &s3);
        let half = Radical::sqrt_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(&half * &s2, Radical::one());
        assert!((Radical::sqrt_int(12).to_f64() - libm::sqrt(12.0)).abs() < 1e-15);
    }

    #[test]
    fn cancellation_removes_terms() {
        let s5 = Radical::sqrt_int(5);
        assert!((&s5 - &s5).is_zero());
        assert_eq!(Radical::sqrt_int(0), Radical::zero());
    }
}
