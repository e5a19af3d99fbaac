use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;

use super::Radical;

/// `re + i im` with radical parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactComplex {
    pub re: Radical,
    pub im: Radical,
}

impl ExactComplex {
    pub fn new(re: Radical, im: Radical) -> Self {
        ExactComplex { re, im }
    }

    pub fn zero() -> Self {
        ExactComplex::default()
    }

    pub fn one() -> Self {
        ExactComplex::real(Radical::one())
    }

    pub fn i() -> Self {
        ExactComplex::new(Radical::zero(), Radical::one())
    }

    pub fn real(re: Radical) -> Self {
        ExactComplex::new(re, Radical::zero())
    }

    pub fn imag(im: Radical) -> Self {
        ExactComplex::new(Radical::zero(), im)
    }

    pub fn from_int(n: i64) -> Self {
        ExactComplex::real(Radical::from_int(n))
    }

    /// `re + i im` for small integers.
    pub fn gaussian(re: i64, im: i64) -> Self {
        ExactComplex::new(Radical::from_int(re), Radical::from_int(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        ExactComplex::new(self.re.scale(q), self.im.scale(q))
    }

    pub fn scale_radical(&self, s: &Radical) -> Self {
        ExactComplex::new(&self.re * s, &self.im * s)
    }

    pub fn conj(&self) -> Self {
        ExactComplex::new(self.re.clone(), -&self.im)
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-&self.re, -&self.im)
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            (false, false) => write!(f, "({}) + i*({})", self.re, self.im),
        }
    }
}
