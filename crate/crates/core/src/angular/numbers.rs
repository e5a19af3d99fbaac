use alloc::format;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// Smallest total momentum for the monopole coupling `κ`: `1/2` when
/// `|κ| = 1/2`, otherwise `|κ| - 1`.
pub fn j_min(kappa: HalfInt) -> Result<HalfInt> {
    if kappa == HalfInt::ZERO {
        return Err(Error::InvalidQuantumNumbers(alloc::string::String::from("kappa = 0 is excluded")));
    }
    if kappa.abs() == HalfInt::HALF {
        Ok(HalfInt::HALF)
    } else {
        Ok(kappa.abs() - HalfInt::ONE)
    }
}

/// `j_min, j_min + 1, ...` without end.
#[derive(Clone, Copy, Debug)]
pub struct AllowedJ {
    next: HalfInt,
}

impl Iterator for AllowedJ {
    type Item = HalfInt;
    fn next(&mut self) -> Option<HalfInt> {
        let j = self.next;
        self.next = j + HalfInt::ONE;
        Some(j)
    }
}

pub fn allowed_j(kappa: HalfInt) -> Result<AllowedJ> {
    Ok(AllowedJ { next: j_min(kappa)? })
}

/// `(ε, j, m, κ)`: energy, total momentum, its projection and the monopole
/// coupling `κ = eg`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct QuantumNumbers {
    pub epsilon: f64,
    pub j: HalfInt,
    pub m: HalfInt,
    pub kappa: HalfInt,
}

impl QuantumNumbers {
    pub fn new(epsilon: f64, j: HalfInt, m: HalfInt, kappa: HalfInt) -> Result<Self> {
        let qn = QuantumNumbers { epsilon, j, m, kappa };
        qn.validate()?;
        Ok(qn)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| {
            Err(Error::InvalidQuantumNumbers(format!(
                "(eps = {}, j = {}, m = {}, kappa = {}): {why}",
                self.epsilon, self.j, self.m, self.kappa
            )))
        };
        if !self.epsilon.is_finite() {
            return bad("energy must be finite");
        }
        let jmin = j_min(self.kappa)?;
        if !self.j.same_parity(self.kappa) {
            return bad("j - kappa must be an integer");
        }
        if self.j < jmin {
            return bad("j is below the smallest allowed value");
        }
        if !self.m.same_parity(self.j) || self.m.abs() > self.j {
            return bad("m must be one of -j, ..., j");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn smallest_j() {
        assert_eq!(j_min(h(1)).unwrap(), h(1));
        assert_eq!(j_min(h(-1)).unwrap(), h(1));
        assert_eq!(j_min(h(2)).unwrap(), h(0));
        assert_eq!(j_min(h(-3)).unwrap(), h(1));
        assert_eq!(j_min(h(4)).unwrap(), h(2));
        assert!(j_min(h(0)).is_err());
        let first: alloc::vec::Vec<_> = allowed_j(h(3)).unwrap().take(3).collect();
        assert_eq!(first, [h(1), h(3), h(5)]);
    }

    #[test]
    fn validation() {
        assert!(QuantumNumbers::new(1.0, h(2), h(0), h(2)).is_ok());
        assert!(QuantumNumbers::new(1.0, h(2), h(1), h(2)).is_err());
        assert!(QuantumNumbers::new(1.0, h(3), h(1), h(2)).is_err());
        assert!(QuantumNumbers::new(1.0, h(0), h(0), h(4)).is_err());
        assert!(QuantumNumbers::new(1.0, h(2), h(4), h(2)).is_err());
        assert!(QuantumNumbers::new(f64::NAN, h(2), h(0), h(2)).is_err());
    }
}
