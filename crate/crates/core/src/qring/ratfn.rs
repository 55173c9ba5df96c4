use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::RingElem;

/// Quotient of two ring elements. Not reduced; equality cross-multiplies.
#[derive(Clone)]
pub struct RationalElem {
    num: RingElem,
    den: RingElem,
}

impl RationalElem {
    pub fn new(num: RingElem, den: RingElem) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self { num, den }.tidy())
    }

    pub fn from_ring(x: RingElem) -> Self {
        Self { num: x, den: RingElem::one() }
    }

    pub fn zero() -> Self {
        Self::from_ring(RingElem::zero())
    }

    pub fn one() -> Self {
        Self::from_ring(RingElem::one())
    }

    pub fn numer(&self) -> &RingElem {
        &self.num
    }

    pub fn denom(&self) -> &RingElem {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cheap normalization: divide out the denominator when it divides, or
    /// absorb it when it is a monomial.
    fn tidy(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        if self.num.is_zero() {
            return Self::zero();
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return Self::from_ring(q);
        }
        self
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_ring(&self) -> Option<RingElem> {
        self.num.div_exact(&self.den)
    }

    pub fn recip(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl PartialEq for RationalElem {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalElem {}

impl Add for &RationalElem {
    type Output = RationalElem;
    fn add(self, rhs: &RationalElem) -> RationalElem {
        if self.den == rhs.den {
            return RationalElem { num: &self.num + &rhs.num, den: self.den.clone() }.tidy();
        }
        RationalElem {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
        .tidy()
    }
}

impl Sub for &RationalElem {
    type Output = RationalElem;
    fn sub(self, rhs: &RationalElem) -> RationalElem {
        self + &(-rhs)
    }
}

impl Mul for &RationalElem {
    type Output = RationalElem;
    fn mul(self, rhs: &RationalElem) -> RationalElem {
        RationalElem { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.tidy()
    }
}

impl Neg for &RationalElem {
    type Output = RationalElem;
    fn neg(self) -> RationalElem {
        RationalElem { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplied_equality() {
        let q = RingElem::var_pow(0, 1);
        let one = RingElem::one();
        let a = RationalElem::new(&one - &q, &one + &q).unwrap();
        let b = RationalElem::new((&one - &q) * &q, (&one + &q) * &q).unwrap();
        assert_eq!(a, b);
        let s = &a + &RationalElem::one();
        let expect = RationalElem::new(RingElem::from_int(2), &one + &q).unwrap();
        assert_eq!(s, expect);
        assert!(RationalElem::new(one, RingElem::zero()).is_none());
    }
}
