use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, One, Signed, ToPrimitive, Zero};

/// Exact rational coefficient: machine-size when it fits, big otherwise.
/// The representation is canonical, so derived equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Coef {
    Small(Ratio<i64>),
    Big(BigRational),
}

fn small_to_big(r: &Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl Coef {
    pub(crate) fn from_int(c: i64) -> Self {
        Coef::Small(Ratio::from_integer(c))
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            // keep i64::MIN out so that negation never overflows
            (Some(n), Some(d)) if n != i64::MIN => Coef::Small(Ratio::new_raw(n, d)),
            _ => Coef::Big(r),
        }
    }

    pub(crate) fn to_big(&self) -> BigRational {
        match self {
            Coef::Small(r) => small_to_big(r),
            Coef::Big(b) => b.clone(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        match self {
            Coef::Small(r) => r.is_zero(),
            Coef::Big(b) => b.is_zero(),
        }
    }

    pub(crate) fn is_one(&self) -> bool {
        matches!(self, Coef::Small(r) if r.is_one())
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coef::Small(r) => r.is_negative(),
            Coef::Big(b) => b.is_negative(),
        }
    }

    pub(crate) fn add(&self, o: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, o) {
            if let Some(s) = a.checked_add(b) {
                if *s.numer() != i64::MIN {
                    return Coef::Small(s);
                }
            }
        }
        Coef::from_big(self.to_big() + o.to_big())
    }

    pub(crate) fn mul(&self, o: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, o) {
            if let Some(s) = a.checked_mul(b) {
                if *s.numer() != i64::MIN {
                    return Coef::Small(s);
                }
            }
        }
        Coef::from_big(self.to_big() * o.to_big())
    }

    pub(crate) fn neg(&self) -> Coef {
        match self {
            Coef::Small(r) => Coef::Small(-r),
            Coef::Big(b) => Coef::from_big(-b),
        }
    }

    pub(crate) fn recip(&self) -> Coef {
        match self {
            Coef::Small(r) => Coef::Small(r.recip()),
            Coef::Big(b) => Coef::from_big(b.recip()),
        }
    }

    pub(crate) fn div(&self, o: &Coef) -> Coef {
        self.mul(&o.recip())
    }
}

impl PartialOrd for Coef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coef {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coef::Small(a), Coef::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let big = Coef::from_int(i64::MAX / 2 + 7);
        let p = big.mul(&big);
        assert!(matches!(p, Coef::Big(_)));
        let back = p.mul(&big.recip()).mul(&big.recip());
        assert_eq!(back, Coef::from_int(1));
        assert!(matches!(back, Coef::Small(_)));
        let s = Coef::from_int(i64::MAX).add(&Coef::from_int(1));
        assert_eq!(s.add(&Coef::from_int(-1)), Coef::from_int(i64::MAX));
    }
}
