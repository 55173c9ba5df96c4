use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::coef::Coef;
use crate::error::{Error, Result};

/// Maximum number of formal parameters a ring element can carry.
pub const MAX_VARS: usize = 4;

/// Exponent vector of a Laurent monomial.
pub type Mono = [i32; MAX_VARS];

const ONE_MONO: Mono = [0; MAX_VARS];

fn mono_add(a: &Mono, b: &Mono) -> Mono {
    let mut out = [0; MAX_VARS];
    for i in 0..MAX_VARS {
        out[i] = a[i].checked_add(b[i]).expect("exponent overflow");
    }
    out
}

fn mono_sub(a: &Mono, b: &Mono) -> Mono {
    let mut out = [0; MAX_VARS];
    for i in 0..MAX_VARS {
        out[i] = a[i].checked_sub(b[i]).expect("exponent overflow");
    }
    out
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sparse Laurent polynomial in up to [`MAX_VARS`] parameters with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RingElem {
    terms: BTreeMap<Mono, Coef>,
}

impl RingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::mono_coef(ONE_MONO, Coef::from_int(c))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(ONE_MONO, c)
    }

    pub fn monomial(exps: Mono, c: BigRational) -> Self {
        Self::mono_coef(exps, Coef::from_big(c))
    }

    fn mono_coef(exps: Mono, c: Coef) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The variable with index `var` raised to `exp`.
    pub fn var_pow(var: usize, exp: i32) -> Self {
        assert!(var < MAX_VARS, "variable index {var} too large");
        let mut m = ONE_MONO;
        m[var] = exp;
        Self::mono_coef(m, Coef::from_int(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ONE_MONO).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mono, BigRational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c.to_big()))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant value if the element has no parameter dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&ONE_MONO).map(Coef::to_big),
            _ => None,
        }
    }

    /// Units of a Laurent polynomial ring are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let mut inv = ONE_MONO;
        for i in 0..MAX_VARS {
            inv[i] = m[i].checked_neg().expect("exponent overflow");
        }
        Some(Self::mono_coef(inv, c.recip()))
    }

    /// Integer power; negative exponents need a unit.
    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            let inv = self.inverse().expect("negative power of a non-unit");
            return inv.pow(-e);
        }
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let c = Coef::from_big(c.clone());
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v.mul(&c))).collect(),
        }
    }

    fn add_term(&mut self, m: Mono, c: Coef) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += a * b`, the hot path of operator evaluation.
    pub fn add_mul(&mut self, a: &RingElem, b: &RingElem) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(mono_add(ma, mb), ca.mul(cb));
            }
        }
    }

    fn leading(&self) -> Option<(&Mono, &Coef)> {
        self.terms.iter().next_back()
    }

    fn trailing(&self) -> Option<(&Mono, &Coef)> {
        self.terms.iter().next()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// Lexicographic long division. Every quotient monomial of an exact
    /// quotient lies between `min(self) - min(d)` and `max(self) - max(d)`,
    /// which bounds the loop.
    pub fn div_exact(&self, d: &RingElem) -> Option<RingElem> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_unit() {
            return Some(self * &d.inverse().unwrap());
        }
        let (dl_m, dl_c) = d.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let floor = mono_sub(self.trailing().unwrap().0, d.trailing().unwrap().0);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading() {
            let tm = mono_sub(rm, &dl_m);
            if tm < floor {
                return None;
            }
            let t = Self::mono_coef(tm, rc.div(&dl_c));
            rem -= &(d * &t);
            quot += &t;
        }
        Some(quot)
    }

    /// Evaluate at rational parameter values. Fails on a negative power of 0.
    pub fn eval(&self, vals: &[BigRational]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.to_big();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = vals.get(i)?;
                if v.is_zero() {
                    if e < 0 {
                        return None;
                    }
                    t = BigRational::zero();
                    break;
                }
                t *= num_traits::pow::Pow::pow(v, e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Replace variable `var` by the given element (which must be a unit when
    /// negative exponents occur).
    pub fn substitute(&self, var: usize, by: &RingElem) -> RingElem {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest[var];
            rest[var] = 0;
            let t = Self::mono_coef(rest, c.clone());
            out.add_mul(&t, &by.pow(e));
        }
        out
    }

    /// Highest variable index that occurs, plus one.
    pub fn num_vars_used(&self) -> usize {
        let mut n = 0;
        for m in self.terms.keys() {
            for (i, &e) in m.iter().enumerate() {
                if e != 0 {
                    n = n.max(i + 1);
                }
            }
        }
        n
    }

    /// Render with explicit variable names.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.to_big().abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = names.get(i).copied().unwrap_or("?");
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            if factors.is_empty() {
                out.push_str(&rational_to_string(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&rational_to_string(&a));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    pub fn to_json(&self, nvars: usize) -> serde_json::Value {
        let nvars = nvars.max(self.num_vars_used());
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "exponents": m[..nvars].to_vec(),
                        "coeff": rational_to_string(&c.to_big()),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero();
        for t in terms {
            if t.exponents.len() > MAX_VARS {
                return Err(Error::Parse("too many exponents".into()));
            }
            let mut m = ONE_MONO;
            m[..t.exponents.len()].copy_from_slice(&t.exponents);
            out.add_term(m, Coef::from_big(parse_rational(&t.coeff)?));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: Vec<i32>,
    coeff: String,
}

impl Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(1).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// Default names: variable 0 is the parameter of the class of the affine
/// simple root, variable 1 the other class.
pub const DEFAULT_NAMES: [&str; MAX_VARS] = ["q", "q_l", "q_2", "q_3"];

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&DEFAULT_NAMES))
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for RingElem {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for RingElem {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&RingElem> for RingElem {
    fn add_assign(&mut self, rhs: &RingElem) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&RingElem> for RingElem {
    fn sub_assign(&mut self, rhs: &RingElem) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.neg());
        }
    }
}

impl MulAssign<&RingElem> for RingElem {
    fn mul_assign(&mut self, rhs: &RingElem) {
        *self = &*self * rhs;
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        let mut out = RingElem::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for RingElem {
            type Output = RingElem;
            fn $f(self, rhs: RingElem) -> RingElem {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $f(self, rhs: &RingElem) -> RingElem {
                (&self).$f(rhs)
            }
        }
        impl $tr<RingElem> for &RingElem {
            type Output = RingElem;
            fn $f(self, rhs: RingElem) -> RingElem {
                self.$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::iter::Sum for RingElem {
    fn sum<I: Iterator<Item = RingElem>>(iter: I) -> Self {
        let mut out = RingElem::zero();
        for x in iter {
            out += &x;
        }
        out
    }
}

impl std::iter::Product for RingElem {
    fn product<I: Iterator<Item = RingElem>>(iter: I) -> Self {
        let mut out = RingElem::one();
        for x in iter {
            out = &out * &x;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RingElem {
        RingElem::var_pow(0, 1)
    }

    #[test]
    fn display_orders_terms() {
        let x = &q().pow(-1) + &q();
        assert_eq!(x.to_string(), "q^-1 + q");
        let y = RingElem::from_int(1) - q().pow(2).scale(&BigRational::new(3.into(), 2.into()));
        assert_eq!(y.to_string(), "1 - 3/2*q^2");
    }

    #[test]
    fn exact_division() {
        let one = RingElem::one();
        let q2 = q().pow(2);
        let num = &one - &q2.pow(2);
        let den = &one - &q2;
        assert_eq!(num.div_exact(&den), Some(&one + &q2));
        assert_eq!(den.div_exact(&num), None);
        let two_var = &q() - &RingElem::var_pow(1, 1);
        let prod = &two_var * &(&q() + &RingElem::var_pow(1, -3));
        assert_eq!(prod.div_exact(&two_var), Some(&q() + &RingElem::var_pow(1, -3)));
    }

    #[test]
    fn json_round_trip() {
        let x = &q().pow(-1) + &RingElem::var_pow(1, 2).scale(&BigRational::new((-5).into(), 7.into()));
        let j = x.to_json(2);
        assert_eq!(RingElem::from_json(&j).unwrap(), x);
    }

    #[test]
    fn eval_rejects_negative_power_of_zero() {
        let x = q().pow(-1);
        assert!(x.eval(&[BigRational::zero()]).is_none());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(x.eval(&[half]), Some(BigRational::from_integer(2.into())));
    }
}
