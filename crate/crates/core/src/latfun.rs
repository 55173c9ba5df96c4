//! Finitely supported lattice functions C(P) and the group algebra ℂ[P].

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qring::RingElem;
use crate::rootsys::{AffineWeylElement, FiniteWeylElement, RootSystem, Weight};

/// Shared storage: a finite map Weight → RingElem without zero values.
#[derive(Clone, PartialEq, Eq, Default)]
struct Sparse {
    map: BTreeMap<Weight, RingElem>,
}

impl Sparse {
    fn add_at(&mut self, w: Weight, c: &RingElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.map.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn set(&mut self, w: Weight, c: RingElem) {
        if c.is_zero() {
            self.map.remove(&w);
        } else {
            self.map.insert(w, c);
        }
    }

    fn to_json(&self, nvars: usize) -> Value {
        json!({
            "terms": self.map.iter().map(|(w, c)| json!({"weight": w.coords(), "coeff": c.to_json(nvars)})).collect::<Vec<_>>()
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Parse("missing \"terms\" array".into()))?;
        let mut out = Sparse::default();
        for t in terms {
            let w: Weight = serde_json::from_value(t.get("weight").cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Parse(e.to_string()))?;
            let c = RingElem::from_json(t.get("coeff").unwrap_or(&Value::Null))?;
            out.add_at(w, &c);
        }
        Ok(out)
    }
}

/// A finitely supported function P → coefficient ring.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeFunction {
    rank: usize,
    data: Sparse,
}

impl LatticeFunction {
    pub fn zero(rank: usize) -> Self {
        Self { rank, data: Sparse::default() }
    }

    pub fn delta(at: Weight) -> Self {
        let mut f = Self::zero(at.rank());
        f.set(at, RingElem::one());
        f
    }

    pub fn from_map(rank: usize, map: BTreeMap<Weight, RingElem>) -> Self {
        let mut f = Self::zero(rank);
        for (w, c) in map {
            f.add_at(w, &c);
        }
        f
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, w: &Weight) -> RingElem {
        self.data.map.get(w).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, w: &Weight) -> Option<&RingElem> {
        self.data.map.get(w)
    }

    pub fn set(&mut self, w: Weight, c: RingElem) {
        debug_assert_eq!(w.rank(), self.rank);
        self.data.set(w, c);
    }

    pub fn add_at(&mut self, w: Weight, c: &RingElem) {
        debug_assert_eq!(w.rank(), self.rank);
        self.data.add_at(w, c);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &RingElem)> {
        self.data.map.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.data.map.keys()
    }

    pub fn len(&self) -> usize {
        self.data.map.len()
    }

    pub fn is_zero(&self) -> bool {
        self.data.map.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_at(*w, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_at(*w, &-c);
        }
        out
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, v) in self.iter() {
            out.add_at(*w, &(v * c));
        }
        out
    }

    /// Pointwise multiplication by a weight-dependent factor.
    pub fn map_values(&self, mut f: impl FnMut(&Weight, &RingElem) -> RingElem) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, v) in self.iter() {
            out.add_at(*w, &f(w, v));
        }
        out
    }

    /// (wf)(λ) = f(w^{-1}λ): the value at μ moves to wμ.
    pub fn weyl_act(&self, w: &AffineWeylElement) -> Self {
        let mut out = Self::zero(self.rank);
        for (mu, c) in self.iter() {
            out.add_at(w.apply(mu), c);
        }
        out
    }

    /// (t_λ f)(μ) = f(μ − λ).
    pub fn translate(&self, lambda: &Weight) -> Self {
        let mut out = Self::zero(self.rank);
        for (mu, c) in self.iter() {
            out.add_at(*mu + *lambda, c);
        }
        out
    }

    /// The pairing (f, p) = Σ_λ c_λ f(−λ) (coefficients are real).
    pub fn pairing(&self, p: &GroupAlgebraElem) -> RingElem {
        let mut out = RingElem::zero();
        for (lambda, c) in p.iter() {
            if let Some(v) = self.get_ref(&-*lambda) {
                out.add_mul(v, c);
            }
        }
        out
    }

    pub fn to_json(&self, nvars: usize) -> Value {
        self.data.to_json(nvars)
    }

    pub fn from_json(rank: usize, v: &Value) -> Result<Self> {
        let data = Sparse::from_json(v)?;
        for w in data.map.keys() {
            w.check_rank(rank)?;
        }
        Ok(Self { rank, data })
    }
}

impl fmt::Debug for LatticeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

/// Element Σ c_λ e^λ of the group algebra of P.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElem {
    rank: usize,
    data: Sparse,
}

impl GroupAlgebraElem {
    pub fn zero(rank: usize) -> Self {
        Self { rank, data: Sparse::default() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), RingElem::one())
    }

    /// c e^λ.
    pub fn monomial(lambda: Weight, c: RingElem) -> Self {
        let mut p = Self::zero(lambda.rank());
        p.add_at(lambda, &c);
        p
    }

    pub fn e(lambda: Weight) -> Self {
        Self::monomial(lambda, RingElem::one())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeff(&self, w: &Weight) -> RingElem {
        self.data.map.get(w).cloned().unwrap_or_default()
    }

    pub fn add_at(&mut self, w: Weight, c: &RingElem) {
        debug_assert_eq!(w.rank(), self.rank);
        self.data.add_at(w, c);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &RingElem)> {
        self.data.map.iter()
    }

    pub fn len(&self) -> usize {
        self.data.map.len()
    }

    pub fn is_zero(&self) -> bool {
        self.data.map.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_at(*w, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_at(*w, &-c);
        }
        out
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        let mut out = Self::zero(self.rank);
        if c.is_zero() {
            return out;
        }
        for (w, v) in self.iter() {
            out.add_at(*w, &(v * c));
        }
        out
    }

    /// Convolution product, e^λ e^μ = e^{λ+μ}.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let mut c = RingElem::zero();
                c.add_mul(ca, cb);
                out.add_at(*a + *b, &c);
            }
        }
        out
    }

    /// w e^λ = e^{wλ}.
    pub fn act(&self, w: &AffineWeylElement) -> Self {
        let mut out = Self::zero(self.rank);
        for (mu, c) in self.iter() {
            out.add_at(w.apply(mu), c);
        }
        out
    }

    pub fn act_finite(&self, w: &FiniteWeylElement) -> Self {
        let mut out = Self::zero(self.rank);
        for (mu, c) in self.iter() {
            out.add_at(w.apply(mu), c);
        }
        out
    }

    /// Invariance under every simple reflection.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        (1..=rs.rank()).all(|j| self.act_finite(&rs.s(j)) == *self)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.data.map.keys()
    }

    pub fn format_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (w, c) in self.data.map.iter().rev() {
            let e = format!("e{w}");
            let s = if c.is_one() {
                e
            } else if (-c).is_one() {
                format!("-{e}")
            } else if c.num_terms() == 1 {
                format!("{}*{e}", c.format_with(names))
            } else {
                format!("({})*{e}", c.format_with(names))
            };
            parts.push(s);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }

    pub fn to_json(&self, nvars: usize) -> Value {
        self.data.to_json(nvars)
    }

    pub fn from_json(rank: usize, v: &Value) -> Result<Self> {
        let data = Sparse::from_json(v)?;
        for w in data.map.keys() {
            w.check_rank(rank)?;
        }
        Ok(Self { rank, data })
    }
}

impl fmt::Display for GroupAlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&crate::qring::DEFAULT_NAMES))
    }
}

impl fmt::Debug for GroupAlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// m_λ = Σ_{μ ∈ W_0λ} e^μ.
pub fn orbit_sum(rs: &RootSystem, lambda: &Weight) -> Result<GroupAlgebraElem> {
    lambda.check_rank(rs.rank())?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(*lambda));
    }
    let mut p = GroupAlgebraElem::zero(rs.rank());
    for mu in rs.orbit(lambda) {
        p.add_at(mu, &RingElem::one());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sums() {
        let a1 = RootSystem::parse("A1").unwrap();
        let m = orbit_sum(&a1, &Weight::new(&[1])).unwrap();
        assert_eq!(m.to_string(), "e[1] + e[-1]");
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(orbit_sum(&a2, &Weight::new(&[1, 0])).unwrap().len(), 3);
        assert!(orbit_sum(&a2, &Weight::new(&[-1, 0])).is_err());
        assert_eq!(orbit_sum(&a2, &Weight::new(&[0, 0])).unwrap(), GroupAlgebraElem::one(2));
    }

    #[test]
    fn pairing_reads_negated_weight() {
        let mut f = LatticeFunction::zero(1);
        f.set(Weight::new(&[-2]), RingElem::from_int(5));
        assert_eq!(f.pairing(&GroupAlgebraElem::e(Weight::new(&[2]))), RingElem::from_int(5));
        assert!(f.pairing(&GroupAlgebraElem::e(Weight::new(&[-2]))).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let mut f = LatticeFunction::zero(2);
        f.set(Weight::new(&[1, -1]), RingElem::var_pow(0, -1));
        let back = LatticeFunction::from_json(2, &f.to_json(1)).unwrap();
        assert_eq!(back, f);
    }
}
