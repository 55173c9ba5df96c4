use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RingElem;
use crate::error::{Error, Result};
use crate::rootsys::{AffineWeylElement, FiniteWeylElement, Root, RootSystem, Weight};

/// Value of the multiplicity function on each reflection class. Class 0 is
/// the class of α_0.
#[derive(Clone, Debug)]
pub struct MultiplicityParams {
    values: Vec<RingElem>,
    inverses: Vec<RingElem>,
    names: Vec<String>,
    numeric: bool,
}

impl MultiplicityParams {
    /// One formal variable per reflection class.
    pub fn formal(rs: &RootSystem) -> Self {
        let values: Vec<RingElem> = (0..rs.num_classes()).map(|c| RingElem::var_pow(c, 1)).collect();
        let inverses = values.iter().map(|v| v.inverse().unwrap()).collect();
        Self { values, inverses, names: rs.param_names(), numeric: false }
    }

    /// Rational specialization. A single value is used for every class.
    pub fn numeric(rs: &RootSystem, vals: &[BigRational]) -> Result<Self> {
        let k = rs.num_classes();
        let vals: Vec<BigRational> = match vals.len() {
            1 => vec![vals[0].clone(); k],
            m if m == k => vals.to_vec(),
            m => return Err(Error::Parse(format!("{m} parameter values given, {k} classes"))),
        };
        if vals.iter().any(|v| v.is_zero()) {
            return Err(Error::ParamOutOfRange("0".into()));
        }
        let values: Vec<RingElem> = vals.iter().cloned().map(RingElem::constant).collect();
        let inverses = vals.iter().map(|v| RingElem::constant(v.recip())).collect();
        Ok(Self { values, inverses, names: rs.param_names(), numeric: true })
    }

    pub fn is_numeric(&self) -> bool {
        self.numeric
    }

    /// Every value is a rational strictly between 0 and 1.
    pub fn check_unit_interval(&self) -> Result<()> {
        for v in &self.values {
            let c = v.as_constant().ok_or_else(|| Error::ParamOutOfRange("formal".into()))?;
            if !c.is_positive() || c >= BigRational::one() {
                return Err(Error::ParamOutOfRange(super::rational_to_string(&c)));
            }
        }
        Ok(())
    }

    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(|s| s.as_str()).collect()
    }

    pub fn num_classes(&self) -> usize {
        self.values.len()
    }

    pub fn format(&self, x: &RingElem) -> String {
        x.format_with(&self.names())
    }

    pub fn to_json(&self, x: &RingElem) -> serde_json::Value {
        x.to_json(if self.numeric { 0 } else { self.values.len() })
    }

    pub fn class_value(&self, c: usize) -> &RingElem {
        &self.values[c]
    }

    pub fn class_pow(&self, c: usize, e: i32) -> RingElem {
        if e >= 0 {
            self.values[c].pow(e)
        } else {
            self.inverses[c].pow(-e)
        }
    }

    pub fn q_root(&self, root: &Root) -> &RingElem {
        &self.values[root.class]
    }

    /// q_j for generator j (0..=n).
    pub fn q_j(&self, rs: &RootSystem, j: usize) -> &RingElem {
        &self.values[rs.root(j).class]
    }

    pub fn q_j_inv(&self, rs: &RootSystem, j: usize) -> &RingElem {
        &self.inverses[rs.root(j).class]
    }

    /// Monomial ∏_c q_c^{e_c}.
    pub fn monomial(&self, exps: &[i32]) -> RingElem {
        let mut out = RingElem::one();
        for (c, &e) in exps.iter().enumerate() {
            if e != 0 {
                out = &out * &self.class_pow(c, e);
            }
        }
        out
    }

    /// q_w for an affine Weyl group element.
    pub fn q_of_element(&self, rs: &RootSystem, w: &AffineWeylElement) -> RingElem {
        let counts: Vec<i32> = rs.affine_length_by_class(w).into_iter().map(|c| c as i32).collect();
        self.monomial(&counts)
    }

    /// q_w = ∏_{α ∈ R(w)} q_α for w ∈ W_0.
    pub fn q_finite(&self, rs: &RootSystem, w: &FiniteWeylElement) -> RingElem {
        let mut counts = vec![0; self.values.len()];
        for i in rs.inversion_set(w) {
            counts[rs.positive_roots()[i].class] += 1;
        }
        self.monomial(&counts)
    }

    /// q_{w_λ} = ∏ q_α over α > 0 with <λ, α^∨> < 0.
    pub fn q_w_lambda(&self, rs: &RootSystem, lambda: &Weight) -> RingElem {
        let mut counts = vec![0; self.values.len()];
        for r in rs.positive_roots() {
            if rs.pair(lambda, r) < 0 {
                counts[r.class] += 1;
            }
        }
        self.monomial(&counts)
    }

    /// e_q(λ) = ∏_{α>0} q_α^{<λ,α^∨>}.
    pub fn e_q(&self, rs: &RootSystem, lambda: &Weight) -> RingElem {
        let mut counts = vec![0; self.values.len()];
        for r in rs.positive_roots() {
            counts[r.class] += rs.pair(lambda, r);
        }
        self.monomial(&counts)
    }

    /// q_{t_λ} = e_q(λ_+).
    pub fn q_t(&self, rs: &RootSystem, lambda: &Weight) -> RingElem {
        self.e_q(rs, &rs.dominant(lambda))
    }

    /// Σ q_w^2 over W_0 (λ = None) or over the stabilizer of λ, by brute force.
    pub fn poincare_brute(&self, rs: &RootSystem, lambda: Option<&Weight>) -> RingElem {
        rs.weyl_elements()
            .iter()
            .filter(|w| lambda.is_none_or(|l| w.apply(l) == *l))
            .map(|w| self.q_finite(rs, w).pow(2))
            .sum()
    }

    /// Macdonald's product formula ∏_{α>0, <λ,α^∨>=0} (1 − q_α² e_q(α))/(1 − e_q(α)).
    pub fn poincare_product(&self, rs: &RootSystem, lambda: Option<&Weight>) -> Result<RingElem> {
        let mut num = RingElem::one();
        let mut den = RingElem::one();
        let one = RingElem::one();
        for r in rs.positive_roots() {
            if lambda.is_some_and(|l| rs.pair(l, r) != 0) {
                continue;
            }
            let e = self.e_q(rs, &r.weight);
            num = &num * &(&one - &(&self.q_root(r).pow(2) * &e));
            den = &den * &(&one - &e);
        }
        num.div_exact(&den).ok_or(Error::InexactDivision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poincare_a2() {
        let rs = RootSystem::parse("A2").unwrap();
        let p = MultiplicityParams::formal(&rs);
        let q2 = RingElem::var_pow(0, 2);
        let expect = RingElem::one() + q2.scale(&BigRational::from_integer(2.into())) + q2.pow(2).scale(&BigRational::from_integer(2.into())) + q2.pow(3);
        assert_eq!(p.poincare_brute(&rs, None), expect);
        assert_eq!(p.poincare_product(&rs, None).unwrap(), expect);
        assert!(p.poincare_brute(&rs, Some(&rs.rho())).is_one());
    }

    #[test]
    fn e_q_values() {
        let rs = RootSystem::parse("A1").unwrap();
        let p = MultiplicityParams::formal(&rs);
        assert_eq!(p.e_q(&rs, &Weight::new(&[1])), RingElem::var_pow(0, 1));
        assert_eq!(p.e_q(&rs, &Weight::new(&[2])), RingElem::var_pow(0, 2));
        assert_eq!(p.e_q(&rs, &Weight::new(&[-2])), RingElem::var_pow(0, -2));
        let a2 = RootSystem::parse("A2").unwrap();
        let p2 = MultiplicityParams::formal(&a2);
        let t = AffineWeylElement::translation(a2.omega(1));
        assert_eq!(p2.q_of_element(&a2, &t), RingElem::var_pow(0, 2));
    }
}
