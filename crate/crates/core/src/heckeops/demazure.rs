use super::Ctx;
use crate::error::Result;
use crate::latfun::GroupAlgebraElem;
use crate::qring::RingElem;
use crate::rootsys::Weight;

/// The polynomial representation on the group algebra: Demazure-Lusztig
/// operators Ť_j and multiplication by e^λ for Y^λ.
#[derive(Clone, Debug)]
pub struct PolyRep {
    ctx: Ctx,
}

impl PolyRep {
    pub fn new(ctx: &Ctx) -> Self {
        Self { ctx: ctx.clone() }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Ť_j e^λ for j ≥ 1, by the string expansion.
    pub fn t_j_monomial(&self, j: usize, lambda: &Weight) -> GroupAlgebraElem {
        let rs = &self.ctx.rs;
        let q = self.ctx.q_j(j);
        let gap = self.ctx.q_gap(j);
        let alpha = rs.alpha(j);
        let k = lambda.get(j - 1);
        let mut out = GroupAlgebraElem::monomial(rs.reflect(j, lambda), q.clone());
        if k > 0 {
            for i in 0..k {
                out.add_at(*lambda - alpha.scale(i), &gap);
            }
        } else if k < 0 {
            let neg = -&gap;
            for i in 1..=-k {
                out.add_at(*lambda + alpha.scale(i), &neg);
            }
        }
        out
    }

    fn linear(&self, p: &GroupAlgebraElem, on_monomial: impl Fn(&Weight) -> GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = GroupAlgebraElem::zero(p.rank());
        for (w, c) in p.iter() {
            for (v, d) in on_monomial(w).iter() {
                out.add_at(*v, &(c * d));
            }
        }
        out
    }

    pub fn t_j(&self, j: usize, p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        if j == 0 {
            return self.t_0(p);
        }
        Ok(self.linear(p, |w| self.t_j_monomial(j, w)))
    }

    /// Ť_j^{-1} = Ť_j − (q_j − q_j^{-1}).
    pub fn t_j_inv(&self, j: usize, p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        Ok(self.t_j(j, p)?.sub(&p.scale(&self.ctx.q_gap(j))))
    }

    /// Ť_w p for w = s_{word[0]} ⋯ s_{word[k-1]}: the last letter acts first.
    pub fn t_word(&self, word: &[usize], p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        let mut cur = p.clone();
        for &j in word.iter().rev() {
            cur = self.t_j(j, &cur)?;
        }
        Ok(cur)
    }

    /// Ť_w^{-1} p = Ť_{word[k-1]}^{-1} ⋯ Ť_{word[0]}^{-1} p.
    pub fn t_word_inv(&self, word: &[usize], p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        let mut cur = p.clone();
        for &j in word {
            cur = self.t_j_inv(j, &cur)?;
        }
        Ok(cur)
    }

    /// Ť_0 = e^{α_0} Ť_s^{-1} with s = s_{α_0}.
    pub fn t_0(&self, p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        let rs = &self.ctx.rs;
        let a0 = rs.alpha0()?;
        let word = rs.reduced_word(&rs.reflection(rs.root(0)));
        Ok(self.y(&a0, &self.t_word_inv(&word, p)?))
    }

    /// Ť_{u_j} = e^{ω_j} Ť_{v_{ω_j}}^{-1}.
    pub fn t_u(&self, j: usize, p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        if j == 0 {
            return Ok(p.clone());
        }
        let rs = &self.ctx.rs;
        let om = rs.omega(j);
        let word = rs.reduced_word(&rs.v_lambda(&om));
        Ok(self.y(&om, &self.t_word_inv(&word, p)?))
    }

    /// Ť_{u_j}^{-1} = Ť_{v_{ω_j}} e^{−ω_j}.
    pub fn t_u_inv(&self, j: usize, p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        if j == 0 {
            return Ok(p.clone());
        }
        let rs = &self.ctx.rs;
        let om = rs.omega(j);
        let word = rs.reduced_word(&rs.v_lambda(&om));
        self.t_word(&word, &self.y(&-om, p))
    }

    /// Y^λ acts by multiplication with e^λ.
    pub fn y(&self, lambda: &Weight, p: &GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = GroupAlgebraElem::zero(p.rank());
        for (w, c) in p.iter() {
            out.add_at(*w + *lambda, c);
        }
        out
    }

    /// Ť(1_0) p with 1_0 = Σ_{w ∈ W_0} q_w T_w.
    pub fn one_zero(&self, p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        let rs = &self.ctx.rs;
        let mut out = GroupAlgebraElem::zero(p.rank());
        for w in rs.weyl_elements() {
            let word = rs.reduced_word(w);
            let qw = self.ctx.params.q_finite(rs, w);
            out = out.add(&self.t_word(&word, p)?.scale(&qw));
        }
        Ok(out)
    }

    /// Right-hand side of the Bernstein relation applied to p:
    /// (q_j − q_j^{-1}) (e^λ − e^{s_jλ}) / (1 − e^{−α_j}) · p, via the string sum.
    pub fn bernstein_rhs(&self, j: usize, lambda: &Weight, p: &GroupAlgebraElem) -> GroupAlgebraElem {
        let rs = &self.ctx.rs;
        let alpha = rs.alpha(j);
        let k = lambda.get(j - 1);
        let mut quot = GroupAlgebraElem::zero(p.rank());
        let one = RingElem::one();
        if k > 0 {
            for i in 0..k {
                quot.add_at(*lambda - alpha.scale(i), &one);
            }
        } else if k < 0 {
            let m1 = RingElem::from_int(-1);
            for i in 1..=-k {
                quot.add_at(*lambda + alpha.scale(i), &m1);
            }
        }
        quot.mul(p).scale(&self.ctx.q_gap(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckeops::HeckeContext;
    use crate::rootsys::RootSystem;

    #[test]
    fn small_pairings() {
        let ctx = HeckeContext::formal(RootSystem::parse("A2").unwrap());
        let pr = PolyRep::new(&ctx);
        let q = RingElem::var_pow(0, 1);
        let lam = Weight::new(&[1, 0]);
        let got = pr.t_j_monomial(1, &lam);
        let mut expect = GroupAlgebraElem::monomial(ctx.rs.reflect(1, &lam), q.clone());
        expect.add_at(lam, &ctx.q_gap(1));
        assert_eq!(got, expect);
        let z = Weight::new(&[0, 3]);
        assert_eq!(pr.t_j_monomial(1, &z), GroupAlgebraElem::monomial(z, q));
    }

    #[test]
    fn one_zero_of_one_is_poincare() {
        let ctx = HeckeContext::formal(RootSystem::parse("B2").unwrap());
        let pr = PolyRep::new(&ctx);
        let got = pr.one_zero(&GroupAlgebraElem::one(2)).unwrap();
        let expect = ctx.params.poincare_brute(&ctx.rs, None);
        assert_eq!(got, GroupAlgebraElem::monomial(Weight::zero(2), expect));
    }
}
