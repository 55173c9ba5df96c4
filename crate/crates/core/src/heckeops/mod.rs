//! Difference-reflection, integral-reflection and Demazure-Lusztig operators.

mod demazure;
mod op;
pub mod verify;
mod word;

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

pub use demazure::PolyRep;
pub use op::{
    eval_form, eval_form_by, first_row_mismatch, first_value_mismatch, form_add, form_add_scaled, form_sub, form_to_string,
    LatticeOp, LinearForm, Operator,
};
pub use word::{HeckeWord, Representation, Token};

use crate::error::{Error, Result};
use crate::qring::{MultiplicityParams, RingElem};
use crate::rootsys::{AffineWeylElement, RootSystem, Weight};

/// Root system plus multiplicity parameters: everything an operator needs.
#[derive(Debug)]
pub struct HeckeContext {
    pub rs: RootSystem,
    pub params: MultiplicityParams,
    y_cache: Mutex<HashMap<Weight, Operator>>,
    fund_cache: Mutex<HashMap<(usize, bool), Operator>>,
}

pub type Ctx = Arc<HeckeContext>;

impl HeckeContext {
    pub fn new(rs: RootSystem, params: MultiplicityParams) -> Ctx {
        Arc::new(Self { rs, params, y_cache: Mutex::new(HashMap::new()), fund_cache: Mutex::new(HashMap::new()) })
    }

    pub fn formal(rs: RootSystem) -> Ctx {
        let params = MultiplicityParams::formal(&rs);
        Self::new(rs, params)
    }

    pub fn q_j(&self, j: usize) -> &RingElem {
        self.params.q_j(&self.rs, j)
    }

    pub fn q_j_inv(&self, j: usize) -> &RingElem {
        self.params.q_j_inv(&self.rs, j)
    }

    /// q_j − q_j^{-1}.
    pub fn q_gap(&self, j: usize) -> RingElem {
        self.q_j(j) - self.q_j_inv(j)
    }

    /// χ_j(λ): q_j if V_j separates λ from A, 1 on V_j, q_j^{-1} otherwise.
    pub fn chi(&self, j: usize, lambda: &Weight) -> RingElem {
        match self.rs.wall_side(j, lambda) {
            std::cmp::Ordering::Greater => self.q_j(j).clone(),
            std::cmp::Ordering::Equal => RingElem::one(),
            std::cmp::Ordering::Less => self.q_j_inv(j).clone(),
        }
    }

    fn check_generator(&self, j: usize) -> Result<()> {
        if j > self.rs.rank() {
            return Err(Error::IndexOutOfRange { index: j, bound: self.rs.rank() + 1 });
        }
        if j == 0 && !self.rs.is_irreducible() {
            return Err(Error::Reducible("the affine generator"));
        }
        Ok(())
    }
}

fn reflect_support(rs: &RootSystem, j: usize, s: &BTreeSet<Weight>) -> BTreeSet<Weight> {
    let mut out = s.clone();
    out.extend(s.iter().map(|w| rs.reflect_affine(j, w)));
    out
}

/// T̂_j = q_j + χ_j (s_j − 1).
pub fn that(ctx: &Ctx, j: usize) -> Result<Operator> {
    ctx.check_generator(j)?;
    let c = ctx.clone();
    let c2 = ctx.clone();
    Ok(Operator::local(
        move |at| {
            let mut f = LinearForm::new();
            let q = c.q_j(j);
            let s = c.rs.reflect_affine(j, at);
            if s == *at {
                form_add(&mut f, *at, q);
            } else {
                let chi = c.chi(j, at);
                form_add(&mut f, *at, &(q - &chi));
                form_add(&mut f, s, &chi);
            }
            f
        },
        move |s| reflect_support(&c2.rs, j, s),
    ))
}

/// T̂_j^{-1} = T̂_j − (q_j − q_j^{-1}).
pub fn that_inv(ctx: &Ctx, j: usize) -> Result<Operator> {
    Ok(that(ctx, j)?.minus(&Operator::scalar(ctx.q_gap(j))))
}

/// The affine Weyl group acting by (wf)(λ) = f(w^{-1}λ).
pub fn weyl_op(w: &AffineWeylElement) -> Operator {
    let winv = w.inverse();
    let w2 = w.clone();
    Operator::local(
        move |at| {
            let mut f = LinearForm::new();
            form_add(&mut f, winv.apply(at), &RingElem::one());
            f
        },
        move |s| s.iter().map(|x| w2.apply(x)).collect(),
    )
}

/// t_λ: (t_λ f)(μ) = f(μ − λ).
pub fn translate(lambda: Weight) -> Operator {
    weyl_op(&AffineWeylElement::translation(lambda))
}

/// I_j = q_j s_j + (q_j − q_j^{-1}) J_j for j ≥ 1; I_0 = t_{α_0} I_s^{-1}.
pub fn int_i(ctx: &Ctx, j: usize) -> Result<Operator> {
    ctx.check_generator(j)?;
    if j == 0 {
        let a0 = ctx.rs.alpha0()?;
        let s = ctx.rs.reflection(ctx.rs.root(0));
        let word = ctx.rs.reduced_word(&s);
        return Ok(translate(a0).then(&int_finite_inv(ctx, &word)?));
    }
    let c = ctx.clone();
    Ok(Operator::from_rows(move |at| {
        let mut f = LinearForm::new();
        let q = c.q_j(j);
        let gap = c.q_gap(j);
        let alpha = c.rs.alpha(j);
        let k = at.get(j - 1);
        form_add(&mut f, c.rs.reflect(j, at), q);
        if k > 0 {
            let neg = -&gap;
            for i in 1..=k {
                form_add(&mut f, *at - alpha.scale(i), &neg);
            }
        } else if k < 0 {
            for i in 0..-k {
                form_add(&mut f, *at + alpha.scale(i), &gap);
            }
        }
        f
    }))
}

/// I_j^{-1} = I_j − (q_j − q_j^{-1}).
pub fn int_i_inv(ctx: &Ctx, j: usize) -> Result<Operator> {
    Ok(int_i(ctx, j)?.minus(&Operator::scalar(ctx.q_gap(j))))
}

/// I_w for w = s_{word[0]} ⋯ s_{word[k-1]} (finite, reduced).
pub fn int_finite(ctx: &Ctx, word: &[usize]) -> Result<Operator> {
    Ok(Operator::product(word.iter().map(|&j| int_i(ctx, j)).collect::<Result<_>>()?))
}

/// I_w^{-1} = I_{word[k-1]}^{-1} ∘ ⋯ ∘ I_{word[0]}^{-1}.
pub fn int_finite_inv(ctx: &Ctx, word: &[usize]) -> Result<Operator> {
    Ok(Operator::product(word.iter().rev().map(|&j| int_i_inv(ctx, j)).collect::<Result<_>>()?))
}

/// I_{u_j} = t_{ω_j} I_{v_{ω_j}}^{-1}; j = 0 gives the identity.
pub fn int_u(ctx: &Ctx, j: usize) -> Result<Operator> {
    if j == 0 {
        return Ok(Operator::identity());
    }
    check_omega_index(ctx, j)?;
    let om = ctx.rs.omega(j);
    let v = ctx.rs.v_lambda(&om);
    Ok(translate(om).then(&int_finite_inv(ctx, &ctx.rs.reduced_word(&v))?))
}

/// I_{u_j}^{-1} = I_{v_{ω_j}} t_{−ω_j}.
pub fn int_u_inv(ctx: &Ctx, j: usize) -> Result<Operator> {
    if j == 0 {
        return Ok(Operator::identity());
    }
    check_omega_index(ctx, j)?;
    let om = ctx.rs.omega(j);
    let v = ctx.rs.v_lambda(&om);
    Ok(int_finite(ctx, &ctx.rs.reduced_word(&v))?.then(&translate(-om)))
}

fn check_omega_index(ctx: &Ctx, j: usize) -> Result<()> {
    if !ctx.rs.omega_indices()?.contains(&j) {
        return Err(Error::InvalidToken { token: format!("U{j}"), reason: "not an element of Ω".into() });
    }
    Ok(())
}

/// T̂_w for an affine element through its reduced expression s_{j_1}⋯s_{j_k} u.
pub fn that_element(ctx: &Ctx, w: &AffineWeylElement) -> Result<Operator> {
    let rw = ctx.rs.affine_reduced_word(w)?;
    let mut ops: Vec<Operator> = rw.word.iter().map(|&j| that(ctx, j)).collect::<Result<_>>()?;
    ops.push(weyl_op(&rw.omega));
    Ok(Operator::product(ops))
}

/// T̂_w^{-1} = u^{-1} T̂_{j_k}^{-1} ⋯ T̂_{j_1}^{-1}.
pub fn that_element_inv(ctx: &Ctx, w: &AffineWeylElement) -> Result<Operator> {
    let rw = ctx.rs.affine_reduced_word(w)?;
    let mut ops = vec![weyl_op(&rw.omega.inverse())];
    for &j in rw.word.iter().rev() {
        ops.push(that_inv(ctx, j)?);
    }
    Ok(Operator::product(ops))
}

/// Split λ = μ − ν with μ, ν dominant (coordinatewise positive and negative parts).
pub fn dominant_split(lambda: &Weight) -> (Weight, Weight) {
    let mut mu = *lambda;
    let mut nu = Weight::zero(lambda.rank());
    for i in 0..lambda.rank() {
        let x = lambda.get(i);
        mu.set(i, x.max(0));
        nu.set(i, (-x).max(0));
    }
    (mu, nu)
}

/// Y^λ = T̂_{t_μ} T̂_{t_ν}^{-1} in the difference representation.
pub fn y_diff(ctx: &Ctx, lambda: &Weight) -> Result<Operator> {
    if let Some(op) = ctx.y_cache.lock().unwrap().get(lambda) {
        return Ok(op.clone());
    }
    let (mu, nu) = dominant_split(lambda);
    let op = y_diff_split(ctx, &mu, &nu)?.memoized();
    ctx.y_cache.lock().unwrap().insert(*lambda, op.clone());
    Ok(op)
}

/// T̂_{t_{ω_i}} or its inverse, rows cached.
fn that_fundamental(ctx: &Ctx, i: usize, inverse: bool) -> Result<Operator> {
    if let Some(op) = ctx.fund_cache.lock().unwrap().get(&(i, inverse)) {
        return Ok(op.clone());
    }
    let t = AffineWeylElement::translation(ctx.rs.omega(i));
    let op = if inverse { that_element_inv(ctx, &t)? } else { that_element(ctx, &t)? }.memoized();
    ctx.fund_cache.lock().unwrap().insert((i, inverse), op.clone());
    Ok(op)
}

/// T̂_{t_μ} (or its inverse) for dominant μ as a product of the fundamental
/// translations; t_{λ+μ} = t_λ t_μ is length-additive on P^+.
pub fn that_dominant_translation(ctx: &Ctx, mu: &Weight, inverse: bool) -> Result<Operator> {
    if !ctx.rs.is_dominant(mu) {
        return Err(Error::NotDominant(*mu));
    }
    let mut ops = Vec::new();
    for i in 1..=ctx.rs.rank() {
        for _ in 0..mu.get(i - 1) {
            ops.push(that_fundamental(ctx, i, inverse)?);
        }
    }
    Ok(Operator::product(ops))
}

/// Y^{μ−ν} through an explicit decomposition into dominant weights.
pub fn y_diff_split(ctx: &Ctx, mu: &Weight, nu: &Weight) -> Result<Operator> {
    let a = that_dominant_translation(ctx, mu, false)?;
    let b = that_dominant_translation(ctx, nu, true)?;
    Ok(a.then(&b))
}

/// m_λ(Y) = Σ_{μ ∈ W_0λ} Y^μ in the difference representation.
pub fn center_diff(ctx: &Ctx, lambda: &Weight) -> Result<Operator> {
    let terms = ctx
        .rs
        .orbit(lambda)
        .iter()
        .map(|mu| Ok((RingElem::one(), y_diff(ctx, mu)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Operator::linear_combination(terms))
}

/// m_λ(Y) in the integral representation: Σ t_μ.
pub fn center_int(ctx: &Ctx, lambda: &Weight) -> Operator {
    let terms = ctx.rs.orbit(lambda).into_iter().map(|mu| (RingElem::one(), translate(mu))).collect();
    Operator::linear_combination(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latfun::LatticeFunction;

    fn a1() -> Ctx {
        HeckeContext::formal(RootSystem::parse("A1").unwrap())
    }

    #[test]
    fn that_on_wall_is_scalar() {
        let ctx = a1();
        let t = that(&ctx, 1).unwrap();
        let row = t.row(&Weight::new(&[0]));
        assert_eq!(row.len(), 1);
        assert_eq!(row[&Weight::new(&[0])], RingElem::var_pow(0, 1));
    }

    #[test]
    fn int_i_small_pairings() {
        let ctx = HeckeContext::formal(RootSystem::parse("A2").unwrap());
        let i1 = int_i(&ctx, 1).unwrap();
        let q = RingElem::var_pow(0, 1);
        let one = RingElem::one();
        let lam = Weight::new(&[1, 0]);
        let a = ctx.rs.alpha(1);
        // q (I_1 f)(λ) = f(λ − α_1) when <λ, α_1^∨> = 1
        let row = i1.row(&lam);
        assert_eq!(row.len(), 1);
        assert_eq!(&q * &row[&(lam - a)], one);
        // <λ, α_1^∨> = 2: q (I_1 f)(λ) = f(λ − 2α) + (1 − q^2) f(λ − α)
        let lam2 = Weight::new(&[2, 0]);
        let row = i1.row(&lam2);
        assert_eq!(&q * &row[&(lam2 - a.scale(2))], one);
        assert_eq!(&q * &row[&(lam2 - a)], &one - &q.pow(2));
    }

    #[test]
    fn i0_on_delta_a1() {
        let ctx = a1();
        let i0 = int_i(&ctx, 0).unwrap();
        let f = LatticeFunction::delta(Weight::new(&[0]));
        // (I_0 f)(α) = (I_1^{-1} f)(0) = q^{-1} f(0)
        assert_eq!(i0.eval_at(&f, &Weight::new(&[2])), RingElem::var_pow(0, -1));
    }
}
