use std::fmt;

use super::{FiniteWeylElement, RootSystem, Weight};
use crate::error::{Error, Result};

/// The element v t_λ of W = W_0 ⋉ t_P, acting by x ↦ v(x + λ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub v: FiniteWeylElement,
    pub t: Weight,
}

impl AffineWeylElement {
    pub fn identity(n: usize) -> Self {
        Self { v: FiniteWeylElement::identity(n), t: Weight::zero(n) }
    }

    pub fn translation(lambda: Weight) -> Self {
        Self { v: FiniteWeylElement::identity(lambda.rank()), t: lambda }
    }

    pub fn finite(v: FiniteWeylElement) -> Self {
        let n = v.rank();
        Self { v, t: Weight::zero(n) }
    }

    pub fn rank(&self) -> usize {
        self.t.rank()
    }

    pub fn apply(&self, x: &Weight) -> Weight {
        self.v.apply(&(*x + self.t))
    }

    pub fn try_apply(&self, x: &Weight) -> Result<Weight> {
        x.check_rank(self.rank())?;
        Ok(self.apply(x))
    }

    /// (v t_λ)(v' t_μ) = v v' t_{v'^{-1} λ + μ}.
    pub fn compose(&self, other: &Self) -> Self {
        let vinv = other.v.inverse();
        Self { v: self.v.compose(&other.v), t: vinv.apply(&self.t) + other.t }
    }

    /// (v t_λ)^{-1} = v^{-1} t_{−vλ}.
    pub fn inverse(&self) -> Self {
        Self { v: self.v.inverse(), t: -self.v.apply(&self.t) }
    }

    pub fn is_identity(&self) -> bool {
        self.v.is_identity() && self.t.is_zero()
    }
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) t_{}", self.v, self.t)
    }
}

/// A reduced expression w = s_{j_1} ⋯ s_{j_k} u with u ∈ Ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWord {
    pub word: Vec<usize>,
    pub omega: AffineWeylElement,
}

impl RootSystem {
    /// Affine simple reflection s_j, j = 0..n.
    pub fn s_affine(&self, j: usize) -> AffineWeylElement {
        if j == 0 {
            let r = self.root(0);
            // s_0 = s_{α_0} t_{−α_0}: x ↦ s_{α_0}(x − α_0) = s_{α_0}x + α_0.
            AffineWeylElement { v: self.reflection(r), t: -r.weight }
        } else {
            AffineWeylElement::finite(self.s(j))
        }
    }

    pub fn affine_from_word(&self, word: &[usize]) -> AffineWeylElement {
        let mut w = AffineWeylElement::identity(self.n);
        for &j in word {
            w = w.compose(&self.s_affine(j));
        }
        w
    }

    /// χ(β) = 1 if β is negative, for a root given in weight coordinates.
    fn chi_neg(&self, beta: &Weight) -> i32 {
        match self.root_lookup(beta) {
            Some((_, true)) => 0,
            Some((_, false)) => 1,
            None => panic!("not a root: {beta}"),
        }
    }

    /// Number of hyperplanes of each root class separating A and wA, via the
    /// closed length formula.
    pub fn affine_length_by_class(&self, w: &AffineWeylElement) -> Vec<usize> {
        let mut counts = vec![0; self.num_classes];
        for r in &self.roots {
            let m = self.pair(&w.t, r) + self.chi_neg(&w.v.apply(&r.weight));
            counts[r.class] += m.unsigned_abs() as usize;
        }
        counts
    }

    pub fn affine_length(&self, w: &AffineWeylElement) -> usize {
        self.affine_length_by_class(w).iter().sum()
    }

    /// h with ρ/h in the fundamental alcove: h = <ρ, α_0^∨> + 1.
    fn alcove_scale(&self) -> Result<i32> {
        let a0 = self.alpha0.ok_or(Error::Reducible("alcove geometry"))?;
        Ok(self.pair(&self.rho(), &self.roots[a0]) + 1)
    }

    /// h·w(x_0) for the interior alcove point x_0 = ρ/h, and h.
    fn scaled_alcove_image(&self, w: &AffineWeylElement) -> Result<(Weight, i32)> {
        let h = self.alcove_scale()?;
        Ok((w.v.apply(&(self.rho() + w.t.scale(h))), h))
    }

    /// Count of hyperplanes V_{α,k} separating A and wA, by enumeration.
    pub fn separating_hyperplanes(&self, w: &AffineWeylElement) -> Result<usize> {
        let (y, h) = self.scaled_alcove_image(w)?;
        let rho = self.rho();
        let mut count = 0;
        for r in &self.roots {
            let a = self.pair(&rho, r);
            let b = self.pair(&y, r);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            // k with lo < k h < hi (neither endpoint is a multiple of h)
            count += (lo.div_euclid(h) + 1..=hi.div_euclid(h)).filter(|k| k * h > lo && k * h < hi).count();
        }
        Ok(count)
    }

    /// Reduced expression via left descents in the alcove picture.
    pub fn affine_reduced_word(&self, w: &AffineWeylElement) -> Result<AffineWord> {
        let mut cur = w.clone();
        let mut word = Vec::new();
        loop {
            let (y, h) = self.scaled_alcove_image(&cur)?;
            let desc = (1..=self.n)
                .find(|&j| y.get(j - 1) < 0)
                .or_else(|| (self.pair(&y, self.root(0)) > h).then_some(0));
            match desc {
                Some(j) => {
                    word.push(j);
                    cur = self.s_affine(j).compose(&cur);
                }
                None => return Ok(AffineWord { word, omega: cur }),
            }
        }
    }

    /// v_λ: the shortest element mapping λ to the closed antidominant chamber.
    pub fn v_lambda(&self, lambda: &Weight) -> FiniteWeylElement {
        self.dominant_rep(&-*lambda).1
    }

    /// u_λ = t_λ v_λ^{-1}.
    pub fn u_lambda(&self, lambda: &Weight) -> AffineWeylElement {
        let v = self.v_lambda(lambda);
        AffineWeylElement::translation(*lambda).compose(&AffineWeylElement::finite(v.inverse()))
    }

    /// ū_λ = t_λ w_λ^{-1}.
    pub fn ubar_lambda(&self, lambda: &Weight) -> AffineWeylElement {
        let (_, w) = self.dominant_rep(lambda);
        AffineWeylElement::translation(*lambda).compose(&AffineWeylElement::finite(w.inverse()))
    }

    /// Indices j (0 and the minuscule ones) labelling Ω = {u_j}.
    pub fn omega_indices(&self) -> Result<Vec<usize>> {
        let a0 = self.alpha0.ok_or(Error::Reducible("Ω"))?;
        let c = self.roots[a0].coroot;
        Ok(std::iter::once(0).chain((1..=self.n).filter(|&j| c.get(j - 1) == 1)).collect())
    }

    /// u_j; u_0 is the identity.
    pub fn u_j(&self, j: usize) -> AffineWeylElement {
        if j == 0 {
            AffineWeylElement::identity(self.n)
        } else {
            self.u_lambda(&self.omega(j))
        }
    }

    pub fn omega_group(&self) -> Result<Vec<AffineWeylElement>> {
        Ok(self.omega_indices()?.into_iter().map(|j| self.u_j(j)).collect())
    }

    /// k with u s_j u^{-1} = s_k.
    pub fn omega_conjugate(&self, u: &AffineWeylElement, j: usize) -> usize {
        let c = u.compose(&self.s_affine(j)).compose(&u.inverse());
        (0..=self.n).find(|&k| self.s_affine(k) == c).expect("Ω permutes the simple reflections")
    }

    /// Which hyperplane V_j separates λ from A (χ_j = q_j), lies on it, or neither.
    pub fn wall_side(&self, j: usize, lambda: &Weight) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let k = self.pair_j(lambda, j);
        if j == 0 {
            // A lies on the side <x, α_0^∨> < 1.
            (k - 1).cmp(&0)
        } else {
            // A lies on the side <x, α_j^∨> > 0.
            match k.cmp(&0) {
                Less => Greater,
                Equal => Equal,
                Greater => Less,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_omega() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(a1.affine_length(&AffineWeylElement::translation(a1.omega(1))), 1);
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(a2.omega_group().unwrap().len(), 3);
        let g2 = RootSystem::parse("G2").unwrap();
        assert_eq!(g2.omega_group().unwrap().len(), 1);
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"] {
            let rs = RootSystem::parse(t).unwrap();
            for u in rs.omega_group().unwrap() {
                assert_eq!(rs.affine_length(&u), 0, "{t}");
                for j in 0..=rs.rank() {
                    rs.omega_conjugate(&u, j);
                }
            }
        }
    }

    #[test]
    fn s0_acts_as_affine_reflection() {
        let rs = RootSystem::parse("B2").unwrap();
        let s0 = rs.s_affine(0);
        let a0 = rs.alpha0().unwrap();
        for x in rs.ball(3) {
            let expect = rs.reflect_root(rs.root(0), &x) + a0;
            assert_eq!(s0.apply(&x), expect);
            assert_eq!(rs.reflect_affine(0, &x), expect);
        }
        assert_eq!(rs.affine_length(&s0), 1);
    }

    #[test]
    fn reduced_words_match_length() {
        for t in ["A2", "B2", "G2", "C3"] {
            let rs = RootSystem::parse(t).unwrap();
            for lam in rs.ball(2) {
                for v in rs.weyl_elements().iter().step_by(3) {
                    let w = AffineWeylElement { v: v.clone(), t: lam };
                    let len = rs.affine_length(&w);
                    assert_eq!(rs.separating_hyperplanes(&w).unwrap(), len);
                    let rw = rs.affine_reduced_word(&w).unwrap();
                    assert_eq!(rw.word.len(), len);
                    assert_eq!(rs.affine_length(&rw.omega), 0);
                    assert_eq!(rs.affine_from_word(&rw.word).compose(&rw.omega), w);
                }
            }
        }
    }
}
