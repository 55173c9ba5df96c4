use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::{Root, RootSystem, Weight};

/// Element of the finite Weyl group, stored as its integer matrix on
/// fundamental-weight coordinates: (wλ)_i = Σ_j m[i][j] λ_j.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteWeylElement {
    n: usize,
    m: Vec<i32>,
}

impl FiniteWeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        Self { n, m }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        let n = self.n;
        let mut out = Weight::zero(n);
        for i in 0..n {
            let mut s = 0;
            for j in 0..n {
                s += self.m[i * n + j] * lambda.get(j);
            }
            out.set(i, s);
        }
        out
    }

    /// The product self · other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n;
        let mut m = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.m[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    m[i * n + j] += a * other.m[k * n + j];
                }
            }
        }
        Self { n, m }
    }

    pub fn inverse(&self) -> Self {
        // Finite group: the inverse is the last power before the identity.
        let id = Self::identity(self.n);
        let mut prev = id.clone();
        let mut cur = self.clone();
        for _ in 0..100_000 {
            if cur == id {
                return prev;
            }
            prev = cur.clone();
            cur = cur.compose(self);
        }
        unreachable!("element of a finite group has finite order")
    }
}

impl fmt::Debug for FiniteWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W0{:?}", self.m)
    }
}

#[derive(Clone, Default)]
pub(crate) struct WeylData {
    elements: OnceLock<Vec<FiniteWeylElement>>,
}

impl WeylData {
    pub(crate) fn build(_rs: &RootSystem) -> Self {
        Self::default()
    }
}

impl RootSystem {
    /// Simple reflection s_j (1-based) as a group element.
    pub fn s(&self, j: usize) -> FiniteWeylElement {
        let n = self.n;
        let mut w = FiniteWeylElement::identity(n);
        // (s_j λ)_i = λ_i − λ_{j} a_{j i}
        for i in 0..n {
            w.m[i * n + (j - 1)] -= self.cartan[j - 1][i];
        }
        w
    }

    /// Reflection s_{β,0} for a root β.
    pub fn reflection(&self, root: &Root) -> FiniteWeylElement {
        let n = self.n;
        let mut w = FiniteWeylElement::identity(n);
        for i in 0..n {
            for j in 0..n {
                w.m[i * n + j] -= root.weight.get(i) * root.coroot.get(j);
            }
        }
        w
    }

    /// s_{j_1} s_{j_2} ⋯ s_{j_k}.
    pub fn from_word(&self, word: &[usize]) -> FiniteWeylElement {
        let mut w = FiniteWeylElement::identity(self.n);
        for &j in word {
            w = w.compose(&self.s(j));
        }
        w
    }

    /// Sign of wα: Some(true) for positive roots.
    pub fn image_is_positive(&self, w: &FiniteWeylElement, root: &Root) -> bool {
        self.root_lookup(&w.apply(&root.weight)).expect("Weyl group permutes roots").1
    }

    /// Inversion set R(w) = R^+ ∩ w^{-1}(R^-), as root indices.
    pub fn inversion_set(&self, w: &FiniteWeylElement) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| !self.image_is_positive(w, &self.roots[i])).collect()
    }

    pub fn finite_length(&self, w: &FiniteWeylElement) -> usize {
        self.roots.iter().filter(|r| !self.image_is_positive(w, r)).count()
    }

    /// Sort λ into the dominant chamber greedily; returns λ_+ and the indices
    /// of the reflections in the order they were applied.
    pub fn sort_to_dominant(&self, lambda: &Weight) -> (Weight, Vec<usize>) {
        let mut mu = *lambda;
        let mut applied = Vec::new();
        while let Some(j) = (0..self.n).find(|&i| mu.get(i) < 0) {
            mu = self.reflect(j + 1, &mu);
            applied.push(j + 1);
        }
        (mu, applied)
    }

    /// (λ_+, w_λ) with w_λ the shortest element mapping λ to P^+.
    pub fn dominant_rep(&self, lambda: &Weight) -> (Weight, FiniteWeylElement) {
        let (plus, word) = self.dominant_word(lambda);
        (plus, self.from_word(&word))
    }

    /// λ_+ and a reduced word of w_λ (w_λ = s_{word[0]} ⋯ s_{word[k-1]}).
    pub fn dominant_word(&self, lambda: &Weight) -> (Weight, Vec<usize>) {
        let (plus, mut applied) = self.sort_to_dominant(lambda);
        applied.reverse();
        (plus, applied)
    }

    /// ℓ(w_λ) = #{α > 0 : <λ, α^∨> < 0}.
    pub fn dominant_length(&self, lambda: &Weight) -> usize {
        self.roots.iter().filter(|r| self.pair(lambda, r) < 0).count()
    }

    pub fn dominant(&self, lambda: &Weight) -> Weight {
        self.sort_to_dominant(lambda).0
    }

    /// A reduced word for w: w = s_{word[0]} ⋯ s_{word[k-1]}.
    pub fn reduced_word(&self, w: &FiniteWeylElement) -> Vec<usize> {
        let (_, applied) = self.sort_to_dominant(&w.apply(&self.rho()));
        applied
    }

    /// Every element of W_0, in order of non-decreasing length.
    pub fn weyl_elements(&self) -> &[FiniteWeylElement] {
        self.weyl.elements.get_or_init(|| {
            let rho = self.rho();
            let mut seen: HashSet<Weight> = HashSet::from([rho]);
            let mut out = vec![FiniteWeylElement::identity(self.n)];
            let mut queue = VecDeque::from([0usize]);
            while let Some(k) = queue.pop_front() {
                for j in 1..=self.n {
                    let w = self.s(j).compose(&out[k]);
                    if seen.insert(w.apply(&rho)) {
                        out.push(w);
                        queue.push_back(out.len() - 1);
                    }
                }
            }
            out
        })
    }

    pub fn longest_element(&self) -> FiniteWeylElement {
        self.weyl_elements().last().unwrap().clone()
    }

    /// λ* = −w_o λ.
    pub fn star(&self, lambda: &Weight) -> Weight {
        -self.longest_element().apply(lambda)
    }

    /// The W_0-orbit of λ, sorted.
    pub fn orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen = HashSet::from([*lambda]);
        let mut queue = VecDeque::from([*lambda]);
        while let Some(mu) = queue.pop_front() {
            for j in 1..=self.n {
                let nu = self.reflect(j, &mu);
                if seen.insert(nu) {
                    queue.push_back(nu);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Stabilizer W_{0,λ} of a weight.
    pub fn stabilizer(&self, lambda: &Weight) -> Vec<FiniteWeylElement> {
        self.weyl_elements().iter().filter(|w| w.apply(lambda) == *lambda).cloned().collect()
    }

    /// Bruhat order u ≤ w via the subword property of a reduced word of w.
    pub fn bruhat_leq(&self, u: &FiniteWeylElement, w: &FiniteWeylElement) -> bool {
        let rho = self.rho();
        let target = u.apply(&rho);
        // Track subword products by their image of ρ.
        let mut reach: HashMap<Weight, FiniteWeylElement> =
            HashMap::from([(rho, FiniteWeylElement::identity(self.n))]);
        for j in self.reduced_word(w) {
            let s = self.s(j);
            let new: Vec<(Weight, FiniteWeylElement)> = reach
                .values()
                .map(|x| {
                    let y = x.compose(&s);
                    (y.apply(&rho), y)
                })
                .collect();
            for (k, v) in new {
                reach.entry(k).or_insert(v);
            }
        }
        reach.contains_key(&target)
    }

    /// Extended dominance order on P.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        let (mp, wm) = self.dominant_rep(mu);
        let (lp, wl) = self.dominant_rep(lambda);
        if mp == lp {
            return self.bruhat_leq(&wm, &wl);
        }
        self.in_positive_cone(&(lp - mp))
    }

    /// θ(μ) = <μ_+ − μ, ρ^∨> − ℓ(w_μ).
    pub fn theta(&self, mu: &Weight) -> i32 {
        let (plus, _) = self.sort_to_dominant(mu);
        let two = self.pair_2rho_check(&(plus - *mu));
        debug_assert!(two % 2 == 0);
        two / 2 - self.dominant_length(mu) as i32
    }

    /// All weights with L1 norm at most `radius`.
    pub fn ball(&self, radius: i32) -> Vec<Weight> {
        ball(self.n, radius)
    }

    /// Dominant weights with L1 norm at most `radius`.
    pub fn dominant_ball(&self, radius: i32) -> Vec<Weight> {
        self.ball(radius).into_iter().filter(|w| self.is_dominant(w)).collect()
    }

    /// Minuscule fundamental weights: max pairing with positive coroots is 1.
    pub fn minuscule_weights(&self) -> Vec<Weight> {
        (1..=self.n)
            .map(|i| self.omega(i))
            .filter(|w| self.roots.iter().all(|r| self.pair(w, r) <= 1))
            .collect()
    }

    /// Saturated set P(λ) = {μ : μ_+ ≼ λ_+}, enumerated as orbits of the
    /// dominant weights below λ_+.
    pub fn saturated_set(&self, lambda: &Weight) -> Vec<Weight> {
        let top = self.dominant(lambda);
        let mut dom = vec![top];
        let mut seen = HashSet::from([top]);
        let mut i = 0;
        while i < dom.len() {
            let mu = dom[i];
            i += 1;
            for r in &self.roots {
                let nu = mu - r.weight;
                let nu = self.dominant(&nu);
                if self.in_positive_cone(&(top - nu)) && seen.insert(nu) {
                    dom.push(nu);
                }
            }
        }
        let mut out: Vec<Weight> = dom.iter().flat_map(|d| self.orbit(d)).collect();
        out.sort();
        out
    }
}

/// All integer vectors of length n with L1 norm at most `radius`, sorted.
pub fn ball(n: usize, radius: i32) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i32; n];
    fn rec(i: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Weight>) {
        if i == cur.len() {
            out.push(Weight::new(cur));
            return;
        }
        for v in -left..=left {
            cur[i] = v;
            rec(i + 1, left - v.abs(), cur, out);
        }
        cur[i] = 0;
    }
    rec(0, radius, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        for (t, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("G2", 12), ("F4", 1152), ("D4", 192)] {
            let rs = RootSystem::parse(t).unwrap();
            assert_eq!(rs.weyl_elements().len(), order, "{t}");
            assert_eq!(rs.finite_length(&rs.longest_element()), rs.positive_roots().len());
        }
    }

    #[test]
    fn a2_dominant_rep() {
        let rs = RootSystem::parse("A2").unwrap();
        let (plus, w) = rs.dominant_rep(&Weight::new(&[-1, 0]));
        assert_eq!(plus, Weight::new(&[0, 1]));
        assert_eq!(rs.finite_length(&w), 2);
        assert_eq!(rs.reflect(1, &Weight::new(&[1, 0])), Weight::new(&[-1, 1]));
        assert_eq!(rs.star(&Weight::new(&[1, 0])), Weight::new(&[0, 1]));
    }

    #[test]
    fn a2_dominance() {
        let rs = RootSystem::parse("A2").unwrap();
        let (o1, o2) = (Weight::new(&[1, 0]), Weight::new(&[0, 1]));
        assert!(rs.dominance_leq(&rs.zero(), &Weight::new(&[1, 1])));
        assert!(!rs.dominance_leq(&o1, &o2));
        assert!(!rs.dominance_leq(&o2, &o1));
    }

    #[test]
    fn reduced_words_are_reduced() {
        for t in ["A3", "B3", "G2"] {
            let rs = RootSystem::parse(t).unwrap();
            for w in rs.weyl_elements() {
                let word = rs.reduced_word(w);
                assert_eq!(word.len(), rs.finite_length(w));
                assert_eq!(&rs.from_word(&word), w);
                assert_eq!(rs.finite_length(&w.inverse()), word.len());
            }
        }
    }

    #[test]
    fn bruhat_basics() {
        let rs = RootSystem::parse("A2").unwrap();
        let id = FiniteWeylElement::identity(2);
        let wo = rs.longest_element();
        for w in rs.weyl_elements() {
            assert!(rs.bruhat_leq(&id, w));
            assert!(rs.bruhat_leq(w, &wo));
        }
        assert!(!rs.bruhat_leq(&rs.s(1), &rs.s(2)));
    }

    #[test]
    fn theta_values() {
        let rs = RootSystem::parse("A1").unwrap();
        assert_eq!(rs.theta(&Weight::new(&[-1])), 0);
        assert_eq!(rs.theta(&Weight::new(&[3])), 0);
    }

    #[test]
    fn saturated_set_a2() {
        let rs = RootSystem::parse("A2").unwrap();
        let p = rs.saturated_set(&Weight::new(&[1, 1]));
        // orbit of ρ (6) plus 0 (1)
        assert_eq!(p.len(), 7);
    }
}
