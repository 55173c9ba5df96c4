//! Root systems, weights, finite and affine Weyl groups.

mod affine;
mod cartan;
mod weight;
mod weyl;

pub use affine::{AffineWeylElement, AffineWord};
pub use cartan::{CartanType, Root, RootSystem};
pub use weight::{Weight, MAX_RANK};
pub use weyl::{ball, FiniteWeylElement};

use crate::error::{Error, Result};

/// Which of the two situations of the Pieri case analysis applies to λ − ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieriCase {
    /// (λ−ν)_+ ≠ λ; `w` = w_{λ−ν} fixes λ.
    Shifted { w: FiniteWeylElement },
    /// (λ−ν)_+ = λ; w_{λ−ν}ν = −α_j.
    SameOrbit { j: usize, w: FiniteWeylElement },
}

impl RootSystem {
    /// One weight in every facet of the Coxeter complex: the orbits of
    /// Σ_{k∈K} ω_k over all subsets K of the simple indices.
    pub fn facet_representatives(&self) -> Vec<Weight> {
        let n = self.n;
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let coords: Vec<i32> = (0..n).map(|i| ((mask >> i) & 1) as i32).collect();
            out.extend(self.orbit(&Weight::new(&coords)));
        }
        out.sort();
        out
    }

    /// Is ν in the orbit of a minuscule weight or of α_0? Returns that
    /// dominant orbit representative.
    pub fn small_orbit_of(&self, nu: &Weight) -> Result<Weight> {
        let plus = self.dominant(nu);
        if self.minuscule_weights().contains(&plus) || self.alpha0().ok() == Some(plus) {
            Ok(plus)
        } else {
            Err(Error::NotSmallWeight(plus))
        }
    }

    pub fn classify_pieri_case(&self, lambda: &Weight, nu: &Weight) -> Result<PieriCase> {
        lambda.check_rank(self.n)?;
        nu.check_rank(self.n)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(*lambda));
        }
        self.small_orbit_of(nu)?;
        let mu = *lambda - *nu;
        let (plus, w) = self.dominant_rep(&mu);
        if plus != *lambda {
            return Ok(PieriCase::Shifted { w });
        }
        let image = w.apply(nu);
        let j = (1..=self.n)
            .find(|&j| image == -self.alpha(j))
            .expect("same-orbit case maps ν to a negative simple root");
        Ok(PieriCase::SameOrbit { j, w })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facet_counts() {
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(a2.facet_representatives().len(), 13);
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(a1.facet_representatives(), vec![Weight::new(&[-1]), Weight::new(&[0]), Weight::new(&[1])]);
        let b2 = RootSystem::parse("B2").unwrap();
        assert_eq!(b2.facet_representatives().len(), 1 + 4 + 4 + 8);
    }

    #[test]
    fn pieri_case_a1() {
        let rs = RootSystem::parse("A1").unwrap();
        let case = rs.classify_pieri_case(&Weight::new(&[1]), &Weight::new(&[2])).unwrap();
        assert!(matches!(case, PieriCase::SameOrbit { j: 1, .. }));
        let case = rs.classify_pieri_case(&Weight::new(&[3]), &Weight::new(&[2])).unwrap();
        assert!(matches!(case, PieriCase::Shifted { ref w } if w.is_identity()));
        assert!(rs.classify_pieri_case(&Weight::new(&[3]), &Weight::new(&[4])).is_err());
    }
}
