//! Seeded random inputs for the verification suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::latfun::LatticeFunction;
use crate::qring::RingElem;
use crate::rootsys::{ball, Weight};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A rational p/d with 1 ≤ |p| ≤ 9 and 1 ≤ d ≤ 4.
    pub fn small_rational(&mut self) -> BigRational {
        let p: i64 = self.rng.gen_range(1..=9) * if self.rng.gen_bool(0.5) { 1 } else { -1 };
        let d: i64 = self.rng.gen_range(1..=4);
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    /// A positive rational n/d with n, d in 1..=`bound`, different from 1.
    pub fn positive_rational(&mut self, bound: i64) -> BigRational {
        loop {
            let n = self.rng.gen_range(1..=bound);
            let d = self.rng.gen_range(1..=bound);
            if n != d {
                return BigRational::new(BigInt::from(n), BigInt::from(d));
            }
        }
    }

    /// Random f on the ball ‖λ‖ ≤ radius; each point is kept with probability 1/2.
    pub fn function(&mut self, rank: usize, radius: i32) -> LatticeFunction {
        let mut f = LatticeFunction::zero(rank);
        for w in ball(rank, radius) {
            if self.rng.gen_bool(0.5) {
                f.set(w, RingElem::constant(self.small_rational()));
            }
        }
        if f.is_zero() {
            f.set(Weight::zero(rank), RingElem::one());
        }
        f
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn weight(&mut self, rank: usize, radius: i32) -> Weight {
        let pts = ball(rank, radius);
        pts[self.index(pts.len())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = Sampler::new(7).function(2, 2);
        let b = Sampler::new(7).function(2, 2);
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }
}
