//! Randomized invariants driven by proptest.

use proptest::prelude::*;

use hecke_core::gln::{self, HallLittlewood};
use hecke_core::heckeops::{int_i, int_i_inv, that, that_inv, HeckeContext, Operator};
use hecke_core::intertwine::Intertwiner;
use hecke_core::latfun::orbit_sum;
use hecke_core::qring::RingElem;
use hecke_core::random::Sampler;
use hecke_core::rootsys::{RootSystem, Weight};
use hecke_core::spherical::macdonald_p;

const TYPES: [&str; 5] = ["A1", "A2", "B2", "C2", "G2"];

fn q_pow(e: i32) -> RingElem {
    RingElem::var_pow(0, e)
}

fn small_ring() -> impl Strategy<Value = RingElem> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4)
        .prop_map(|terms| terms.into_iter().map(|(e, c)| &RingElem::from_int(c) * &q_pow(e)).sum())
}

fn decreasing(n: usize, bound: i32) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-bound..=bound, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight::new(&v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ring_division_inverts_multiplication(a in small_ring(), b in small_ring()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a));
    }

    #[test]
    fn reflections_are_involutions(t in 0..TYPES.len(), c in prop::collection::vec(-4i32..=4, 2)) {
        let rs = RootSystem::parse(TYPES[t]).unwrap();
        let lam = Weight::new(&c[..rs.rank()]);
        for j in 1..=rs.rank() {
            prop_assert_eq!(rs.reflect(j, &rs.reflect(j, &lam)), lam);
        }
        let (dom, w) = rs.dominant_rep(&lam);
        prop_assert!(rs.is_dominant(&dom));
        prop_assert_eq!(w.apply(&lam), dom);
    }

    #[test]
    fn generators_invert_on_random_f(t in 0..TYPES.len(), seed in any::<u64>()) {
        let ctx = HeckeContext::formal(RootSystem::parse(TYPES[t]).unwrap());
        let mut s = Sampler::new(seed);
        let f = s.function(ctx.rs.rank(), 2);
        let pts = ctx.rs.ball(2);
        for j in 0..=ctx.rs.rank() {
            for (a, b) in [(that(&ctx, j).unwrap(), that_inv(&ctx, j).unwrap()), (int_i(&ctx, j).unwrap(), int_i_inv(&ctx, j).unwrap())] {
                let id = a.then(&b);
                for p in &pts {
                    prop_assert_eq!(id.eval_at(&f, p), Operator::identity().eval_at(&f, p));
                }
            }
        }
    }

    #[test]
    fn intertwiner_on_random_f(t in 0..TYPES.len(), seed in any::<u64>()) {
        let ctx = HeckeContext::formal(RootSystem::parse(TYPES[t]).unwrap());
        let jay = Intertwiner::new(&ctx);
        let mut s = Sampler::new(seed);
        let f = s.function(ctx.rs.rank(), 2);
        let j = s.index(ctx.rs.rank() + 1);
        let lhs = that(&ctx, j).unwrap().then(jay.operator());
        let rhs = jay.operator().then(&int_i(&ctx, j).unwrap());
        for p in ctx.rs.ball(1) {
            prop_assert_eq!(lhs.eval_at(&f, &p), rhs.eval_at(&f, &p));
        }
    }

    #[test]
    fn macdonald_p_is_invariant(t in 0..TYPES.len(), c in prop::collection::vec(0i32..=2, 2)) {
        let ctx = HeckeContext::formal(RootSystem::parse(TYPES[t]).unwrap());
        let lam = Weight::new(&c[..ctx.rs.rank()]);
        let p = macdonald_p(&ctx, &lam).unwrap();
        prop_assert!(p.is_weyl_invariant(&ctx.rs));
        // the top orbit is W_0 λ*
        let top = orbit_sum(&ctx.rs, &ctx.rs.star(&lam)).unwrap();
        for w in top.support() {
            prop_assert!(!p.coeff(w).is_zero());
        }
    }

    #[test]
    fn hall_littlewood_symmetric(n in 1usize..=3, lam in decreasing(3, 3)) {
        let lam = Weight::new(&lam.coords()[..n]);
        let p = gln::hall_littlewood(n, &lam).unwrap();
        for j in 1..n {
            for (w, c) in p.iter() {
                prop_assert_eq!(&p.coeff(&gln::swap(w, j)), c);
            }
        }
    }

    #[test]
    fn morris_matches_brute_force(n in 1usize..=3, lam in decreasing(3, 2), r in 1usize..=3) {
        prop_assume!(r <= n);
        let lam = Weight::new(&lam.coords()[..n]);
        let hl = HallLittlewood::new(n).unwrap();
        prop_assert_eq!(gln::morris_pieri(n, r, &lam).unwrap(), hl.pieri_brute_force(r, &lam).unwrap());
    }

    #[test]
    fn affine_generator_round_trip(c in prop::collection::vec(-5i32..=5, 1..=5)) {
        let lam = Weight::new(&c);
        prop_assert_eq!(gln::u_inv_apply(&gln::u_apply(&lam)), lam);
        let mut x = lam;
        for _ in 0..c.len() {
            x = gln::u_apply(&x);
        }
        prop_assert_eq!(x, lam + Weight::new(&vec![1; c.len()]));
    }

    #[test]
    fn m_r_commute_on_random_f(n in 2usize..=3, seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = s.function(n, 3);
        let (a, b) = (gln::m_hat(n, 1).unwrap(), gln::m_hat(n, 2).unwrap());
        for p in gln::box_points(n, 1) {
            prop_assert_eq!(a.then(&b).eval_at(&f, &p), b.then(&a).eval_at(&f, &p));
        }
    }
}
