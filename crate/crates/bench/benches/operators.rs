use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hecke_core::gln::{self, HallLittlewood};
use hecke_core::heckeops::{center_diff, that, HeckeContext};
use hecke_core::intertwine::Intertwiner;
use hecke_core::pieri::pieri_expand;
use hecke_core::rootsys::{RootSystem, Weight};
use hecke_core::spherical::macdonald_p;
use std::hint::black_box;

fn ctx(label: &str) -> hecke_core::heckeops::Ctx {
    HeckeContext::formal(RootSystem::parse(label).unwrap())
}

fn operator_rows(c: &mut Criterion) {
    let mut g = c.benchmark_group("rows");
    for label in ["A2", "B3", "G2"] {
        let cx = ctx(label);
        let ball = cx.rs.ball(3);
        let t1 = that(&cx, 1).unwrap();
        g.bench_with_input(BenchmarkId::new("T1-ball3", label), &ball, |b, ball| {
            b.iter(|| ball.iter().map(|l| t1.row(l).len()).sum::<usize>())
        });
        let lam = cx.rs.dominant_ball(1).into_iter().last().unwrap();
        g.bench_with_input(BenchmarkId::new("center-row", label), &lam, |b, lam| {
            b.iter(|| center_diff(&cx, lam).unwrap().row(&Weight::zero(cx.rs.rank())).len())
        });
        g.bench_with_input(BenchmarkId::new("intertwiner-ball2", label), &cx, |b, cx| {
            b.iter(|| {
                let j = Intertwiner::new(cx);
                cx.rs.ball(2).iter().map(|l| j.row(l).len()).sum::<usize>()
            })
        });
    }
    g.finish();
}

fn polynomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("polynomials");
    g.sample_size(10);
    for (label, lam) in [("A2", "2,1"), ("C2", "1,1"), ("G2", "1,0")] {
        let cx = ctx(label);
        let lam = Weight::parse(lam).unwrap();
        g.bench_function(BenchmarkId::new("macdonald-P", label), |b| b.iter(|| macdonald_p(&cx, black_box(&lam)).unwrap()));
    }
    for (n, lam) in [(3, "3,1,0"), (4, "2,1,1,0")] {
        let lam = Weight::parse(lam).unwrap();
        g.bench_function(BenchmarkId::new("hall-littlewood", n), |b| b.iter(|| gln::hall_littlewood(n, black_box(&lam)).unwrap()));
    }
    g.finish();
}

fn pieri(c: &mut Criterion) {
    let mut g = c.benchmark_group("pieri");
    g.sample_size(10);
    for (label, om, lam) in [("A2", "1,0", "2,1"), ("C2", "0,1", "2,1"), ("B3", "0,0,1", "1,1,1")] {
        let cx = ctx(label);
        let om = Weight::parse(om).unwrap();
        let lam = Weight::parse(lam).unwrap();
        g.bench_function(BenchmarkId::new("closed-form", label), |b| b.iter(|| pieri_expand(&cx, &om, black_box(&lam)).unwrap()));
    }
    let lam = Weight::parse("2,1,0").unwrap();
    g.bench_function("morris-GL3-r2", |b| b.iter(|| gln::morris_pieri(3, 2, black_box(&lam)).unwrap()));
    g.bench_function("morris-brute-force-GL3-r2", |b| {
        b.iter(|| HallLittlewood::new(3).unwrap().pieri_brute_force(2, black_box(&lam)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, operator_rows, polynomials, pieri);
criterion_main!(benches);
