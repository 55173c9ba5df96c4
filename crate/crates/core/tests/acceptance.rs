//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `cargo test --test acceptance -- --nocapture --test-threads=1`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hecke_core::gln::{self, GlRep, HallLittlewood};
use hecke_core::heckeops::verify::{a2_braid_table_check, braid_identity_table, f0_form, hecke_suite};
use hecke_core::heckeops::{form_add_scaled, HeckeContext, LinearForm};
use hecke_core::intertwine::{minuscule_suite, intertwine_suite};
use hecke_core::latfun::{orbit_sum, GroupAlgebraElem};
use hecke_core::pieri::{eigen_checks, pieri_brute_force, pieri_expand, pieri_suite};
use hecke_core::qring::{parse_rational, RingElem};
use hecke_core::report::Report;
use hecke_core::rootsys::{RootSystem, Weight};
use hecke_core::spherical::{
    closed_form_checks, diagonalization_checks, eigenvalue, evaluate, macdonald_p, numeric_context, p_identity_checks,
    unitarity_checks, SpectralPoint,
};

const RANK_LE_3: [&str; 9] = ["A1", "A1xA1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"];
const IRREDUCIBLE_RANK_LE_2: [&str; 5] = ["A1", "A2", "B2", "C2", "G2"];

fn ctx(t: &str) -> hecke_core::heckeops::Ctx {
    HeckeContext::formal(RootSystem::parse(t).unwrap())
}

fn q_pow(e: i32) -> RingElem {
    RingElem::var_pow(0, e)
}

fn w(c: &[i32]) -> Weight {
    Weight::new(c)
}

/// Prints the criterion line and fails the test with the first failures.
fn finish(n: u32, title: &str, started: Instant, budget: Option<Duration>, report: &Report, extra: &[String]) {
    let elapsed = started.elapsed();
    let failures: Vec<String> = report.failures().map(|c| format!("{} {:?}", c.id, c.counterexample)).collect();
    let in_time = budget.is_none_or(|b| elapsed < b);
    let ok = failures.is_empty() && extra.is_empty() && in_time;
    let tag = if ok { "PASS" } else { "FAIL" };
    let budget_note = budget.map(|b| format!(", budget {:.0?}", b)).unwrap_or_default();
    println!("{tag} criterion {n}: {title} ({} checks, {elapsed:.2?}{budget_note})", report.checks.len());
    for f in failures.iter().chain(extra).take(5) {
        println!("     {f}");
    }
    assert!(ok, "criterion {n} failed");
}

#[test]
fn criterion_1_a2_braid_table() {
    let t = Instant::now();
    let c = ctx("A2");
    let rows = braid_identity_table(&c).unwrap();
    let q = q_pow(1);
    let expected = |l: &Weight| -> RingElem {
        match l.coords() {
            [1, 1] => -q_pow(-3),
            [-1, -1] => q_pow(3),
            [1, -2] | [-2, 1] => -q.clone(),
            [-1, 2] | [2, -1] => q_pow(-1),
            _ => RingElem::zero(),
        }
    };
    let mut extra = Vec::new();
    if rows.len() != 13 {
        extra.push(format!("{} facet representatives, expected 13", rows.len()));
    }
    for row in &rows {
        let mut want = LinearForm::new();
        form_add_scaled(&mut want, &f0_form(), &expected(&row.lambda));
        if row.lhs != want || row.rhs != want {
            extra.push(format!("mismatch at {}", row.lambda));
        }
    }
    let mut report = Report::new();
    report.push(a2_braid_table_check(&c).unwrap());
    finish(1, "A2 braid identity table", t, Some(Duration::from_secs(1)), &report, &extra);
}

#[test]
fn criterion_2_hecke_relations() {
    let t = Instant::now();
    let mut report = Report::new();
    for ty in ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        report.extend(hecke_suite(&ctx(ty), 3));
    }
    finish(2, "Hecke relations, both representations, L = 3", t, Some(Duration::from_secs(120)), &report, &[]);
}

#[test]
fn criterion_3_intertwining() {
    let t = Instant::now();
    let mut report = Report::new();
    for (i, ty) in RANK_LE_3.iter().enumerate() {
        report.extend(intertwine_suite(&ctx(ty), 3, 20, 100 + i as u64));
    }
    finish(3, "intertwining and round trip, rank <= 3", t, None, &report, &[]);
}

#[test]
fn criterion_4_spherical_identities() {
    let t = Instant::now();
    let mut report = Report::new();
    let mut literal = Vec::new();
    for (i, ty) in RANK_LE_3.iter().enumerate() {
        let c = ctx(ty);
        report.extend(p_identity_checks(&c, 2));
        report.extend(closed_form_checks(&c, 2, 10, 200 + i as u64));
        for om in c.rs.minuscule_weights() {
            let same = macdonald_p(&c, &om).unwrap() == orbit_sum(&c.rs, &om).unwrap();
            literal.push(format!("{ty}:{om}={}", if same { "yes" } else { "no" }));
        }
    }
    // The literal P_ω = m_ω only holds when W_{0,ω} is trivial and ω* = ω.
    println!("INFO criterion 4: literal P_ω = m_ω per minuscule ω: {}", literal.join(" "));
    finish(4, "P_0 = W_0(q^2), P_ω = W_{0,ω}(q^2) m_ω*, closed form = J φ_x", t, None, &report, &[]);
}

#[test]
fn criterion_5_diagonalization() {
    let t = Instant::now();
    let mut report = Report::new();
    for (i, ty) in IRREDUCIBLE_RANK_LE_2.iter().enumerate() {
        let c = ctx(ty);
        report.extend(diagonalization_checks(&c, 2, 2, 10, 300 + i as u64));
        report.extend(eigen_checks(&c, 2, 10, 310 + i as u64));
    }
    // Σ c_λ x^λ against the x^{-λ} pairing, for a non-self-dual λ.
    let a2 = RootSystem::parse("A2").unwrap();
    let m = orbit_sum(&a2, &w(&[1, 0])).unwrap();
    let x = SpectralPoint::new(&a2, vec![parse_rational("2").unwrap(), parse_rational("3").unwrap()]).unwrap();
    println!(
        "INFO criterion 5: literal eigenvalue m_λ(x) = Σ x^λ at A2 λ = ω1: {}",
        if eigenvalue(&m, &x) == evaluate(&m, &x) { "equal" } else { "differs (eigenvalue is m_λ*(x))" }
    );
    finish(5, "m_λ(Y) Φ_x = m_λ(x) Φ_x, word and M_ω routes", t, Some(Duration::from_secs(300)), &report, &[]);
}

#[test]
fn criterion_6_pieri() {
    let t = Instant::now();
    let mut report = Report::new();
    for (i, ty) in IRREDUCIBLE_RANK_LE_2.iter().enumerate() {
        report.extend(pieri_suite(&ctx(ty), 3, 5, 400 + i as u64));
    }
    let c = ctx("A1");
    let om = w(&[1]);
    let mut extra = Vec::new();
    let one_plus = &RingElem::one() + &q_pow(2);
    let mut want = BTreeMap::from([(w(&[1]), &q_pow(-1) * &one_plus)]);
    for k in 0..=4 {
        if k > 0 {
            want = BTreeMap::from([(w(&[k + 1]), q_pow(-1)), (w(&[k - 1]), q_pow(1))]);
        }
        let lam = w(&[k]);
        if pieri_expand(&c, &om, &lam).unwrap() != want || pieri_brute_force(&c, &om, &lam).unwrap() != want {
            extra.push(format!("A1 closed form fails at k = {k}"));
        }
    }
    finish(6, "Pieri formula = brute force; A1 closed forms", t, None, &report, &extra);
}

#[test]
fn criterion_7_unitarity() {
    let t = Instant::now();
    let mut report = Report::new();
    for q in ["1/2", "2/3"] {
        let qv = parse_rational(q).unwrap();
        for (i, ty) in RANK_LE_3.iter().enumerate() {
            let c = numeric_context(&RootSystem::parse(ty).unwrap(), &qv).unwrap();
            report.extend(unitarity_checks(&c, 4, 20, 500 + i as u64));
        }
    }
    finish(7, "unitarity at q = 1/2, 2/3; three forms of Δ", t, None, &report, &[]);
}

#[test]
fn criterion_8_gln() {
    let t = Instant::now();
    let mut report = Report::new();
    for n in 1..=4 {
        for rep in [GlRep::Difference, GlRep::Integral] {
            report.extend(gln::relation_checks(n, rep, 2));
            report.extend(gln::y_checks(n, rep, 2));
        }
        report.extend(gln::central_checks(n, 2, 600 + n as u64));
    }
    for n in 1..=3 {
        let hl = HallLittlewood::new(n).unwrap();
        report.extend(gln::morris_checks(&hl, 3));
        report.extend(gln::hl_checks(&hl, 3));
    }
    for n in 2..=3 {
        report.extend(gln::comparison_checks(n, 2));
    }
    // q = 0: s_{(1,0)} = x_1 + x_2 once q^{2⟨ρ,λ⟩} = q is removed
    let mut extra = Vec::new();
    let p = gln::hall_littlewood(2, &w(&[1, 0])).unwrap().scale(&q_pow(-1));
    let mut s = GroupAlgebraElem::zero(2);
    s.add_at(w(&[1, 0]), &RingElem::one());
    s.add_at(w(&[0, 1]), &RingElem::one());
    if p != s {
        extra.push(format!("GL2 (1,0): {p}"));
    }
    finish(8, "GL_N relations, Morris Pieri, A_{N-1} agreement, Schur limit", t, None, &report, &extra);
}

#[test]
fn criterion_9_minuscule() {
    let t = Instant::now();
    let mut report = Report::new();
    for ty in RANK_LE_3 {
        report.extend(minuscule_suite(&ctx(ty), 3));
    }
    finish(9, "weight dichotomies and operator identities, ‖μ‖ <= 3", t, None, &report, &[]);
}
