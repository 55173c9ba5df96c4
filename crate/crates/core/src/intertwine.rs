//! The intertwiner 𝒥 from the integral-reflection to the
//! difference-reflection representation, its triangular inverse and checks.
//!
//! (𝒥f)(λ) = q_{t_λ} q_{w_λ} (I_{w_λ^{-1}}^{-1} f)(λ_+). It is not local, so
//! it lives as a row operator and is only ever evaluated at requested points.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::heckeops::{
    eval_form, eval_form_by, form_add, int_finite_inv, int_i, int_i_inv, int_u, that, translate, verify, weyl_op,
    Ctx, LinearForm, Operator,
};
use crate::latfun::LatticeFunction;
use crate::qring::RingElem;
use crate::random::Sampler;
use crate::report::{Check, Report};
use crate::rootsys::{FiniteWeylElement, RootSystem, Weight};

fn reversed(word: &[usize]) -> Vec<usize> {
    word.iter().rev().copied().collect()
}

/// Row of 𝒥 at λ computed along the given reduced word of w_λ.
fn j_row_along(ctx: &Ctx, lambda: &Weight, plus: &Weight, word: &[usize]) -> Result<LinearForm> {
    let p = &ctx.params;
    let c = &p.q_t(&ctx.rs, lambda) * &p.q_w_lambda(&ctx.rs, lambda);
    let row = int_finite_inv(ctx, &reversed(word))?.row(plus);
    Ok(row.into_iter().map(|(w, v)| (w, &v * &c)).collect())
}

/// A linear extension of the order ≼: dominance height of λ_+, then ℓ(w_λ).
pub fn order_key(rs: &RootSystem, lambda: &Weight) -> (i32, usize, Weight) {
    (rs.pair_2rho_check(&rs.dominant(lambda)), rs.dominant_length(lambda), *lambda)
}

/// Cached evaluator for 𝒥.
#[derive(Clone)]
pub struct Intertwiner {
    ctx: Ctx,
    op: Operator,
}

impl Intertwiner {
    pub fn new(ctx: &Ctx) -> Self {
        let c = ctx.clone();
        let op = Operator::from_rows(move |lam| {
            let (plus, word) = c.rs.dominant_word(lam);
            j_row_along(&c, lam, &plus, &word).expect("finite generators are always valid")
        })
        .memoized();
        Self { ctx: ctx.clone(), op }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn operator(&self) -> &Operator {
        &self.op
    }

    pub fn row(&self, lambda: &Weight) -> LinearForm {
        self.op.row(lambda)
    }

    /// (𝒥f)(λ) at each of the given points.
    pub fn apply_on<'a>(&self, f: &LatticeFunction, points: impl Iterator<Item = &'a Weight>) -> LatticeFunction {
        self.op.apply_on(f, points)
    }

    /// The row at λ along an arbitrary reduced word of w_λ.
    pub fn row_along(&self, lambda: &Weight, word: &[usize]) -> Result<LinearForm> {
        let plus = self.ctx.rs.dominant(lambda);
        j_row_along(&self.ctx, lambda, &plus, word)
    }

    /// The unique f on `region` with 𝒥f = g there. The region has to be
    /// closed downward under ≼, as the saturated sets P(λ) are.
    pub fn solve(&self, g: &LatticeFunction, region: &[Weight]) -> Result<LatticeFunction> {
        let rs = &self.ctx.rs;
        let mut order: Vec<Weight> = region.to_vec();
        order.sort_by_cached_key(|w| order_key(rs, w));
        order.dedup();
        let inside: HashSet<Weight> = order.iter().copied().collect();
        let mut solved: HashSet<Weight> = HashSet::new();
        let mut f = LatticeFunction::zero(rs.rank());
        for lam in &order {
            let row = self.row(lam);
            let mut acc = g.get(lam);
            let mut diag = None;
            for (mu, c) in &row {
                if mu == lam {
                    diag = Some(c.clone());
                } else if !inside.contains(mu) || !solved.contains(mu) {
                    return Err(Error::NotSaturated { at: *lam, missing: *mu });
                } else if let Some(v) = f.get_ref(mu) {
                    acc -= &(c * v);
                }
            }
            let inv = diag.and_then(|d| d.inverse()).ok_or(Error::InexactDivision)?;
            f.set(*lam, &acc * &inv);
            solved.insert(*lam);
        }
        Ok(f)
    }
}

/// A random reduced word of w_λ: sort λ to P^+ choosing a random descent each time.
pub fn random_dominant_word(rs: &RootSystem, lambda: &Weight, sampler: &mut Sampler) -> Vec<usize> {
    let mut mu = *lambda;
    let mut applied = Vec::new();
    loop {
        let neg: Vec<usize> = (0..rs.rank()).filter(|&i| mu.get(i) < 0).collect();
        if neg.is_empty() {
            break;
        }
        let j = neg[sampler.index(neg.len())] + 1;
        mu = rs.reflect(j, &mu);
        applied.push(j);
    }
    applied.reverse();
    applied
}

fn check(ctx: &Ctx, id: String, relation: &str, cex: Option<Value>) -> Check {
    let label = ctx.rs.label();
    Check::new(id, relation, label, ctx.rs.rank()).with_result(cex)
}

fn err_json(e: Error) -> Option<Value> {
    Some(json!({ "error": e.to_string() }))
}

/// (A(Bf))(λ) through intermediate values of Bf rather than composed rows.
fn compose_values(a: &Operator, b: &Operator, f: &LatticeFunction, at: &Weight, memo: &mut HashMap<Weight, RingElem>) -> RingElem {
    eval_form_by(&a.row(at), |mu| memo.entry(*mu).or_insert_with(|| eval_form(&b.row(mu), f)).clone())
}

/// The generators of the affine intertwining: (label, T̂ side, I side).
fn generator_pairs(ctx: &Ctx) -> Result<Vec<(String, Operator, Operator)>> {
    let rs = &ctx.rs;
    let start = if rs.is_irreducible() { 0 } else { 1 };
    let mut out = Vec::new();
    for j in start..=rs.rank() {
        out.push((format!("T{j}"), that(ctx, j)?, int_i(ctx, j)?));
    }
    if rs.is_irreducible() {
        for i in rs.omega_indices()?.into_iter().filter(|&i| i > 0) {
            out.push((format!("U{i}"), weyl_op(&rs.u_j(i)), int_u(ctx, i)?));
        }
    }
    Ok(out)
}

/// T̂_g 𝒥 = 𝒥 I_g for every generator g: rows on the ball ‖λ‖ ≤ radius, and
/// values on `trials` random f computed through the intermediate functions.
pub fn intertwining_checks(jay: &Intertwiner, radius: i32, trials: usize, seed: u64) -> Report {
    let ctx = jay.ctx();
    let label = ctx.rs.label();
    let points = ctx.rs.ball(radius);
    let mut report = Report::new();
    let pairs = match generator_pairs(ctx) {
        Ok(p) => p,
        Err(e) => {
            report.push(check(ctx, format!("intertwine/{label}/generators"), "generators", err_json(e)));
            return report;
        }
    };
    let mut sampler = Sampler::new(seed);
    let fs: Vec<LatticeFunction> = (0..trials).map(|_| sampler.function(ctx.rs.rank(), radius)).collect();
    let j = jay.operator();
    for (name, t, i) in pairs {
        let lhs = t.then(j);
        let rhs = j.then(&i);
        let mut cex = verify::compare_operators(ctx, &lhs, &rhs, &points);
        if cex.is_none() {
            'trials: for (k, f) in fs.iter().enumerate() {
                let (mut m1, mut m2) = (HashMap::new(), HashMap::new());
                for p in &points {
                    let a = compose_values(&t, j, f, p, &mut m1);
                    let b = compose_values(j, &i, f, p, &mut m2);
                    if a != b {
                        cex = Some(json!({"trial": k, "at": p.coords(), "lhs": a.to_string(), "rhs": b.to_string()}));
                        break 'trials;
                    }
                }
            }
        }
        let relation = if name.starts_with('T') { "T̂_j J = J I_j" } else { "u J = J I_u" };
        report.push(check(ctx, format!("intertwine/{label}/{name}"), relation, cex));
    }
    report
}

/// 𝒥^{-1}𝒥 = id and 𝒥𝒥^{-1} = id on P(λ) for dominant ‖λ‖ ≤ radius.
pub fn round_trip_checks(jay: &Intertwiner, radius: i32, seed: u64) -> Report {
    let ctx = jay.ctx();
    let rs = &ctx.rs;
    let label = rs.label();
    let mut sampler = Sampler::new(seed);
    let mut report = Report::new();
    for top in rs.dominant_ball(radius) {
        let region = rs.saturated_set(&top);
        let random_on_region = |s: &mut Sampler| {
            let mut f = LatticeFunction::zero(rs.rank());
            for w in &region {
                if s.index(2) == 0 {
                    f.set(*w, RingElem::constant(s.small_rational()));
                }
            }
            f
        };
        let f = random_on_region(&mut sampler);
        let g = random_on_region(&mut sampler);
        let cex = (|| -> Result<Option<Value>> {
            let jf = jay.apply_on(&f, region.iter());
            let back = jay.solve(&jf, &region)?;
            if back != f {
                return Ok(Some(json!({"direction": "J^-1 J", "top": top.coords()})));
            }
            let sol = jay.solve(&g, &region)?;
            if jay.apply_on(&sol, region.iter()) != g {
                return Ok(Some(json!({"direction": "J J^-1", "top": top.coords()})));
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(ctx, format!("intertwine/{label}/round-trip-{top}"), "J^-1 J = id on P(λ)", cex));
    }
    report
}

/// 𝒥^{-1} T̂_j 𝒥 f = I_j f on P(λ_max).
pub fn equivalence_checks(jay: &Intertwiner, top: &Weight, seed: u64) -> Report {
    let ctx = jay.ctx();
    let rs = &ctx.rs;
    let label = rs.label();
    let region = rs.saturated_set(top);
    let mut sampler = Sampler::new(seed);
    let mut f = LatticeFunction::zero(rs.rank());
    for w in &region {
        if sampler.index(2) == 0 {
            f.set(*w, RingElem::constant(sampler.small_rational()));
        }
    }
    let mut report = Report::new();
    let Ok(pairs) = generator_pairs(ctx) else { return report };
    for (name, t, i) in pairs {
        let cex = (|| -> Result<Option<Value>> {
            let mut memo = HashMap::new();
            let mut h = LatticeFunction::zero(rs.rank());
            for p in &region {
                h.set(*p, compose_values(&t, jay.operator(), &f, p, &mut memo));
            }
            let lhs = jay.solve(&h, &region)?;
            let rhs = i.apply_on(&f, region.iter());
            Ok((lhs != rhs).then(|| json!({"top": top.coords()})))
        })()
        .unwrap_or_else(err_json);
        report.push(check(ctx, format!("intertwine/{label}/equivalence-{name}"), "J^-1 T̂ J = I", cex));
    }
    report
}

/// q_w (I_w^{-1} f)(λ) = q_{w'} (I_{w'}^{-1} f)(λ) for dominant λ and w' = w s,
/// s a simple reflection fixing λ.
pub fn stability_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let p = &ctx.params;
    let mut report = Report::new();
    for lam in rs.dominant_ball(radius) {
        let fixing: Vec<usize> = (1..=rs.rank()).filter(|&j| lam.get(j - 1) == 0).collect();
        if fixing.is_empty() {
            continue;
        }
        let mut cex = None;
        let scaled_row = |w: &FiniteWeylElement| -> Result<LinearForm> {
            let row = int_finite_inv(ctx, &rs.reduced_word(w))?.row(&lam);
            let c = p.q_finite(rs, w);
            Ok(row.into_iter().map(|(k, v)| (k, &v * &c)).collect())
        };
        'outer: for w in rs.weyl_elements() {
            for &j in &fixing {
                let w2 = w.compose(&rs.s(j));
                match (scaled_row(w), scaled_row(&w2)) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (Ok(a), Ok(b)) => {
                        cex = Some(verify::row_counterexample(ctx, &lam, &a, &b));
                        break 'outer;
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        cex = err_json(e);
                        break 'outer;
                    }
                }
            }
        }
        report.push(check(ctx, format!("intertwine/{label}/stability-{lam}"), "q_w I_w^-1 stable on W_{0,λ}", cex));
    }
    report
}

/// Two reduced words for w_λ give the same row of 𝒥.
pub fn well_defined_checks(jay: &Intertwiner, radius: i32, seed: u64) -> Report {
    let ctx = jay.ctx();
    let rs = &ctx.rs;
    let label = rs.label();
    let mut sampler = Sampler::new(seed);
    let mut cex = None;
    for lam in rs.ball(radius).into_iter().filter(|l| rs.dominant_length(l) >= 2) {
        let word = random_dominant_word(rs, &lam, &mut sampler);
        match jay.row_along(&lam, &word) {
            Ok(r) if r == jay.row(&lam) => {}
            Ok(r) => {
                cex = Some(verify::row_counterexample(ctx, &lam, &jay.row(&lam), &r));
                break;
            }
            Err(e) => {
                cex = err_json(e);
                break;
            }
        }
    }
    let mut report = Report::new();
    report.push(check(ctx, format!("intertwine/{label}/well-defined"), "J independent of the reduced word", cex));
    report
}

/// Weight facts about minuscule weights and α_0, scanned over ‖μ‖ ≤ radius.
pub fn minuscule_weight_checks(rs: &RootSystem, radius: i32) -> Report {
    let label = rs.label();
    let n = rs.rank();
    let mut report = Report::new();
    let mk = |name: String, rel: &str, cex: Option<Value>| {
        Check::new(format!("minuscule/{label}/{name}"), rel, label.clone(), n).with_result(cex)
    };
    for om in rs.minuscule_weights() {
        let cex = rs.ball(radius).into_iter().find_map(|mu| {
            let (plus, w) = rs.dominant_rep(&mu);
            let s = plus + w.apply(&om);
            (!rs.is_dominant(&s)).then(|| json!({"mu": mu.coords(), "sum": s.coords()}))
        });
        report.push(mk(format!("minuscule-{om}"), "μ_+ + w_μ ω ∈ P^+", cex));
    }
    let Ok(a0) = rs.alpha0() else { return report };
    let mut cex_a = None;
    let mut cex_b = None;
    for mu in rs.ball(radius) {
        let (plus, w) = rs.dominant_rep(&mu);
        let beta = w.apply(&a0);
        let s = plus + beta;
        let (idx, positive) = rs.root_lookup(&beta).expect("Weyl group permutes roots");
        if !rs.is_dominant(&s) {
            let ok = (1..=n).any(|j| beta == -rs.alpha(j) && plus.get(j - 1) == 1);
            if !ok && cex_a.is_none() {
                cex_a = Some(json!({"mu": mu.coords(), "w_mu_alpha0": beta.coords()}));
            }
        } else if !positive {
            // ⟨μ_+, β^∨⟩ for the negative root β
            let pairing = -rs.pair(&plus, &rs.positive_roots()[idx]);
            if pairing > -2 && cex_b.is_none() {
                cex_b = Some(json!({"mu": mu.coords(), "pairing": pairing}));
            }
        }
    }
    report.push(mk("alpha0-outside".into(), "w_μα_0 = −α_j with ⟨μ_+,α_j^∨⟩ = 1", cex_a));
    report.push(mk("alpha0-negative".into(), "⟨μ_+, w_μα_0^∨⟩ ≤ −2", cex_b));
    report
}

/// The two Hecke-algebra identities behind the affine intertwining, in the
/// integral representation, for every w ∈ W_0.
pub fn minuscule_hecke_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let n = rs.rank();
    let points = rs.ball(radius);
    let mut report = Report::new();
    let Ok(a0) = rs.alpha0() else { return report };
    let inv_of = |w: &FiniteWeylElement| int_finite_inv(ctx, &rs.reduced_word(w));
    for om in rs.minuscule_weights() {
        let v = rs.v_lambda(&om);
        let cex = (|| -> Result<Option<Value>> {
            let right = inv_of(&v)?;
            for w in rs.weyl_elements() {
                let lhs = Operator::product(vec![inv_of(w)?, translate(om), right.clone()]);
                let rhs = translate(w.inverse().apply(&om)).then(&inv_of(&v.compose(w))?);
                if let Some(c) = verify::compare_operators(ctx, &lhs, &rhs, &points) {
                    return Ok(Some(json!({"w": rs.reduced_word(w), "row": c})));
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(
            Check::new(format!("minuscule/{label}/hecke-minuscule-{om}"), "T_w^-1 Y^ω T_v^-1 = Y^{w^-1 ω} T_{vw}^-1", label.clone(), n)
                .with_result(cex),
        );
    }
    let s = rs.reflection(rs.root(0));
    let cex = (|| -> Result<Option<Value>> {
        let (i0, i0_inv) = (int_i(ctx, 0)?, int_i_inv(ctx, 0)?);
        for w in rs.weyl_elements() {
            let beta = w.inverse().apply(&a0);
            let positive = rs.root_lookup(&beta).expect("root").1;
            let lhs = inv_of(w)?.then(if positive { &i0 } else { &i0_inv });
            let rhs = translate(beta).then(&inv_of(&s.compose(w))?);
            if let Some(c) = verify::compare_operators(ctx, &lhs, &rhs, &points) {
                return Ok(Some(json!({"w": rs.reduced_word(w), "row": c})));
            }
        }
        Ok(None)
    })()
    .unwrap_or_else(err_json);
    report.push(
        Check::new(format!("minuscule/{label}/hecke-alpha0"), "T_w^-1 T_0^±1 = Y^{w^-1 α_0} T_{sw}^-1", label.clone(), n)
            .with_result(cex),
    );
    report
}

/// Everything above for one root system.
pub fn intertwine_suite(ctx: &Ctx, radius: i32, trials: usize, seed: u64) -> Report {
    let jay = Intertwiner::new(ctx);
    let mut report = intertwining_checks(&jay, radius, trials, seed);
    report.extend(round_trip_checks(&jay, radius, seed));
    report.extend(well_defined_checks(&jay, radius, seed));
    report.extend(stability_checks(ctx, 2));
    if let Some(top) = ctx.rs.dominant_ball(2).into_iter().max_by_key(|w| order_key(&ctx.rs, w)) {
        report.extend(equivalence_checks(&jay, &top, seed));
    }
    report
}

/// The minuscule-weight facts and Hecke identities used for the affine case.
pub fn minuscule_suite(ctx: &Ctx, radius: i32) -> Report {
    let mut report = minuscule_weight_checks(&ctx.rs, radius);
    report.extend(minuscule_hecke_checks(ctx, radius));
    report
}

/// 𝒥f as a row operator: convenience for callers holding only a context.
pub fn apply_j(ctx: &Ctx, f: &LatticeFunction, points: &[Weight]) -> LatticeFunction {
    Intertwiner::new(ctx).apply_on(f, points.iter())
}

/// The form of 𝒥 at λ written out, for display.
pub fn j_row(ctx: &Ctx, lambda: &Weight) -> LinearForm {
    let mut out = LinearForm::new();
    for (w, c) in Intertwiner::new(ctx).row(lambda) {
        form_add(&mut out, w, &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckeops::HeckeContext;

    fn ctx(t: &str) -> Ctx {
        HeckeContext::formal(RootSystem::parse(t).unwrap())
    }

    #[test]
    fn multiplication_on_dominant_cone() {
        let c = ctx("A2");
        let jay = Intertwiner::new(&c);
        for lam in c.rs.dominant_ball(3) {
            let row = jay.row(&lam);
            assert_eq!(row.len(), 1);
            assert_eq!(row[&lam], c.params.q_t(&c.rs, &lam));
        }
        let f = LatticeFunction::delta(Weight::zero(2));
        assert_eq!(jay.apply_on(&f, [Weight::zero(2)].iter()), f);
    }

    #[test]
    fn diagonal_only_solve() {
        let c = ctx("A1");
        let jay = Intertwiner::new(&c);
        let lam = Weight::new(&[2]);
        let g = LatticeFunction::delta(lam);
        let f = jay.solve(&g, &[lam]).unwrap();
        assert_eq!(f.get(&lam), RingElem::var_pow(0, -2));
    }

    #[test]
    fn unsaturated_region_rejected() {
        let c = ctx("A1");
        let jay = Intertwiner::new(&c);
        let g = LatticeFunction::delta(Weight::new(&[-2]));
        assert!(matches!(jay.solve(&g, &[Weight::new(&[-2])]), Err(Error::NotSaturated { .. })));
    }

    #[test]
    fn suites_a2_b2() {
        for t in ["A1", "A2", "B2", "A1xA1"] {
            let c = ctx(t);
            let r = intertwine_suite(&c, 2, 3, 1);
            assert!(r.all_passed(), "{t}\n{}", r.to_text());
            let r = minuscule_suite(&c, 2);
            assert!(r.all_passed(), "{t}\n{}", r.to_text());
        }
    }
}
