//! The explicit action of m_ω(Y) for minuscule and quasi-minuscule ω, its
//! symmetric V/U form and the Pieri rule in the basis p_λ = e_q(λ)P_{λ*}.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::heckeops::{center_diff, eval_form, form_add, int_finite, Ctx, LinearForm, Operator};
use crate::latfun::{orbit_sum, GroupAlgebraElem, LatticeFunction};
use crate::qring::RingElem;
use crate::random::Sampler;
use crate::report::{Check, Report};
use crate::rootsys::{RootSystem, Weight};
use crate::spherical::{big_delta_weight, eigenvalue, macdonald_p, SpectralPoint, SphericalEvaluator};

/// Whether ω is minuscule (true) or quasi-minuscule (false).
pub fn small_kind(rs: &RootSystem, omega: &Weight) -> Result<bool> {
    if rs.minuscule_weights().contains(omega) {
        return Ok(true);
    }
    match rs.alpha0() {
        Ok(a0) if a0 == *omega => Ok(false),
        _ => Err(Error::NotSmallWeight(*omega)),
    }
}

/// Every minuscule weight and the quasi-minuscule α_0 (when R is irreducible).
pub fn small_weights(rs: &RootSystem) -> Vec<Weight> {
    let mut out = rs.minuscule_weights();
    if let Ok(a0) = rs.alpha0() {
        out.push(a0);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct PieriCoefficients {
    pub a: RingElem,
    pub b: RingElem,
    pub eps: i32,
}

/// a_{λ,ν}, b_{λ,ν} and ε_{λ,ν} for any λ ∈ P and ν in a small orbit.
pub fn coefficients(ctx: &Ctx, lambda: &Weight, nu: &Weight) -> PieriCoefficients {
    let rs = &ctx.rs;
    let p = &ctx.params;
    let (lp, wl) = rs.dominant_rep(lambda);
    let mu = wl.apply(&(*lambda - *nu));
    let (mp, wmu) = rs.dominant_rep(&mu);
    let a = &(&p.q_finite(rs, &wmu) * &p.q_finite(rs, &wmu.compose(&wl))) * &p.q_finite(rs, &wl).inverse().expect("monomial");
    let eps = if mp != lp {
        rs.theta(&mu)
    } else {
        // χ(ν): ν is a negative root
        rs.root_lookup(nu).map_or(0, |(_, pos)| i32::from(!pos))
    };
    let b = if eps == 0 {
        RingElem::zero()
    } else {
        let q0inv = ctx.q_j_inv(0).pow(2);
        (&(RingElem::one() - q0inv) * &p.e_q(rs, &wl.apply(nu))).times(eps)
    };
    PieriCoefficients { a, b, eps }
}

/// (εf)(λ) = q_{t_λ} f(w_oλ).
pub fn epsilon(ctx: &Ctx) -> Operator {
    let c = ctx.clone();
    let wo = ctx.rs.longest_element();
    Operator::from_rows(move |lam| LinearForm::from([(wo.apply(lam), c.params.q_t(&c.rs, lam))]))
}

/// (ε^{-1}f)(λ) = q_{t_λ}^{-1} f(w_oλ).
pub fn epsilon_inv(ctx: &Ctx) -> Operator {
    let c = ctx.clone();
    let wo = ctx.rs.longest_element();
    Operator::from_rows(move |lam| {
        LinearForm::from([(wo.apply(lam), c.params.q_t(&c.rs, lam).inverse().expect("monomial"))])
    })
}

/// M_ω as a row operator.
pub fn m_omega(ctx: &Ctx, omega: &Weight) -> Result<Operator> {
    small_kind(&ctx.rs, omega)?;
    let c = ctx.clone();
    let orbit = ctx.rs.orbit(omega);
    Ok(Operator::from_rows(move |lam| {
        let mut row = LinearForm::new();
        for nu in &orbit {
            let k = coefficients(&c, lam, nu);
            form_add(&mut row, *lam - *nu, &k.a);
            form_add(&mut row, *lam, &k.b);
        }
        row
    }))
}

/// ε M_ω ε^{-1}, which is m_ω(Y) in the difference representation.
pub fn m_omega_hat(ctx: &Ctx, omega: &Weight) -> Result<Operator> {
    Ok(Operator::product(vec![epsilon(ctx), m_omega(ctx, omega)?, epsilon_inv(ctx)]).memoized())
}

trait Times {
    fn times(&self, k: i32) -> RingElem;
}

impl Times for RingElem {
    fn times(&self, k: i32) -> RingElem {
        self * &RingElem::from_int(k.into())
    }
}

fn div(a: &RingElem, b: &RingElem) -> Result<RingElem> {
    a.div_exact(b).ok_or(Error::InexactDivision)
}

/// V_{λ,ν} = e_q(−ν) ∏_{α>0, ⟨λ,α^∨⟩=0, ⟨ν,α^∨⟩>0} (1 − q_α² e_q(α))/(1 − e_q(α)).
pub fn v_coeff(ctx: &Ctx, lambda: &Weight, nu: &Weight) -> Result<RingElem> {
    let rs = &ctx.rs;
    let p = &ctx.params;
    let (mut num, mut den) = (RingElem::one(), RingElem::one());
    for r in rs.positive_roots().iter().filter(|r| rs.pair(lambda, r) == 0 && rs.pair(nu, r) > 0) {
        let e = p.e_q(rs, &r.weight);
        num = &num * &(RingElem::one() - &p.q_root(r).pow(2) * &e);
        den = &den * &(RingElem::one() - e);
    }
    Ok(&p.e_q(rs, &-*nu) * &div(&num, &den)?)
}

/// Σ q_w² over the elements of W_0 fixing every weight in `fixed`.
fn stabilizer_poincare(ctx: &Ctx, fixed: &[Weight]) -> RingElem {
    let rs = &ctx.rs;
    rs.weyl_elements()
        .iter()
        .filter(|w| fixed.iter().all(|l| w.apply(l) == *l))
        .map(|w| ctx.params.q_finite(rs, w).pow(2))
        .sum()
}

/// V_{λ,ν} = e_q(−ν) W_{0,λ}(q²) / (W_{0,λ} ∩ W_{0,λ+ν})(q²).
pub fn v_coeff_stabilizer(ctx: &Ctx, lambda: &Weight, nu: &Weight) -> Result<RingElem> {
    let whole = stabilizer_poincare(ctx, &[*lambda]);
    let part = stabilizer_poincare(ctx, &[*lambda, *lambda + *nu]);
    Ok(&ctx.params.e_q(&ctx.rs, &-*nu) * &div(&whole, &part)?)
}

/// V_{λ,ν} = q_{t_λ} q_{t_{λ+ν}}^{-1} Σ q²_{w_{λ−ν'}} over ν' ∈ W_0(−ν) with (λ−ν')_+ = λ+ν.
pub fn v_coeff_sum(ctx: &Ctx, lambda: &Weight, nu: &Weight) -> Result<RingElem> {
    let rs = &ctx.rs;
    let p = &ctx.params;
    let target = *lambda + *nu;
    let s: RingElem = rs
        .orbit(&-*nu)
        .into_iter()
        .filter(|v| rs.dominant(&(*lambda - *v)) == target)
        .map(|v| p.q_w_lambda(rs, &(*lambda - v)).pow(2))
        .sum();
    let scale = div(&p.q_t(rs, lambda), &p.q_t(rs, &target))?;
    Ok(&scale * &s)
}

/// U_{λ,μ}: zero for μ_+ minuscule, Σ_{ν∈W_0μ} e_q(ν) − Σ_{λ+ν∈P^+} V_{λ,ν} otherwise.
pub fn u_coeff(ctx: &Ctx, lambda: &Weight, mu: &Weight) -> Result<RingElem> {
    let rs = &ctx.rs;
    if small_kind(rs, &rs.dominant(mu))? {
        return Ok(RingElem::zero());
    }
    let mut out = RingElem::zero();
    for nu in rs.orbit(mu) {
        out += &ctx.params.e_q(rs, &nu);
        if rs.is_dominant(&(*lambda + nu)) {
            out -= &v_coeff(ctx, lambda, &nu)?;
        }
    }
    Ok(out)
}

/// U_{λ,−ω} through the stabilizer sum and θ.
pub fn u_coeff_theta(ctx: &Ctx, lambda: &Weight, omega: &Weight) -> RingElem {
    let rs = &ctx.rs;
    let p = &ctx.params;
    let gap = RingElem::one() - ctx.q_j_inv(0).pow(2);
    let mut out = RingElem::zero();
    for nu in rs.orbit(omega) {
        let mu = *lambda - nu;
        let (mp, w) = rs.dominant_rep(&mu);
        if mp == *lambda {
            out += &p.q_w_lambda(rs, &mu).pow(2);
        }
        if w.apply(lambda) == *lambda {
            let th = rs.theta(&mu);
            if th != 0 {
                out += &(&gap * &p.e_q(rs, &nu)).times(th);
            }
        }
    }
    out
}

/// Row of the symmetric action at dominant λ:
/// U_{λ,−ω} f(λ) + Σ_{λ−ν ∈ P^+} V_{λ,−ν} f(λ−ν).
pub fn symmetric_row(ctx: &Ctx, omega: &Weight, lambda: &Weight) -> Result<LinearForm> {
    let rs = &ctx.rs;
    let mut row = LinearForm::new();
    form_add(&mut row, *lambda, &u_coeff(ctx, lambda, &-*omega)?);
    for nu in rs.orbit(omega) {
        if rs.is_dominant(&(*lambda - nu)) {
            form_add(&mut row, *lambda - nu, &v_coeff(ctx, lambda, &-nu)?);
        }
    }
    Ok(row)
}

/// Right-hand side of m_ω p_λ = U_{λ,ω} p_λ + Σ V_{λ,ν} p_{λ+ν}, keyed by λ+ν.
pub fn pieri_expand(ctx: &Ctx, omega: &Weight, lambda: &Weight) -> Result<BTreeMap<Weight, RingElem>> {
    let rs = &ctx.rs;
    small_kind(rs, omega)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(*lambda));
    }
    let mut out = BTreeMap::new();
    let u = u_coeff(ctx, lambda, omega)?;
    if !u.is_zero() {
        out.insert(*lambda, u);
    }
    for nu in rs.orbit(omega) {
        if rs.is_dominant(&(*lambda + nu)) {
            out.insert(*lambda + nu, v_coeff(ctx, lambda, &nu)?);
        }
    }
    Ok(out)
}

/// p_λ = e_q(λ) P_{λ*}.
pub fn p_basis(ctx: &Ctx, lambda: &Weight) -> Result<GroupAlgebraElem> {
    Ok(macdonald_p(ctx, &ctx.rs.star(lambda))?.scale(&ctx.params.e_q(&ctx.rs, lambda)))
}

/// Coordinates of a W_0-invariant element in the basis {p_λ}, by peeling off
/// the highest dominant weight each round.
pub fn expand_in_p_basis(ctx: &Ctx, f: &GroupAlgebraElem) -> Result<BTreeMap<Weight, RingElem>> {
    let rs = &ctx.rs;
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    while let Some(top) = rem.support().filter(|w| rs.is_dominant(w)).max_by_key(|w| (rs.pair_2rho_check(w), **w)).copied() {
        let p = p_basis(ctx, &top)?;
        let c = div(&rem.coeff(&top), &p.coeff(&top))?;
        rem = rem.sub(&p.scale(&c));
        out.insert(top, c);
    }
    if !rem.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(out)
}

/// m_ω p_λ multiplied out in ℂ[P] and re-expanded in the p-basis.
pub fn pieri_brute_force(ctx: &Ctx, omega: &Weight, lambda: &Weight) -> Result<BTreeMap<Weight, RingElem>> {
    let prod = orbit_sum(&ctx.rs, omega)?.mul(&p_basis(ctx, lambda)?);
    expand_in_p_basis(ctx, &prod)
}

fn check(rs: &RootSystem, id: String, relation: &str, cex: Option<Value>) -> Check {
    Check::new(id, relation, rs.label(), rs.rank()).with_result(cex)
}

fn err_json(e: Error) -> Option<Value> {
    Some(json!({ "error": e.to_string() }))
}

fn kind_tag(rs: &RootSystem, omega: &Weight) -> String {
    match small_kind(rs, omega) {
        Ok(true) => format!("minuscule-{omega}"),
        _ => format!("quasi-{omega}"),
    }
}

/// ε ∈ {0,1}; for minuscule ω, b = 0 and a = q²_{w_{w_λ(λ−ν)}}; in the
/// same-orbit case e_q(w_λν) = q²_{w_{w_λ(λ−ν)}}.
pub fn coefficient_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let mut report = Report::new();
    for om in small_weights(rs) {
        let minuscule = small_kind(rs, &om).unwrap_or(false);
        let mut cex = None;
        'scan: for lam in rs.ball(radius) {
            let (lp, wl) = rs.dominant_rep(&lam);
            for nu in rs.orbit(&om) {
                let k = coefficients(ctx, &lam, &nu);
                let mu = wl.apply(&(lam - nu));
                let q2 = ctx.params.q_w_lambda(rs, &mu).pow(2);
                let bad = if !(0..=1).contains(&k.eps) {
                    Some("eps")
                } else if minuscule && (!k.b.is_zero() || k.a != q2) {
                    Some("minuscule simplification")
                } else if rs.dominant(&mu) == lp && ctx.params.e_q(rs, &wl.apply(&nu)) != q2 {
                    Some("same-orbit e_q")
                } else {
                    None
                };
                if let Some(what) = bad {
                    cex = Some(json!({"lambda": lam.coords(), "nu": nu.coords(), "failed": what}));
                    break 'scan;
                }
            }
        }
        let tag = kind_tag(rs, &om);
        report.push(check(rs, format!("pieri/{label}/{tag}/coefficients"), "ε ∈ {0,1}, minuscule and same-orbit simplifications", cex));
    }
    report
}

/// The two-case classification of λ − ν and the explicit I_{w_{λ−ν}} formula.
pub fn classifier_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let p = &ctx.params;
    let gap = RingElem::one() - ctx.q_j_inv(0).pow(2);
    let mut report = Report::new();
    for om in small_weights(rs) {
        let tag = kind_tag(rs, &om);
        let mut cex_cls = None;
        let mut cex_int = None;
        for lam in rs.dominant_ball(radius) {
            for nu in rs.orbit(&om) {
                let mu = lam - nu;
                let (mp, word) = rs.dominant_word(&mu);
                let w = rs.from_word(&word);
                let th = rs.theta(&mu);
                // classification
                let ok = if mp != lam {
                    let in_r = rs.root_lookup(&nu).is_some_and(|(_, pos)| pos && !rs.root_lookup(&w.apply(&nu)).unwrap().1);
                    w.apply(&lam) == lam && th == i32::from(in_r)
                } else {
                    let img = w.apply(&nu);
                    (1..=rs.rank()).any(|j| {
                        img == -rs.alpha(j) && rs.s(j).compose(&w).apply(&lam) == lam && p.q_j(rs, j) == p.q_j(rs, 0)
                    }) && th == 0
                };
                if !ok && cex_cls.is_none() {
                    cex_cls = Some(json!({"lambda": lam.coords(), "nu": nu.coords(), "theta": th}));
                }
                // q_w (I_w f)(μ_+) = f(μ) − θ(μ)(1 − q_0^{-2}) e_q(ν) f(λ)
                let lhs = match int_finite(ctx, &word) {
                    Ok(op) => op.row(&mp).into_iter().map(|(k, v)| (k, &v * &p.q_finite(rs, &w))).collect::<LinearForm>(),
                    Err(e) => {
                        cex_int = err_json(e);
                        continue;
                    }
                };
                let mut rhs = LinearForm::new();
                form_add(&mut rhs, mu, &RingElem::one());
                if th != 0 {
                    form_add(&mut rhs, lam, &(&gap * &p.e_q(rs, &nu)).times(-th));
                }
                if lhs != rhs && cex_int.is_none() {
                    cex_int = Some(crate::heckeops::verify::row_counterexample(ctx, &mp, &lhs, &rhs));
                }
            }
        }
        report.push(check(rs, format!("pieri/{label}/{tag}/classification"), "two cases for (λ−ν)_+", cex_cls));
        report.push(check(rs, format!("pieri/{label}/{tag}/integral-formula"), "q_w (I_w f)((λ−ν)_+) formula", cex_int));
    }
    report
}

/// ε M_ω ε^{-1} = m_ω(Y) in the difference representation: rows on the ball
/// and values on random f; also ε^{-1}ε = id.
pub fn route_checks(ctx: &Ctx, radius: i32, trials: usize, seed: u64) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let points = rs.ball(radius);
    let mut report = Report::new();
    let id = epsilon_inv(ctx).then(&epsilon(ctx));
    let cex = crate::heckeops::verify::compare_operators(ctx, &id, &Operator::identity(), &points);
    report.push(check(rs, format!("pieri/{label}/epsilon-inverse"), "ε^-1 ε = id", cex));
    let mut sampler = Sampler::new(seed);
    let fs: Vec<LatticeFunction> = (0..trials).map(|_| sampler.function(rs.rank(), radius)).collect();
    for om in small_weights(rs) {
        let tag = kind_tag(rs, &om);
        let cex = (|| -> Result<Option<Value>> {
            let a = m_omega_hat(ctx, &om)?;
            let b = center_diff(ctx, &om)?;
            if let Some(c) = crate::heckeops::verify::compare_operators(ctx, &a, &b, &points) {
                return Ok(Some(c));
            }
            for (k, f) in fs.iter().enumerate() {
                for p in &points {
                    if a.eval_at(f, p) != b.eval_at(f, p) {
                        return Ok(Some(json!({"trial": k, "at": p.coords()})));
                    }
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, format!("pieri/{label}/{tag}/route"), "ε M_ω ε^-1 = m_ω(Y)", cex));
    }
    report
}

/// Folding a row at dominant λ onto P^+ for W_0-invariant arguments.
fn fold(rs: &RootSystem, row: &LinearForm) -> LinearForm {
    let mut out = LinearForm::new();
    for (w, c) in row {
        form_add(&mut out, rs.dominant(w), c);
    }
    out
}

/// The V/U action agrees with m_ω(Y) on invariant functions; the three
/// forms of V agree and the two forms of U agree.
pub fn symmetric_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let mut report = Report::new();
    for om in small_weights(rs) {
        let tag = kind_tag(rs, &om);
        let cex = (|| -> Result<Option<Value>> {
            let op = m_omega_hat(ctx, &om)?;
            for lam in rs.dominant_ball(radius) {
                let a = fold(rs, &op.row(&lam));
                let b = symmetric_row(ctx, &om, &lam)?;
                if a != b {
                    return Ok(Some(crate::heckeops::verify::row_counterexample(ctx, &lam, &a, &b)));
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, format!("pieri/{label}/{tag}/symmetric-action"), "m_ω(Y) on C(P^+) = U/V action", cex));

        let cex = (|| -> Result<Option<Value>> {
            for lam in rs.dominant_ball(radius) {
                for nu in rs.orbit(&om).into_iter().chain(rs.orbit(&-om)) {
                    if !rs.is_dominant(&(lam + nu)) {
                        continue;
                    }
                    let forms = [v_coeff(ctx, &lam, &nu)?, v_coeff_stabilizer(ctx, &lam, &nu)?, v_coeff_sum(ctx, &lam, &nu)?];
                    if forms[0] != forms[1] || forms[0] != forms[2] {
                        let shown: Vec<String> = forms.iter().map(|f| f.to_string()).collect();
                        return Ok(Some(json!({"lambda": lam.coords(), "nu": nu.coords(), "forms": shown})));
                    }
                }
                let u1 = u_coeff(ctx, &lam, &-om)?;
                let u2 = u_coeff_theta(ctx, &lam, &om);
                if u1 != u2 {
                    return Ok(Some(json!({"lambda": lam.coords(), "U": u1.to_string(), "U_theta": u2.to_string()})));
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, format!("pieri/{label}/{tag}/coefficient-forms"), "V and U alternative forms agree", cex));
    }
    report
}

/// Pieri rule against brute-force multiplication for dominant ‖λ‖ ≤ radius.
pub fn pieri_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let mut report = Report::new();
    for om in small_weights(rs) {
        let tag = kind_tag(rs, &om);
        let cex = (|| -> Result<Option<Value>> {
            for lam in rs.dominant_ball(radius) {
                let a = pieri_expand(ctx, &om, &lam)?;
                let b = pieri_brute_force(ctx, &om, &lam)?;
                if a != b {
                    let show = |m: &BTreeMap<Weight, RingElem>| m.iter().map(|(w, c)| format!("{w}: {c}")).collect::<Vec<_>>();
                    return Ok(Some(json!({"lambda": lam.coords(), "formula": show(&a), "brute_force": show(&b)})));
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, format!("pieri/{label}/{tag}/expansion"), "m_ω p_λ = U p_λ + Σ V p_{λ+ν}", cex));
    }
    report
}

/// Both the full M_ω route and the symmetric U/V action reproduce E_{m_ω}(x) Φ_x.
pub fn eigen_checks(ctx: &Ctx, radius: i32, trials: usize, seed: u64) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let mut sampler = Sampler::new(seed);
    let evals: Vec<SphericalEvaluator> =
        (0..trials).map(|_| SphericalEvaluator::new(ctx, SpectralPoint::random(rs, &mut sampler)).unwrap()).collect();
    let mut report = Report::new();
    for om in small_weights(rs) {
        let tag = kind_tag(rs, &om);
        let cex = (|| -> Result<Option<Value>> {
            let op = m_omega_hat(ctx, &om)?;
            let m = orbit_sum(rs, &om)?;
            for ev in &evals {
                let e = eigenvalue(&m, ev.point());
                for lam in rs.ball(radius) {
                    let rhs = &e * &ev.value(&lam)?;
                    let full = ev.apply(&op, &lam)?;
                    let sym = if rs.is_dominant(&lam) {
                        let row = symmetric_row(ctx, &om, &lam)?;
                        let mut acc = RingElem::zero();
                        for (w, c) in &row {
                            acc += &(c * &ev.value(w)?);
                        }
                        acc
                    } else {
                        rhs.clone()
                    };
                    if full != rhs || sym != rhs {
                        return Ok(Some(json!({"x": ev.point().to_string(), "lambda": lam.coords()})));
                    }
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, format!("pieri/{label}/{tag}/eigenvalue"), "ε M_ω ε^-1 Φ_x = E_{m_ω}(x) Φ_x", cex));
    }
    report
}

/// The U/V matrix is adjoint to the one for ω* against Δ (numeric q only).
pub fn adjoint_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let mut report = Report::new();
    for om in small_weights(rs) {
        let tag = kind_tag(rs, &om);
        let star = rs.star(&om);
        let cex = (|| -> Result<Option<Value>> {
            let dom = rs.dominant_ball(radius);
            let mut rows = BTreeMap::new();
            let mut rows_star = BTreeMap::new();
            for lam in &dom {
                rows.insert(*lam, symmetric_row(ctx, &om, lam)?);
                rows_star.insert(*lam, symmetric_row(ctx, &star, lam)?);
            }
            for l in &dom {
                for m in &dom {
                    let a = rows[l].get(m).cloned().unwrap_or_else(RingElem::zero);
                    let b = rows_star[m].get(l).cloned().unwrap_or_else(RingElem::zero);
                    if &a * &big_delta_weight(ctx, l)? != &b * &big_delta_weight(ctx, m)? {
                        return Ok(Some(json!({"lambda": l.coords(), "mu": m.coords()})));
                    }
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, format!("pieri/{label}/{tag}/adjoint"), "adjoint of m_ω(Y) on l²(P^+,Δ) is m_ω*(Y)", cex));
    }
    report
}

/// Every formal-parameter check of this module.
pub fn pieri_suite(ctx: &Ctx, radius: i32, trials: usize, seed: u64) -> Report {
    let mut report = coefficient_checks(ctx, radius);
    report.extend(classifier_checks(ctx, radius));
    report.extend(route_checks(ctx, radius.min(2), trials, seed));
    report.extend(symmetric_checks(ctx, radius));
    report.extend(pieri_checks(ctx, radius));
    report
}

/// Evaluates a symmetric row against f.
pub fn apply_symmetric(ctx: &Ctx, omega: &Weight, f: &LatticeFunction, lambda: &Weight) -> Result<RingElem> {
    Ok(eval_form(&symmetric_row(ctx, omega, lambda)?, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckeops::HeckeContext;
    use crate::spherical::numeric_context;
    use num_rational::BigRational;

    fn ctx(t: &str) -> Ctx {
        HeckeContext::formal(RootSystem::parse(t).unwrap())
    }

    fn q(e: i32) -> RingElem {
        RingElem::var_pow(0, e)
    }

    #[test]
    fn a1_closed_forms() {
        let c = ctx("A1");
        let om = Weight::new(&[1]);
        let e = pieri_expand(&c, &om, &Weight::zero(1)).unwrap();
        assert_eq!(e, BTreeMap::from([(om, q(-1) + q(1))]));
        for k in 1..4 {
            let e = pieri_expand(&c, &om, &Weight::new(&[k])).unwrap();
            assert_eq!(e, BTreeMap::from([(Weight::new(&[k + 1]), q(-1)), (Weight::new(&[k - 1]), q(1))]));
            assert_eq!(pieri_brute_force(&c, &om, &Weight::new(&[k])).unwrap(), e);
        }
        assert_eq!(p_basis(&c, &Weight::zero(1)).unwrap(), GroupAlgebraElem::monomial(Weight::zero(1), q(2) + RingElem::one()));
    }

    #[test]
    fn epsilon_a1() {
        let c = ctx("A1");
        let mut f = LatticeFunction::zero(1);
        f.set(Weight::new(&[-1]), RingElem::from_int(3));
        let g = epsilon(&c).eval_at(&f, &Weight::new(&[1]));
        assert_eq!(g, q(1).scale(&BigRational::from_integer(3.into())));
    }

    #[test]
    fn rejects_large_weight() {
        let c = ctx("A2");
        assert!(matches!(m_omega(&c, &Weight::new(&[2, 0])), Err(Error::NotSmallWeight(_))));
    }

    #[test]
    fn small_suites() {
        for t in ["A1", "A2", "B2"] {
            let c = ctx(t);
            let mut r = pieri_suite(&c, 2, 2, 1);
            r.extend(eigen_checks(&c, 1, 2, 1));
            assert!(r.all_passed(), "{t}\n{}", r.to_text());
            let n = numeric_context(&c.rs, &BigRational::new(1.into(), 2.into())).unwrap();
            let r = adjoint_checks(&n, 2);
            assert!(r.all_passed(), "{t}\n{}", r.to_text());
        }
    }
}
