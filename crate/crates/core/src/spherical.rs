//! Macdonald spherical functions, the eigenvalues of the center on them,
//! and the Hilbert-space weights δ and Δ.
//!
//! The spectral parameter is a rational torus point x: the plane wave
//! e^{iξ}(λ) becomes x^λ = ∏ x_i^{λ_i} in fundamental-weight coordinates.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::heckeops::{center_diff, eval_form_by, that, weyl_op, Ctx, HeckeContext, Operator, PolyRep};
use crate::intertwine::Intertwiner;
use crate::latfun::{orbit_sum, GroupAlgebraElem, LatticeFunction};
use crate::qring::{rational_to_string, MultiplicityParams, RingElem};
use crate::random::Sampler;
use crate::report::{Check, Report};
use crate::rootsys::{RootSystem, Weight};

/// A point x of the complex torus with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPoint {
    x: Vec<BigRational>,
}

impl SpectralPoint {
    /// Rejects zero coordinates and points with x^α = 1 for some root α.
    pub fn new(rs: &RootSystem, x: Vec<BigRational>) -> Result<Self> {
        if x.len() != rs.rank() {
            return Err(Error::RankMismatch { expected: rs.rank(), got: x.len() });
        }
        let p = Self { x };
        if p.x.iter().any(|c| c.is_zero()) {
            return Err(Error::DegenerateSpectralPoint(p.to_string()));
        }
        if rs.positive_roots().iter().any(|r| p.pow(&r.weight).is_one()) {
            return Err(Error::DegenerateSpectralPoint(p.to_string()));
        }
        Ok(p)
    }

    /// A random nondegenerate point, resampling as needed.
    pub fn random(rs: &RootSystem, sampler: &mut Sampler) -> Self {
        loop {
            let x = (0..rs.rank()).map(|_| sampler.small_rational()).collect();
            if let Ok(p) = Self::new(rs, x) {
                return p;
            }
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.x
    }

    /// x^λ.
    pub fn pow(&self, lambda: &Weight) -> BigRational {
        self.x.iter().enumerate().fold(BigRational::one(), |acc, (i, c)| acc * c.pow(lambda.get(i)))
    }
}

impl std::fmt::Display for SpectralPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.x.iter().map(rational_to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// P_λ = Ť(1_0) e^{−λ}.
pub fn macdonald_p(ctx: &Ctx, lambda: &Weight) -> Result<GroupAlgebraElem> {
    lambda.check_rank(ctx.rs.rank())?;
    PolyRep::new(ctx).one_zero(&GroupAlgebraElem::e(-*lambda))
}

/// Exact division by 1 − e^β, by long division upward along β.
fn divide_one_minus(rs: &RootSystem, h: &GroupAlgebraElem, beta: &Weight) -> Result<GroupAlgebraElem> {
    // β is positive, so ⟨·, 2ρ^∨⟩ strictly increases along it
    let height = |w: &Weight| rs.pair_2rho_check(w);
    let top = h.support().map(height).max().unwrap_or(i32::MIN);
    let mut rem: BTreeMap<(i32, Weight), RingElem> = h.iter().map(|(w, c)| ((height(w), *w), c.clone())).collect();
    let mut out = GroupAlgebraElem::zero(h.rank());
    while let Some(((ht, w), c)) = rem.pop_first() {
        if ht > top {
            return Err(Error::InexactDivision);
        }
        out.add_at(w, &c);
        let up = w + *beta;
        let e = rem.entry((height(&up), up)).or_insert_with(RingElem::zero);
        *e += &c;
        if e.is_zero() {
            rem.remove(&(height(&up), up));
        }
    }
    Ok(out)
}

/// P_λ by symmetrizing over a common denominator: the numerator
/// Σ_w e^{−wλ} ∏_{α>0} (1 − q_α² e^{wα})(1 − e^{−wα}) divided by ∏_{α∈R} (1 − e^α).
pub fn macdonald_p_symmetrized(ctx: &Ctx, lambda: &Weight) -> Result<GroupAlgebraElem> {
    let rs = &ctx.rs;
    let n = rs.rank();
    let one = GroupAlgebraElem::one(n);
    let mut num = GroupAlgebraElem::zero(n);
    for w in rs.weyl_elements() {
        let mut term = GroupAlgebraElem::e(-w.apply(lambda));
        for r in rs.positive_roots() {
            let wa = w.apply(&r.weight);
            let q2 = ctx.params.q_root(r).pow(2);
            let a = one.sub(&GroupAlgebraElem::monomial(wa, q2));
            let b = one.sub(&GroupAlgebraElem::e(-wa));
            term = term.mul(&a).mul(&b);
        }
        num = num.add(&term);
    }
    // ∏_{α∈R}(1 − e^α) = ∏_{α>0} −e^{−α}(1 − e^α)²
    let mut shift = Weight::zero(n);
    let mut sign = RingElem::one();
    for r in rs.positive_roots() {
        num = divide_one_minus(rs, &num, &r.weight)?;
        num = divide_one_minus(rs, &num, &r.weight)?;
        shift += r.weight;
        sign = -sign;
    }
    let mut out = GroupAlgebraElem::zero(n);
    for (w, c) in num.iter() {
        out.add_at(*w + shift, &(c * &sign));
    }
    Ok(out)
}

/// Σ c_ν x^{sign·ν} for p = Σ c_ν e^ν.
fn eval_poly(p: &GroupAlgebraElem, x: &SpectralPoint, sign: i32) -> RingElem {
    let mut out = RingElem::zero();
    for (w, c) in p.iter() {
        out += &c.scale(&x.pow(&w.scale(sign)));
    }
    out
}

/// E_p(x) = (p, e^{-iξ}) = Σ c_λ x^{-λ}; for p = m_λ this is m_{λ*}(x).
pub fn eigenvalue(p: &GroupAlgebraElem, x: &SpectralPoint) -> RingElem {
    eval_poly(p, x, -1)
}

/// p(x) = Σ c_λ x^λ.
pub fn evaluate(p: &GroupAlgebraElem, x: &SpectralPoint) -> RingElem {
    eval_poly(p, x, 1)
}

/// Closed-form evaluator for Φ_x together with the pre-intertwiner φ_x.
pub struct SphericalEvaluator {
    ctx: Ctx,
    x: SpectralPoint,
    phi_cache: Mutex<HashMap<Weight, RingElem>>,
    p_cache: Mutex<HashMap<Weight, RingElem>>,
}

impl SphericalEvaluator {
    pub fn new(ctx: &Ctx, x: SpectralPoint) -> Result<Self> {
        if x.coords().len() != ctx.rs.rank() {
            return Err(Error::RankMismatch { expected: ctx.rs.rank(), got: x.coords().len() });
        }
        Ok(Self { ctx: ctx.clone(), x, phi_cache: Mutex::new(HashMap::new()), p_cache: Mutex::new(HashMap::new()) })
    }

    pub fn point(&self) -> &SpectralPoint {
        &self.x
    }

    fn compute(&self, plus: &Weight) -> Result<RingElem> {
        let rs = &self.ctx.rs;
        let mut sum = RingElem::zero();
        for w in rs.weyl_elements() {
            let mut term = RingElem::constant(self.x.pow(&w.apply(plus)));
            for r in rs.positive_roots() {
                let c = self.x.pow(&-w.apply(&r.weight));
                let den = BigRational::one() - &c;
                if den.is_zero() {
                    return Err(Error::DegenerateSpectralPoint(self.x.to_string()));
                }
                let num = RingElem::one() - self.ctx.params.q_root(r).pow(2).scale(&c);
                term = &term * &num.scale(&den.recip());
            }
            sum += &term;
        }
        Ok(&sum * &self.ctx.params.e_q(rs, plus))
    }

    /// Φ_x(λ) by the closed formula.
    pub fn value(&self, lambda: &Weight) -> Result<RingElem> {
        let plus = self.ctx.rs.dominant(lambda);
        if let Some(v) = self.phi_cache.lock().unwrap().get(&plus) {
            return Ok(v.clone());
        }
        let v = self.compute(&plus)?;
        self.phi_cache.lock().unwrap().insert(plus, v.clone());
        Ok(v)
    }

    /// φ_x(μ) = (e^{iξ}, P_μ) = Σ c_ν x^{−ν}.
    pub fn phi(&self, mu: &Weight) -> Result<RingElem> {
        if let Some(v) = self.p_cache.lock().unwrap().get(mu) {
            return Ok(v.clone());
        }
        let v = eval_poly(&macdonald_p(&self.ctx, mu)?, &self.x, -1);
        self.p_cache.lock().unwrap().insert(*mu, v.clone());
        Ok(v)
    }

    /// (𝒥φ_x)(λ), reading φ_x on the row of 𝒥 at λ.
    pub fn value_via_intertwiner(&self, jay: &Intertwiner, lambda: &Weight) -> Result<RingElem> {
        let mut err = None;
        let v = eval_form_by(&jay.row(lambda), |mu| {
            self.phi(mu).unwrap_or_else(|e| {
                err = Some(e);
                RingElem::zero()
            })
        });
        err.map_or(Ok(v), Err)
    }

    /// (A Φ_x)(λ) for any operator A.
    pub fn apply(&self, op: &Operator, lambda: &Weight) -> Result<RingElem> {
        let mut err = None;
        let v = eval_form_by(&op.row(lambda), |mu| {
            self.value(mu).unwrap_or_else(|e| {
                err = Some(e);
                RingElem::zero()
            })
        });
        err.map_or(Ok(v), Err)
    }
}

fn check(rs: &RootSystem, id: String, relation: &str, cex: Option<Value>) -> Check {
    Check::new(id, relation, rs.label(), rs.rank()).with_result(cex)
}

fn err_json(e: Error) -> Option<Value> {
    Some(json!({ "error": e.to_string() }))
}

/// P_0 = W_0(q²), P_ω = W_{0,ω}(q²) m_{ω*} for minuscule ω, the two constructions of P_λ
/// agree and are W_0-invariant on dominant ‖λ‖ ≤ radius.
pub fn p_identity_checks(ctx: &Ctx, radius: i32) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let mut report = Report::new();
    let zero = rs.zero();
    let cex = match macdonald_p(ctx, &zero) {
        Ok(p) => {
            let w0 = ctx.params.poincare_brute(rs, None);
            (p != GroupAlgebraElem::monomial(zero, w0)).then(|| json!({"P_0": p.to_string()}))
        }
        Err(e) => err_json(e),
    };
    report.push(check(rs, format!("spherical/{label}/P0"), "P_0 = W_0(q^2)", cex));
    for om in rs.minuscule_weights() {
        let stab = ctx.params.poincare_brute(rs, Some(&om));
        let cex = match (macdonald_p(ctx, &om), orbit_sum(rs, &rs.star(&om))) {
            (Ok(p), Ok(m)) => (p != m.scale(&stab)).then(|| json!({"P": p.to_string()})),
            (Err(e), _) | (_, Err(e)) => err_json(e),
        };
        report.push(check(rs, format!("spherical/{label}/P-minuscule-{om}"), "P_ω = W_{0,ω}(q^2) m_ω*", cex));
    }
    let mut cex = None;
    for lam in rs.dominant_ball(radius) {
        let res = (|| -> Result<Option<Value>> {
            let a = macdonald_p(ctx, &lam)?;
            let b = macdonald_p_symmetrized(ctx, &lam)?;
            if a != b {
                return Ok(Some(json!({"lambda": lam.coords(), "hecke": a.to_string(), "symmetrized": b.to_string()})));
            }
            Ok((!a.is_weyl_invariant(rs)).then(|| json!({"lambda": lam.coords(), "not_invariant": a.to_string()})))
        })()
        .unwrap_or_else(err_json);
        if res.is_some() {
            cex = res;
            break;
        }
    }
    report.push(check(rs, format!("spherical/{label}/P-routes"), "Ť(1_0)e^{-λ} = symmetrized P_λ", cex));
    report
}

/// The closed formula for Φ_x agrees with 𝒥φ_x on ‖λ‖ ≤ radius.
pub fn closed_form_checks(ctx: &Ctx, radius: i32, trials: usize, seed: u64) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let jay = Intertwiner::new(ctx);
    let mut sampler = Sampler::new(seed);
    let mut cex = None;
    'outer: for _ in 0..trials {
        let x = SpectralPoint::random(rs, &mut sampler);
        let Ok(ev) = SphericalEvaluator::new(ctx, x) else { unreachable!() };
        for lam in rs.ball(radius) {
            match (ev.value(&lam), ev.value_via_intertwiner(&jay, &lam)) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => {
                    cex = Some(json!({"x": ev.point().to_string(), "lambda": lam.coords(), "closed": a.to_string(), "intertwined": b.to_string()}));
                    break 'outer;
                }
                (Err(e), _) | (_, Err(e)) => {
                    cex = err_json(e);
                    break 'outer;
                }
            }
        }
    }
    let mut report = Report::new();
    report.push(check(rs, format!("spherical/{label}/closed-form"), "Φ_x = J φ_x", cex));
    report
}

/// m_λ(Y)^ Φ_x = m_λ(x) Φ_x at every point of ‖μ‖ ≤ radius, dominant ‖λ‖ ≤ lam_radius.
pub fn diagonalization_checks(ctx: &Ctx, radius: i32, lam_radius: i32, trials: usize, seed: u64) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let mut sampler = Sampler::new(seed);
    let points: Vec<SpectralPoint> = (0..trials).map(|_| SpectralPoint::random(rs, &mut sampler)).collect();
    let evals: Vec<SphericalEvaluator> = points.into_iter().map(|x| SphericalEvaluator::new(ctx, x).unwrap()).collect();
    let mut report = Report::new();
    for lam in rs.dominant_ball(lam_radius) {
        let cex = (|| -> Result<Option<Value>> {
            let op = center_diff(ctx, &lam)?.memoized();
            let m = orbit_sum(rs, &lam)?;
            for ev in &evals {
                let e = eigenvalue(&m, ev.point());
                for mu in rs.ball(radius) {
                    let lhs = ev.apply(&op, &mu)?;
                    let rhs = &e * &ev.value(&mu)?;
                    if lhs != rhs {
                        return Ok(Some(json!({"x": ev.point().to_string(), "mu": mu.coords(), "lhs": lhs.to_string(), "rhs": rhs.to_string()})));
                    }
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, format!("spherical/{label}/diagonal-{lam}"), "m_λ(Y) Φ_x = m_λ(x) Φ_x", cex));
    }
    report
}

fn numeric_only(ctx: &Ctx) -> Result<()> {
    if ctx.params.is_numeric() {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange("formal".into()))
    }
}

fn invert(x: &RingElem) -> Result<RingElem> {
    x.inverse().ok_or(Error::InexactDivision)
}

/// δ_λ = W_0(q²)^{-1} q_{u_λ}^{-2}.
pub fn delta_weight(ctx: &Ctx, lambda: &Weight) -> Result<RingElem> {
    numeric_only(ctx)?;
    let rs = &ctx.rs;
    let qu = ctx.params.q_of_element(rs, &rs.u_lambda(lambda));
    invert(&(&ctx.params.poincare_brute(rs, None) * &qu.pow(2)))
}

/// Δ_λ = q_{t_λ}^{-2} / W_{0,λ}(q²) for dominant λ.
pub fn big_delta_weight(ctx: &Ctx, lambda: &Weight) -> Result<RingElem> {
    numeric_only(ctx)?;
    let rs = &ctx.rs;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(*lambda));
    }
    invert(&(&ctx.params.q_t(rs, lambda).pow(2) * &ctx.params.poincare_brute(rs, Some(lambda))))
}

/// Σ_{μ ∈ W_0λ} δ_μ.
pub fn big_delta_orbit_sum(ctx: &Ctx, lambda: &Weight) -> Result<RingElem> {
    ctx.rs.orbit(lambda).iter().map(|mu| delta_weight(ctx, mu)).sum()
}

/// e_q(−2λ) ∏_{α>0, ⟨λ,α^∨⟩=0} (1 − e_q(α))/(1 − q_α² e_q(α)).
pub fn big_delta_product(ctx: &Ctx, lambda: &Weight) -> Result<RingElem> {
    numeric_only(ctx)?;
    let rs = &ctx.rs;
    let p = &ctx.params;
    let mut out = p.e_q(rs, &lambda.scale(-2));
    for r in rs.positive_roots().iter().filter(|r| rs.pair(lambda, r) == 0) {
        let e = p.e_q(rs, &r.weight);
        let den = RingElem::one() - &p.q_root(r).pow(2) * &e;
        out = &(&out * &(RingElem::one() - e)) * &invert(&den)?;
    }
    Ok(out)
}

/// ⟨f, g⟩ weighted by `w` over the support of g.
fn weighted_pairing(
    f_at: &mut dyn FnMut(&Weight) -> Result<RingElem>,
    g: &LatticeFunction,
    w: &dyn Fn(&Weight) -> Result<RingElem>,
) -> Result<RingElem> {
    let mut out = RingElem::zero();
    for (mu, c) in g.iter() {
        out += &(&(f_at(mu)? * c) * &w(mu)?);
    }
    Ok(out)
}

/// ⟨A f, g⟩_w = ⟨f, B g⟩_w on random pairs.
fn adjoint_pair(
    a: &Operator,
    b: &Operator,
    pairs: &[(LatticeFunction, LatticeFunction)],
    w: &dyn Fn(&Weight) -> Result<RingElem>,
) -> Result<Option<Value>> {
    for (k, (f, g)) in pairs.iter().enumerate() {
        let lhs = weighted_pairing(&mut |mu| Ok(a.eval_at(f, mu)), g, w)?;
        let rhs = weighted_pairing(&mut |mu| Ok(b.eval_at(g, mu)), f, w)?;
        if lhs != rhs {
            return Ok(Some(json!({"pair": k, "lhs": lhs.to_string(), "rhs": rhs.to_string()})));
        }
    }
    Ok(None)
}

/// Symmetric random function on P^+ ∩ ball, extended W_0-invariantly.
fn symmetric_function(rs: &RootSystem, radius: i32, sampler: &mut Sampler) -> LatticeFunction {
    let mut f = LatticeFunction::zero(rs.rank());
    for lam in rs.dominant_ball(radius) {
        if sampler.index(2) == 0 {
            let c = RingElem::constant(sampler.small_rational());
            for mu in rs.orbit(&lam) {
                f.set(mu, c.clone());
            }
        }
    }
    if f.is_zero() {
        f.set(rs.zero(), RingElem::one());
    }
    f
}

/// Symmetric restriction: the same function kept on P^+ only.
fn dominant_part(rs: &RootSystem, f: &LatticeFunction) -> LatticeFunction {
    let map = f.iter().filter(|(w, _)| rs.is_dominant(w)).map(|(w, c)| (*w, c.clone())).collect();
    LatticeFunction::from_map(rs.rank(), map)
}

/// Adjointness of T̂_j and u against δ, of m_λ(Y)^ and m_{λ*}(Y)^ against Δ
/// on symmetric functions, the weight symmetries of δ, and the three forms of Δ.
pub fn unitarity_checks(ctx: &Ctx, radius: i32, trials: usize, seed: u64) -> Report {
    let rs = &ctx.rs;
    let label = rs.label();
    let qtag = ctx.params.class_value(0).as_constant().map(|c| rational_to_string(&c)).unwrap_or_else(|| "formal".into());
    let tag = |s: &str| format!("unitarity/{label}/q={qtag}/{s}");
    let mut report = Report::new();
    if let Err(e) = numeric_only(ctx) {
        report.push(check(rs, tag("params"), "numeric q", err_json(e)));
        return report;
    }
    let delta = |mu: &Weight| delta_weight(ctx, mu);
    let big_delta = |mu: &Weight| big_delta_weight(ctx, &rs.dominant(mu));
    let mut sampler = Sampler::new(seed);
    let pairs: Vec<_> = (0..trials).map(|_| (sampler.function(rs.rank(), radius), sampler.function(rs.rank(), radius))).collect();

    let start = if rs.is_irreducible() { 0 } else { 1 };
    for j in start..=rs.rank() {
        let cex = that(ctx, j).and_then(|t| adjoint_pair(&t, &t, &pairs, &delta)).unwrap_or_else(err_json);
        report.push(check(rs, tag(&format!("T{j}")), "<T̂_j f, g>_δ = <f, T̂_j g>_δ", cex));
    }
    if rs.is_irreducible() {
        for i in rs.omega_indices().unwrap_or_default().into_iter().filter(|&i| i > 0) {
            let u = rs.u_j(i);
            let cex = adjoint_pair(&weyl_op(&u), &weyl_op(&u.inverse()), &pairs, &delta).unwrap_or_else(err_json);
            report.push(check(rs, tag(&format!("U{i}")), "<u f, g>_δ = <f, u^-1 g>_δ", cex));
        }
    }

    // δ symmetries on the ball
    let mut cex = None;
    'sym: for lam in rs.ball(radius) {
        let d = delta(&lam);
        for j in start..=rs.rank() {
            let chi = ctx.chi(j, &lam).pow(2);
            let lhs = delta(&rs.reflect_affine(j, &lam));
            if lhs.as_ref().ok() != d.as_ref().ok().map(|v| v * &chi).as_ref() {
                cex = Some(json!({"lambda": lam.coords(), "j": j}));
                break 'sym;
            }
        }
        if rs.is_irreducible() {
            for i in rs.omega_indices().unwrap_or_default() {
                if delta(&rs.u_j(i).apply(&lam)).ok() != d.as_ref().ok().cloned() {
                    cex = Some(json!({"lambda": lam.coords(), "u": i}));
                    break 'sym;
                }
            }
        }
    }
    report.push(check(rs, tag("delta-symmetry"), "δ_{s_jλ} = χ_j(λ)^2 δ_λ, δ_{uλ} = δ_λ", cex));

    // three forms of Δ
    let mut cex = None;
    for lam in rs.dominant_ball(radius) {
        let forms = [big_delta_weight(ctx, &lam), big_delta_orbit_sum(ctx, &lam), big_delta_product(ctx, &lam)];
        let ok = forms.iter().all(|f| f.is_ok()) && forms.windows(2).all(|w| w[0] == w[1]);
        if !ok {
            let shown: Vec<String> = forms.iter().map(|f| format!("{f:?}")).collect();
            cex = Some(json!({"lambda": lam.coords(), "forms": shown}));
            break;
        }
    }
    report.push(check(rs, tag("Delta-forms"), "three expressions for Δ_λ agree", cex));

    // m_λ(Y) against m_{λ*}(Y) on symmetric functions
    let sym: Vec<_> = (0..trials)
        .map(|_| (symmetric_function(rs, radius, &mut sampler), symmetric_function(rs, radius, &mut sampler)))
        .collect();
    // Y^λ needs the affine structure, so reducible types stop here
    let centers = if rs.is_irreducible() { rs.dominant_ball(1) } else { Vec::new() };
    for lam in centers.into_iter().filter(|l| !l.is_zero()) {
        let cex = (|| -> Result<Option<Value>> {
            let a = center_diff(ctx, &lam)?.memoized();
            let b = center_diff(ctx, &rs.star(&lam))?.memoized();
            for (k, (f, g)) in sym.iter().enumerate() {
                let (fd, gd) = (dominant_part(rs, f), dominant_part(rs, g));
                let lhs = weighted_pairing(&mut |mu| Ok(a.eval_at(f, mu)), &gd, &big_delta)?;
                let rhs = weighted_pairing(&mut |mu| Ok(b.eval_at(g, mu)), &fd, &big_delta)?;
                if lhs != rhs {
                    return Ok(Some(json!({"pair": k, "lhs": lhs.to_string(), "rhs": rhs.to_string()})));
                }
            }
            Ok(None)
        })()
        .unwrap_or_else(err_json);
        report.push(check(rs, tag(&format!("center-{lam}")), "<m_λ(Y) f, g>_Δ = <f, m_λ*(Y) g>_Δ", cex));
    }
    report
}

/// A numeric context for the given rational q (one value for every class).
pub fn numeric_context(rs: &RootSystem, q: &BigRational) -> Result<Ctx> {
    let params = MultiplicityParams::numeric(rs, std::slice::from_ref(q))?;
    params.check_unit_interval()?;
    Ok(HeckeContext::new(rs.clone(), params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ctx(t: &str) -> Ctx {
        HeckeContext::formal(RootSystem::parse(t).unwrap())
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn a1_values() {
        let c = ctx("A1");
        let p = macdonald_p(&c, &Weight::new(&[1])).unwrap();
        assert_eq!(p.to_string(), "e[1] + e[-1]");
        let x = SpectralPoint::new(&c.rs, vec![r(2, 1)]).unwrap();
        let m = orbit_sum(&c.rs, &Weight::new(&[1])).unwrap();
        assert_eq!(eigenvalue(&m, &x), RingElem::constant(r(5, 2)));
        let a2 = RootSystem::parse("A2").unwrap();
        let y = SpectralPoint::new(&a2, vec![r(2, 1), r(3, 1)]).unwrap();
        let m1 = orbit_sum(&a2, &Weight::new(&[1, 0])).unwrap();
        let m2 = orbit_sum(&a2, &Weight::new(&[0, 1])).unwrap();
        assert_eq!(eigenvalue(&m1, &y), evaluate(&m2, &y));
        assert_eq!(eigenvalue(&GroupAlgebraElem::one(1), &x), RingElem::one());
        assert!(SpectralPoint::new(&c.rs, vec![r(-1, 1)]).is_err());
        // Φ_x(0) = W_0(q²) = 1 + q²
        let ev = SphericalEvaluator::new(&c, x).unwrap();
        assert_eq!(ev.value(&Weight::zero(1)).unwrap(), c.params.poincare_brute(&c.rs, None));
    }

    #[test]
    fn symmetrized_matches_hecke_route() {
        for t in ["A1", "A2", "B2"] {
            let c = ctx(t);
            for lam in c.rs.ball(2) {
                assert_eq!(macdonald_p(&c, &lam).unwrap(), macdonald_p_symmetrized(&c, &lam).unwrap(), "{t} {lam}");
            }
        }
    }

    #[test]
    fn delta_a1() {
        let rs = RootSystem::parse("A1").unwrap();
        let c = numeric_context(&rs, &r(1, 2)).unwrap();
        for k in 1..4 {
            let lam = Weight::new(&[k]);
            assert_eq!(big_delta_weight(&c, &lam).unwrap(), RingElem::constant(r(4i64.pow(k as u32), 1)));
        }
        assert_eq!(big_delta_weight(&c, &Weight::zero(1)).unwrap(), RingElem::constant(r(4, 5)));
        assert!(big_delta_weight(&ctx("A1"), &Weight::zero(1)).is_err());
    }

    #[test]
    fn suites_small() {
        for t in ["A1", "A2", "B2"] {
            let c = ctx(t);
            let mut rep = p_identity_checks(&c, 2);
            rep.extend(closed_form_checks(&c, 2, 2, 3));
            rep.extend(diagonalization_checks(&c, 1, 1, 2, 3));
            assert!(rep.all_passed(), "{t}\n{}", rep.to_text());
            let n = numeric_context(&c.rs, &r(1, 2)).unwrap();
            let rep = unitarity_checks(&n, 2, 3, 5);
            assert!(rep.all_passed(), "{t}\n{}", rep.to_text());
        }
    }
}
