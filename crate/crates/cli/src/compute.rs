use std::collections::BTreeMap;

use hecke_core::gln::{self, HallLittlewood};
use hecke_core::latfun::GroupAlgebraElem;
use hecke_core::pieri::{pieri_expand, small_weights};
use hecke_core::qring::{parse_rational, rational_to_string, RingElem};
use hecke_core::rootsys::{RootSystem, Weight};
use hecke_core::spherical::{big_delta_weight, macdonald_p, SpectralPoint, SphericalEvaluator};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::setup::{context, numeric_q, root_system};
use crate::{ComputeArgs, Failure, Format, Target};

pub fn run(target: Target, a: &ComputeArgs) -> Result<bool, Failure> {
    let format = a.common.format.unwrap_or(Format::Text);
    let out = match target {
        Target::P => p(a, format)?,
        Target::Spherical => spherical(a, format)?,
        Target::Pieri => pieri(a, format)?,
        Target::Hl => hl(a, format)?,
        Target::Morris => morris(a, format)?,
    };
    println!("{out}");
    Ok(true)
}

fn weight_arg(s: &Option<String>, name: &str, rank: usize) -> Result<Weight, Failure> {
    let s = s.as_ref().ok_or_else(|| Failure::Usage(format!("--{name} is required")))?;
    let w = Weight::parse(s)?;
    if w.rank() != rank {
        return Err(Failure::Usage(format!("--{name} {s} needs {rank} coordinates")));
    }
    Ok(w)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap()
}

fn p(a: &ComputeArgs, format: Format) -> Result<String, Failure> {
    let rs = root_system(&a.common)?;
    let ctx = context(&rs, numeric_q(&a.common)?.as_ref())?;
    let lam = weight_arg(&a.lambda, "lambda", rs.rank())?;
    let poly = macdonald_p(&ctx, &lam)?;
    let names = ctx.params.names();
    Ok(match format {
        Format::Json => pretty(&json!({
            "type": rs.label(),
            "lambda": lam.coords(),
            "P": poly.format_with(&names),
            "terms": poly.iter().map(|(w, c)| json!({ "weight": w.coords(), "coeff": c.format_with(&names) })).collect::<Vec<_>>(),
        })),
        _ => poly.format_with(&names),
    })
}

fn resolve_omega(rs: &RootSystem, s: &Option<String>) -> Result<Weight, Failure> {
    match s.as_deref() {
        None | Some("minuscule") => rs
            .minuscule_weights()
            .first()
            .copied()
            .or_else(|| small_weights(rs).first().copied())
            .ok_or_else(|| Failure::Usage(format!("{} has no minuscule weight", rs.label()))),
        Some("quasi") => Ok(rs.alpha0()?),
        Some(_) => weight_arg(s, "omega", rs.rank()),
    }
}

fn pieri(a: &ComputeArgs, format: Format) -> Result<String, Failure> {
    let rs = root_system(&a.common)?;
    let ctx = context(&rs, numeric_q(&a.common)?.as_ref())?;
    let lam = weight_arg(&a.lambda, "lambda", rs.rank())?;
    let om = resolve_omega(&rs, &a.omega)?;
    let expansion = pieri_expand(&ctx, &om, &lam)?;
    let f = |c: &RingElem| ctx.params.format(c);
    let u = expansion.get(&lam).cloned().unwrap_or_else(RingElem::zero);
    let terms: Vec<(Weight, &RingElem)> = expansion.iter().filter(|(w, _)| **w != lam).map(|(w, c)| (*w - lam, c)).collect();
    Ok(match format {
        Format::Json => pretty(&json!({
            "type": rs.label(),
            "omega": om.coords(),
            "lambda": lam.coords(),
            "U": f(&u),
            "terms": terms.iter().map(|(nu, c)| json!({ "nu": nu.coords(), "V": f(c) })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("nu;coeff\n0;");
            s.push_str(&f(&u));
            for (nu, c) in &terms {
                s.push_str(&format!("\n{nu};{}", f(c)));
            }
            s
        }
        Format::Text => {
            let mut s = format!("m_{om} p_{lam} = ({}) p_{lam}", f(&u));
            for (nu, c) in &terms {
                s.push_str(&format!(" + ({}) p_{}", f(c), lam + *nu));
            }
            s
        }
    })
}

fn spectral_point(rs: &RootSystem, s: &Option<String>) -> Result<SpectralPoint, Failure> {
    let s = s.as_ref().ok_or_else(|| Failure::Usage("--x is required".into()))?;
    let coords = s.split(',').map(|t| parse_rational(t.trim())).collect::<Result<Vec<_>, _>>()?;
    Ok(SpectralPoint::new(rs, coords)?)
}

fn spherical(a: &ComputeArgs, format: Format) -> Result<String, Failure> {
    let rs = root_system(&a.common)?;
    let q = if a.formal_q { None } else { numeric_q(&a.common)? };
    let ctx = context(&rs, q.as_ref())?;
    let x = spectral_point(&rs, &a.x)?;
    let ev = SphericalEvaluator::new(&ctx, x.clone())?;
    let points: Vec<Weight> = match (&a.lambda, a.common.radius) {
        (Some(_), _) => vec![weight_arg(&a.lambda, "lambda", rs.rank())?],
        (None, Some(r)) => rs.dominant_ball(r),
        (None, None) => return Err(Failure::Usage("give --lambda or -L".into())),
    };
    let mut rows = Vec::new();
    for lam in &points {
        let phi = ctx.params.format(&ev.value(lam)?);
        let delta = if ctx.params.is_numeric() {
            Some(ctx.params.format(&big_delta_weight(&ctx, &rs.dominant(lam))?))
        } else {
            None
        };
        rows.push((*lam, phi, delta));
    }
    let q_text = q.as_ref().map(rational_to_string).unwrap_or_else(|| "formal".into());
    Ok(match format {
        Format::Json => pretty(&json!({
            "type": rs.label(),
            "x": x.to_string(),
            "q": q_text,
            "rows": rows.iter().map(|(l, p, d)| json!({ "lambda": l.coords(), "Phi": p, "Delta": d })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("lambda;Phi;Delta");
            for (l, p, d) in &rows {
                s.push_str(&format!("\n{l};{p};{}", d.as_deref().unwrap_or("")));
            }
            s
        }
        Format::Text => rows
            .iter()
            .map(|(l, p, d)| match d {
                Some(d) => format!("Phi_x({l}) = {p}    Delta = {d}"),
                None => format!("Phi_x({l}) = {p}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn gl_n(a: &ComputeArgs) -> Result<usize, Failure> {
    a.n.ok_or_else(|| Failure::Usage("--n is required".into()))
}

fn fmt_q(c: &RingElem) -> String {
    c.format_with(&["q"])
}

fn poly_text(p: &GroupAlgebraElem, coeff: impl Fn(&RingElem) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.iter().collect::<Vec<_>>().into_iter().rev().map(|(w, c)| format!("({})*x{w}", coeff(c))).collect::<Vec<_>>().join(" + ")
}

fn hl(a: &ComputeArgs, format: Format) -> Result<String, Failure> {
    let n = gl_n(a)?;
    let lam = weight_arg(&a.lambda, "lambda", n)?;
    let p = gln::hall_littlewood(n, &lam)?;
    let q = numeric_q(&a.common)?;
    // At q = 0 the prefactor q^{2⟨ρ,λ⟩} is removed first, leaving s_λ.
    let (p, note) = match &q {
        None => (p, None),
        Some(v) => {
            let scaled = if v.is_zero() { p.scale(&RingElem::var_pow(0, -gln::two_rho_pair(&lam))) } else { p };
            let mut out = GroupAlgebraElem::zero(n);
            for (w, c) in scaled.iter() {
                let val = c.eval(std::slice::from_ref(v)).ok_or_else(|| Failure::Failed("negative power of q at q = 0".into()))?;
                out.add_at(*w, &RingElem::constant(val));
            }
            (out, v.is_zero().then_some("q^{-2<rho,lambda>} p_lambda at q = 0"))
        }
    };
    if a.expand || format == Format::Json {
        let terms: Vec<Value> = p.iter().map(|(w, c)| json!({ "monomial": w.coords(), "coeff": fmt_q(c) })).collect();
        let mut v = json!({ "n": n, "lambda": lam.coords(), "terms": terms });
        if let Some(q) = &q {
            v["q"] = json!(rational_to_string(q));
        }
        if let Some(note) = note {
            v["normalization"] = json!(note);
        }
        return Ok(pretty(&v));
    }
    Ok(poly_text(&p, fmt_q))
}

fn morris(a: &ComputeArgs, format: Format) -> Result<String, Failure> {
    let n = gl_n(a)?;
    let r = a.r.ok_or_else(|| Failure::Usage("--r is required".into()))?;
    let lam = weight_arg(&a.lambda, "lambda", n)?;
    let formula = gln::morris_pieri(n, r, &lam)?;
    let brute = HallLittlewood::new(n)?.pieri_brute_force(r, &lam)?;
    let agrees = formula == brute;
    let terms = |m: &BTreeMap<Weight, RingElem>| -> Vec<Value> {
        m.iter().rev().map(|(nu, v)| json!({ "nu": nu.coords(), "J": (*nu - lam).coords(), "V": fmt_q(v) })).collect()
    };
    Ok(match format {
        Format::Json => pretty(&json!({ "n": n, "r": r, "lambda": lam.coords(), "terms": terms(&formula), "brute_force_agrees": agrees })),
        Format::Csv => {
            let mut s = String::from("nu;V");
            for (nu, v) in formula.iter().rev() {
                s.push_str(&format!("\n{nu};{}", fmt_q(v)));
            }
            s
        }
        Format::Text => {
            let rhs: Vec<String> = formula.iter().rev().map(|(nu, v)| format!("({}) p{nu}", fmt_q(v))).collect();
            format!("m_{r} p{lam} = {}    [brute force {}]", rhs.join(" + "), if agrees { "agrees" } else { "DIFFERS" })
        }
    })
}
