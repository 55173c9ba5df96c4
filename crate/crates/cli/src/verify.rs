use hecke_core::gln::{self, GlRep, HallLittlewood};
use hecke_core::heckeops::verify::{a2_braid_table_check, braid_identity_table, construction_checks, hecke_suite};
use hecke_core::heckeops::{form_to_string, Ctx};
use hecke_core::intertwine::{minuscule_suite, intertwine_suite};
use hecke_core::pieri::{adjoint_checks, eigen_checks, pieri_suite};
use hecke_core::qring::parse_rational;
use hecke_core::report::{Check, Report};
use hecke_core::rootsys::RootSystem;
use hecke_core::spherical::{closed_form_checks, diagonalization_checks, numeric_context, p_identity_checks, unitarity_checks};
use num_rational::BigRational;
use serde_json::json;

use crate::setup::{context, numeric_q, root_system};
use crate::{Failure, Format, Suite, VerifyArgs};

const DEFAULT_SEED: u64 = 1;
const DEFAULT_TRIALS: usize = 10;

pub fn run(a: &VerifyArgs) -> Result<bool, Failure> {
    let seed = a.common.seed.unwrap_or(DEFAULT_SEED);
    let trials = a.trials.unwrap_or(DEFAULT_TRIALS);
    let q = numeric_q(&a.common)?;
    let mut report = Report::new();
    if a.suite == Suite::Gln {
        let n = a.n.ok_or_else(|| Failure::Usage("--suite gln needs --n".into()))?;
        report.extend(gl_report(n, a.common.radius.unwrap_or(2), seed)?);
    } else {
        let rs = root_system(&a.common)?;
        let ctx = context(&rs, q.as_ref())?;
        let suites: Vec<Suite> = if a.suite == Suite::All { all_suites(&rs) } else { vec![a.suite] };
        for s in suites {
            report.extend(run_suite(s, &rs, &ctx, q.as_ref(), a, seed, trials)?);
        }
    }
    report.sort();
    let format = a.common.format.unwrap_or(Format::Json);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap()),
        Format::Text => print!("{}", report.to_text()),
        Format::Csv => {
            println!("id;status;relation");
            for c in &report.checks {
                println!("{};{};{}", c.id, if c.passed() { "pass" } else { "fail" }, c.relation);
            }
        }
    }
    if let Some(first) = report.failures().next() {
        eprintln!("first failure: {} {}", first.id, first.counterexample.clone().unwrap_or_default());
    }
    Ok(report.all_passed())
}

fn all_suites(rs: &RootSystem) -> Vec<Suite> {
    let mut out = Vec::new();
    if rs.rank() == 2 && rs.is_irreducible() {
        out.push(Suite::Braid);
    }
    out.extend([Suite::Hecke, Suite::Construction, Suite::Intertwine, Suite::Minuscule, Suite::Spherical]);
    if rs.is_irreducible() {
        out.extend([Suite::Diagonal, Suite::Pieri]);
    }
    out.push(Suite::Unitarity);
    if rs.label().starts_with('A') && rs.is_irreducible() {
        out.push(Suite::Gln);
    }
    out
}

fn run_suite(
    s: Suite,
    rs: &RootSystem,
    ctx: &Ctx,
    q: Option<&BigRational>,
    a: &VerifyArgs,
    seed: u64,
    trials: usize,
) -> Result<Report, Failure> {
    let radius = a.common.radius;
    let r = |d: i32| radius.unwrap_or(d);
    let mut out = Report::new();
    match s {
        Suite::Braid => out.push(braid_check(rs, ctx)?),
        Suite::Hecke => out.extend(hecke_suite(ctx, r(3))),
        Suite::Construction => out.extend(construction_checks(ctx, r(2))),
        Suite::Intertwine => out.extend(intertwine_suite(ctx, r(3), trials, seed)),
        Suite::Minuscule => out.extend(minuscule_suite(ctx, r(3))),
        Suite::Spherical => {
            out.extend(p_identity_checks(ctx, r(2)));
            out.extend(closed_form_checks(ctx, r(2), trials, seed));
        }
        Suite::Diagonal => {
            irreducible(rs, "the diagonal suite")?;
            out.extend(diagonalization_checks(ctx, r(2), 2, trials, seed));
            out.extend(eigen_checks(ctx, r(2), trials, seed));
        }
        Suite::Pieri => {
            irreducible(rs, "the Pieri suite")?;
            out.extend(pieri_suite(ctx, r(3), trials.min(5), seed));
        }
        Suite::Unitarity => {
            let values: Vec<BigRational> = match q {
                Some(q) => vec![q.clone()],
                None => vec![parse_rational("1/2")?, parse_rational("2/3")?],
            };
            for v in values {
                let nctx = numeric_context(rs, &v)?;
                out.extend(unitarity_checks(&nctx, r(4), trials, seed));
                if rs.is_irreducible() {
                    out.extend(adjoint_checks(&nctx, r(3)));
                }
            }
        }
        Suite::Gln => {
            let n = a.n.unwrap_or(rs.rank() + 1);
            out.extend(gl_report(n, r(2).min(2), seed)?);
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
    Ok(out)
}

fn irreducible(rs: &RootSystem, what: &str) -> Result<(), Failure> {
    if rs.is_irreducible() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{what} needs an irreducible root system")))
    }
}

/// The A2 table against its known values; other rank-two types report the
/// table with agreement of both sides.
fn braid_check(rs: &RootSystem, ctx: &Ctx) -> Result<Check, Failure> {
    if rs.rank() != 2 || !rs.is_irreducible() {
        return Err(Failure::Usage("--suite braid needs an irreducible rank-two type".into()));
    }
    if rs.label() == "A2" && !ctx.params.is_numeric() {
        return Ok(a2_braid_table_check(ctx)?);
    }
    let names = ctx.params.names();
    let rows = braid_identity_table(ctx)?;
    let table: Vec<_> = rows
        .iter()
        .map(|row| {
            let value = match &row.multiple {
                Some(c) => format!("({})*f0", c.format_with(&names)),
                None => form_to_string(&row.lhs, &names),
            };
            json!({ "lambda": row.lambda.coords(), "value": value, "sides_agree": row.lhs == row.rhs })
        })
        .collect();
    let cex = rows
        .iter()
        .find(|row| row.lhs != row.rhs)
        .map(|row| json!({ "at": row.lambda.coords(), "lhs": form_to_string(&row.lhs, &names), "rhs": form_to_string(&row.rhs, &names) }));
    let label = rs.label();
    Ok(Check::new(format!("hecke/difference/{label}/braid-table"), "braid identity table", label, 2)
        .with_result(cex)
        .with_table(serde_json::Value::Array(table)))
}

fn gl_report(n: usize, radius: i32, seed: u64) -> Result<Report, Failure> {
    let hl = HallLittlewood::new(n)?;
    let mut out = Report::new();
    for rep in [GlRep::Difference, GlRep::Integral] {
        out.extend(gln::relation_checks(n, rep, radius));
        out.extend(gln::y_checks(n, rep, radius));
    }
    out.extend(gln::central_checks(n, radius, seed));
    let hl_radius = if n <= 3 { radius + 1 } else { radius };
    out.extend(gln::hl_checks(&hl, hl_radius));
    out.extend(gln::morris_checks(&hl, hl_radius));
    out.extend(gln::comparison_checks(n, radius));
    Ok(out)
}
