use hecke_core::heckeops::{Ctx, HeckeContext};
use hecke_core::qring::parse_rational;
use hecke_core::rootsys::RootSystem;
use hecke_core::spherical::numeric_context;
use num_rational::BigRational;

use crate::{Common, Failure};

pub fn root_system(c: &Common) -> Result<RootSystem, Failure> {
    let Some(t) = &c.cartan_type else {
        return Err(Failure::Usage("--type is required".into()));
    };
    let label = if t.chars().any(|ch| ch.is_ascii_digit()) {
        t.clone()
    } else {
        let r = c.rank.ok_or_else(|| Failure::Usage(format!("--type {t} needs --rank")))?;
        format!("{t}{r}")
    };
    let rs = RootSystem::parse(&label)?;
    if let Some(r) = c.rank {
        if r != rs.rank() {
            return Err(Failure::Usage(format!("--rank {r} does not match type {label}")));
        }
    }
    Ok(rs)
}

/// None for formal q.
pub fn numeric_q(c: &Common) -> Result<Option<BigRational>, Failure> {
    match c.q.as_deref() {
        None | Some("formal") => Ok(None),
        Some(s) => Ok(Some(parse_rational(s)?)),
    }
}

pub fn context(rs: &RootSystem, q: Option<&BigRational>) -> Result<Ctx, Failure> {
    match q {
        None => Ok(HeckeContext::formal(rs.clone())),
        Some(q) => Ok(numeric_context(rs, q)?),
    }
}
