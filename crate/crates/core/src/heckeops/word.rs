use std::fmt;
use std::str::FromStr;

use super::{int_i, int_i_inv, int_u, int_u_inv, that, that_inv, translate, weyl_op, y_diff, Ctx, PolyRep};
use crate::error::{Error, Result};
use crate::latfun::GroupAlgebraElem;
use crate::rootsys::Weight;

/// One generator of the extended affine Hecke algebra or its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    T(usize),
    TInv(usize),
    /// T_{u_j} for u_j ∈ Ω.
    U(usize),
    UInv(usize),
    Y(Weight),
}

impl Token {
    pub fn inverse(&self) -> Token {
        match self {
            Token::T(j) => Token::TInv(*j),
            Token::TInv(j) => Token::T(*j),
            Token::U(j) => Token::UInv(*j),
            Token::UInv(j) => Token::U(*j),
            Token::Y(l) => Token::Y(-*l),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::T(j) => write!(f, "T{j}"),
            Token::TInv(j) => write!(f, "T{j}^-1"),
            Token::U(j) => write!(f, "U{j}"),
            Token::UInv(j) => write!(f, "U{j}^-1"),
            Token::Y(l) => write!(f, "Y{l}"),
        }
    }
}

impl FromStr for Token {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidToken { token: s.into(), reason: reason.into() };
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let tok = if let Some(rest) = body.strip_prefix('Y') {
            Token::Y(Weight::parse(rest).map_err(|_| bad("expected Y[a,b,...]"))?)
        } else if let Some(rest) = body.strip_prefix('T') {
            Token::T(rest.parse().map_err(|_| bad("expected T<index>"))?)
        } else if let Some(rest) = body.strip_prefix('U') {
            Token::U(rest.parse().map_err(|_| bad("expected U<index>"))?)
        } else {
            return Err(bad("unknown generator"));
        };
        Ok(if inv { tok.inverse() } else { tok })
    }
}

/// Which representation a word is evaluated in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Difference,
    Integral,
    Polynomial,
}

impl FromStr for Representation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "difference" | "diff" => Ok(Self::Difference),
            "integral" | "int" => Ok(Self::Integral),
            "polynomial" | "poly" => Ok(Self::Polynomial),
            _ => Err(Error::Parse(format!("unknown representation {s:?}"))),
        }
    }
}

/// A product of tokens; the leftmost token is the outermost factor.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeWord {
    pub tokens: Vec<Token>,
}

impl FromStr for HeckeWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self { tokens: s.split_whitespace().map(str::parse).collect::<Result<_>>()? })
    }
}

impl fmt::Display for HeckeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl HeckeWord {
    pub fn new(tokens: Vec<Token>) -> Self {
        Self { tokens }
    }

    pub fn inverse(&self) -> Self {
        Self { tokens: self.tokens.iter().rev().map(Token::inverse).collect() }
    }

    fn check(&self, ctx: &Ctx) -> Result<()> {
        let n = ctx.rs.rank();
        for t in &self.tokens {
            let ok = match t {
                Token::T(j) | Token::TInv(j) => *j <= n && (*j > 0 || ctx.rs.is_irreducible()),
                Token::U(j) | Token::UInv(j) => ctx.rs.omega_indices().is_ok_and(|v| v.contains(j)),
                Token::Y(l) => l.rank() == n,
            };
            if !ok {
                return Err(Error::InvalidToken { token: t.to_string(), reason: format!("not valid for {}", ctx.rs.label()) });
            }
        }
        Ok(())
    }

    /// The operator on lattice functions in the difference or integral representation.
    pub fn operator(&self, ctx: &Ctx, rep: Representation) -> Result<super::Operator> {
        self.check(ctx)?;
        let ops = self
            .tokens
            .iter()
            .map(|t| match (rep, t) {
                (Representation::Difference, Token::T(j)) => that(ctx, *j),
                (Representation::Difference, Token::TInv(j)) => that_inv(ctx, *j),
                (Representation::Difference, Token::U(j)) => Ok(weyl_op(&ctx.rs.u_j(*j))),
                (Representation::Difference, Token::UInv(j)) => Ok(weyl_op(&ctx.rs.u_j(*j).inverse())),
                (Representation::Difference, Token::Y(l)) => y_diff(ctx, l),
                (Representation::Integral, Token::T(j)) => int_i(ctx, *j),
                (Representation::Integral, Token::TInv(j)) => int_i_inv(ctx, *j),
                (Representation::Integral, Token::U(j)) => int_u(ctx, *j),
                (Representation::Integral, Token::UInv(j)) => int_u_inv(ctx, *j),
                (Representation::Integral, Token::Y(l)) => Ok(translate(*l)),
                (Representation::Polynomial, _) => Err(Error::InvalidToken {
                    token: t.to_string(),
                    reason: "the polynomial representation acts on group-algebra elements".into(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(super::Operator::product(ops))
    }

    /// Ť(word) p; the rightmost token acts first.
    pub fn apply_poly(&self, pr: &PolyRep, p: &GroupAlgebraElem) -> Result<GroupAlgebraElem> {
        self.check(pr.ctx())?;
        let mut cur = p.clone();
        for t in self.tokens.iter().rev() {
            cur = match t {
                Token::T(j) => pr.t_j(*j, &cur)?,
                Token::TInv(j) => pr.t_j_inv(*j, &cur)?,
                Token::U(j) => pr.t_u(*j, &cur)?,
                Token::UInv(j) => pr.t_u_inv(*j, &cur)?,
                Token::Y(l) => pr.y(l, &cur),
            };
        }
        Ok(cur)
    }

    /// Rewrite T_0^{±1} and T_u^{±1} through finite generators and Y.
    pub fn bernstein_form(&self, ctx: &Ctx) -> Result<HeckeWord> {
        self.check(ctx)?;
        let rs = &ctx.rs;
        let mut out = Vec::new();
        for t in &self.tokens {
            match t {
                Token::T(0) | Token::TInv(0) => {
                    let a0 = rs.alpha0()?;
                    let word = rs.reduced_word(&rs.reflection(rs.root(0)));
                    // T_0 = Y^{α_0} T_s^{-1}
                    let mut fwd = vec![Token::Y(a0)];
                    fwd.extend(word.iter().rev().map(|&j| Token::TInv(j)));
                    let w = HeckeWord::new(fwd);
                    out.extend(if *t == Token::T(0) { w } else { w.inverse() }.tokens);
                }
                Token::U(0) | Token::UInv(0) => {}
                Token::U(j) | Token::UInv(j) => {
                    let om = rs.omega(*j);
                    let word = rs.reduced_word(&rs.v_lambda(&om));
                    // T_u = Y^ω T_{v_ω}^{-1}
                    let mut fwd = vec![Token::Y(om)];
                    fwd.extend(word.iter().rev().map(|&k| Token::TInv(k)));
                    let w = HeckeWord::new(fwd);
                    out.extend(if matches!(t, Token::U(_)) { w } else { w.inverse() }.tokens);
                }
                other => out.push(other.clone()),
            }
        }
        Ok(HeckeWord::new(out))
    }

    /// The anti-involution T_w Y^λ ↦ Y^λ T_{w^{-1}}: fixes T_j (j ≥ 1) and
    /// Y^λ and reverses products.
    pub fn star(&self, ctx: &Ctx) -> Result<HeckeWord> {
        let mut b = self.bernstein_form(ctx)?;
        b.tokens.reverse();
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckeops::HeckeContext;
    use crate::rootsys::RootSystem;

    #[test]
    fn parse_round_trip() {
        let w: HeckeWord = "T1 T0 T1^-1 U1 U1^-1 Y[1,0] Y[1,-1]^-1".parse().unwrap();
        assert_eq!(w.tokens.len(), 7);
        assert_eq!(w.tokens[6], Token::Y(Weight::new(&[-1, 1])));
        let again: HeckeWord = w.to_string().parse().unwrap();
        assert_eq!(w, again);
        assert!("X1".parse::<HeckeWord>().is_err());
    }

    #[test]
    fn invalid_for_type() {
        let ctx = HeckeContext::formal(RootSystem::parse("G2").unwrap());
        let w: HeckeWord = "U1".parse().unwrap();
        assert!(w.operator(&ctx, Representation::Integral).is_err());
        let w: HeckeWord = "T3".parse().unwrap();
        assert!(w.operator(&ctx, Representation::Difference).is_err());
    }
}
