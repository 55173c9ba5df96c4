use crate::rootsys::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("cannot parse Cartan type {0:?}")]
    ParseType(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("{0} needs an irreducible root system")]
    Reducible(&'static str),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} is neither minuscule nor quasi-minuscule")]
    NotSmallWeight(Weight),
    #[error("weight {nu} is not in the orbit of {omega}")]
    NotInOrbit { nu: Weight, omega: Weight },
    #[error("degenerate spectral point ({0}); resample x")]
    DegenerateSpectralPoint(String),
    #[error("parameter q must satisfy 0 < q < 1, got {0}")]
    ParamOutOfRange(String),
    #[error("region is not saturated: value at {at} depends on {missing}")]
    NotSaturated { at: Weight, missing: Weight },
    #[error("invalid token {token:?}: {reason}")]
    InvalidToken { token: String, reason: String },
    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("composition {0:?} is not weakly decreasing")]
    NotDecreasing(Vec<i32>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division is not exact")]
    InexactDivision,
}
