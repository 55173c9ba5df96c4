//! Exact coefficients: Laurent polynomials in the Hecke parameters.

mod coef;
mod params;
mod ratfn;
mod ring;

pub use params::MultiplicityParams;
pub use ratfn::RationalElem;
pub use ring::{parse_rational, rational_to_string, Mono, RingElem, DEFAULT_NAMES, MAX_VARS};
