//! Exact affine Hecke algebra computations on weight-lattice functions.

pub mod error;
pub mod gln;
pub mod heckeops;
pub mod intertwine;
pub mod latfun;
pub mod pieri;
pub mod qring;
pub mod random;
pub mod report;
pub mod rootsys;
pub mod spherical;

pub use error::{Error, Result};
