use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 8;

/// Integer vector of length at most [`MAX_RANK`]. For a root system these are
/// coordinates on the fundamental weights; the GL_N code reuses the type for
/// plain vectors in Z^N.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    len: u8,
    c: [i32; MAX_RANK],
}

impl Weight {
    pub fn new(coords: &[i32]) -> Self {
        assert!(coords.len() <= MAX_RANK, "rank {} exceeds {MAX_RANK}", coords.len());
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Self { len: coords.len() as u8, c }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(&vec![0; rank])
    }

    /// The unit vector e_i (fundamental weight ω_{i+1} in ω-coordinates).
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.c[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.len as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.c[..self.len as usize]
    }

    pub fn get(&self, i: usize) -> i32 {
        self.c[i]
    }

    pub fn set(&mut self, i: usize, v: i32) {
        assert!(i < self.rank());
        self.c[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&x| x == 0)
    }

    pub fn scale(&self, k: i32) -> Self {
        let mut out = *self;
        for x in &mut out.c[..self.len as usize] {
            *x *= k;
        }
        out
    }

    /// L1 norm of the coordinate vector.
    pub fn norm(&self) -> i32 {
        self.coords().iter().map(|x| x.abs()).sum()
    }

    pub fn sum(&self) -> i32 {
        self.coords().iter().sum()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, got: self.rank() });
        }
        Ok(())
    }

    /// Parse "1,0,-2" (brackets optional).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        if t.trim().is_empty() {
            return Err(Error::Parse(format!("empty weight {s:?}")));
        }
        let coords = t
            .split(',')
            .map(|x| x.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad weight {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() > MAX_RANK {
            return Err(Error::Parse(format!("weight {s:?} has too many coordinates")));
        }
        Ok(Self::new(&coords))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i32>::deserialize(d)?;
        if v.len() > MAX_RANK {
            return Err(serde::de::Error::custom("too many coordinates"));
        }
        Ok(Weight::new(&v))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.len, rhs.len);
        for i in 0..self.len as usize {
            self.c[i] += rhs.c[i];
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.len, rhs.len);
        for i in 0..self.len as usize {
            self.c[i] -= rhs.c[i];
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}
