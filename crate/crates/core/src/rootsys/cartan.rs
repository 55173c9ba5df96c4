use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::Weight;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    /// The reducible rank-two system, used for the orthogonal braid check.
    A1xA1,
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::G2 | CartanType::A1xA1 => 2,
            CartanType::F4 => 4,
        }
    }

    pub fn from_label(family: &str, rank: usize) -> Result<Self> {
        let t = match family.to_ascii_uppercase().as_str() {
            "A" => CartanType::A(rank),
            "B" => CartanType::B(rank),
            "C" => CartanType::C(rank),
            "D" => CartanType::D(rank),
            "G" if rank == 2 => CartanType::G2,
            "F" if rank == 4 => CartanType::F4,
            "G2" if rank == 2 => CartanType::G2,
            "F4" if rank == 4 => CartanType::F4,
            _ => return Err(Error::UnsupportedType(format!("{family}{rank}"))),
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            CartanType::A(n) => (1..=6).contains(&n),
            CartanType::B(n) | CartanType::C(n) => (2..=4).contains(&n),
            CartanType::D(n) => (3..=4).contains(&n),
            CartanType::G2 | CartanType::F4 | CartanType::A1xA1 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    /// a[i][j] = <α_i, α_j^∨>, so row i is α_i in fundamental-weight coordinates.
    fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::D(n) => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            CartanType::G2 => link(0, 1),
            CartanType::F4 => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            CartanType::A1xA1 => {}
        }
        match *self {
            CartanType::B(n) => a[n - 2][n - 1] = -2,
            CartanType::C(n) => a[n - 1][n - 2] = -2,
            CartanType::G2 => a[1][0] = -3,
            CartanType::F4 => a[1][2] = -2,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::G2 => write!(f, "G2"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::A1xA1 => write!(f, "A1xA1"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("A1xA1") || s.eq_ignore_ascii_case("A1*A1") {
            return Ok(CartanType::A1xA1);
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::ParseType(s.into()))?;
        let (fam, rank) = s.split_at(split);
        let rank: usize = rank.parse().map_err(|_| Error::ParseType(s.into()))?;
        if fam.len() != 1 {
            return Err(Error::ParseType(s.into()));
        }
        CartanType::from_label(fam, rank)
    }
}

/// A root with its coordinates in the three bases that the algorithms need.
#[derive(Clone, Debug)]
pub struct Root {
    /// Fundamental-weight coordinates.
    pub weight: Weight,
    /// Coordinates on the simple roots.
    pub simple: Weight,
    /// Coordinates of α^∨ on the simple coroots.
    pub coroot: Weight,
    /// Reflection class (W_0-orbit) index; class 0 contains α_0.
    pub class: usize,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.simple.sum()
    }
}

/// Immutable Cartan datum with everything derived from it.
#[derive(Clone)]
pub struct RootSystem {
    pub(crate) ctype: CartanType,
    pub(crate) n: usize,
    pub(crate) cartan: Vec<Vec<i32>>,
    /// Positive roots sorted by height, simple roots first in index order.
    pub(crate) roots: Vec<Root>,
    /// Lookup for all roots (both signs): weight -> (index, is_positive).
    pub(crate) root_index: HashMap<Weight, (usize, bool)>,
    pub(crate) alpha0: Option<usize>,
    pub(crate) num_classes: usize,
    /// (A^T)^{-1}: fundamental-weight coordinates to simple-root coordinates.
    pub(crate) to_simple: Vec<Vec<Rational64>>,
    pub(crate) weyl: super::weyl::WeylData,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.ctype)
    }
}

fn invert(a: &[Vec<i32>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x as i64)).collect();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular Cartan matrix");
        m.swap(col, piv);
        let p = m[col][col];
        for x in &mut m[col] {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Result<Self> {
        ctype.validate()?;
        let n = ctype.rank();
        let cartan = ctype.cartan_matrix();
        let transpose: Vec<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| cartan[j][i]).collect()).collect();
        let to_simple = invert(&transpose);

        // Generate all roots from the simple roots under simple reflections.
        let mut all: HashMap<Weight, (Weight, Weight)> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let w = Weight::new(&cartan[i]);
            let e = Weight::unit(n, i);
            all.insert(w, (e, e));
            queue.push_back(w);
        }
        while let Some(w) = queue.pop_front() {
            let (simple, coroot) = all[&w];
            for j in 0..n {
                let k = w.get(j);
                if k == 0 {
                    continue;
                }
                let mut w2 = w;
                let mut s2 = simple;
                for i in 0..n {
                    w2.set(i, w.get(i) - k * cartan[j][i]);
                }
                s2.set(j, simple.get(j) - k);
                // <α_j, α^∨> = Σ_i (α^∨)_i a_{j i}
                let m: i32 = (0..n).map(|i| coroot.get(i) * cartan[j][i]).sum();
                let mut c2 = coroot;
                c2.set(j, coroot.get(j) - m);
                if let std::collections::hash_map::Entry::Vacant(e) = all.entry(w2) {
                    e.insert((s2, c2));
                    queue.push_back(w2);
                }
            }
        }
        let mut pos: Vec<(Weight, Weight, Weight)> = all
            .iter()
            .filter(|(_, (s, _))| s.coords().iter().all(|&x| x >= 0))
            .map(|(w, (s, c))| (*w, *s, *c))
            .collect();
        pos.sort_by_key(|(_, s, _)| {
            let mut key: Vec<i32> = vec![s.sum()];
            key.extend(s.coords().iter().map(|x| -x));
            key
        });

        // Reflection classes: W_0-orbits, seeded from the simple roots.
        let mut class_of: HashMap<Weight, usize> = HashMap::new();
        let mut num_classes = 0;
        for i in 0..n {
            let seed = Weight::new(&cartan[i]);
            if class_of.contains_key(&seed) {
                continue;
            }
            let c = num_classes;
            num_classes += 1;
            let mut q = VecDeque::from([seed]);
            class_of.insert(seed, c);
            while let Some(w) = q.pop_front() {
                for j in 0..n {
                    let k = w.get(j);
                    let mut w2 = w;
                    for i in 0..n {
                        w2.set(i, w.get(i) - k * cartan[j][i]);
                    }
                    if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(w2) {
                        e.insert(c);
                        q.push_back(w2);
                    }
                }
            }
        }

        // α_0: the positive root whose coroot is highest (unique iff irreducible).
        let max_h = pos.iter().map(|(_, _, c)| c.sum()).max().unwrap();
        let top: Vec<usize> = (0..pos.len()).filter(|&i| pos[i].2.sum() == max_h).collect();
        let alpha0 = if top.len() == 1 { Some(top[0]) } else { None };
        let mut perm: Vec<usize> = (0..num_classes).collect();
        if let Some(a0) = alpha0 {
            let c0 = class_of[&pos[a0].0];
            perm.swap(0, c0);
        }
        let roots: Vec<Root> = pos
            .iter()
            .map(|(w, s, c)| Root { weight: *w, simple: *s, coroot: *c, class: perm[class_of[w]] })
            .collect();
        let mut root_index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            root_index.insert(r.weight, (i, true));
            root_index.insert(-r.weight, (i, false));
        }
        let mut rs = RootSystem {
            ctype,
            n,
            cartan,
            roots,
            root_index,
            alpha0,
            num_classes,
            to_simple,
            weyl: Default::default(),
        };
        rs.weyl = super::weyl::WeylData::build(&rs);
        Ok(rs)
    }

    /// Parse "A2", "G2", "A1xA1", ... and build.
    pub fn parse(label: &str) -> Result<Self> {
        Self::new(label.parse()?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i][j]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn is_irreducible(&self) -> bool {
        self.alpha0.is_some()
    }

    /// Simple root α_i (1-based, as in s_1..s_n) in weight coordinates;
    /// index 0 gives α_0.
    pub fn alpha(&self, j: usize) -> Weight {
        self.root(j).weight
    }

    /// The positive root attached to generator j (α_0 for j = 0).
    pub fn root(&self, j: usize) -> &Root {
        if j == 0 {
            &self.roots[self.alpha0.expect("α_0 needs an irreducible root system")]
        } else {
            &self.roots[j - 1]
        }
    }

    pub fn alpha0(&self) -> Result<Weight> {
        self.alpha0.map(|i| self.roots[i].weight).ok_or(Error::Reducible("α_0"))
    }

    pub fn alpha0_index(&self) -> Option<usize> {
        self.alpha0
    }

    pub fn omega(&self, i: usize) -> Weight {
        Weight::unit(self.n, i - 1)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.n)
    }

    pub fn rho(&self) -> Weight {
        Weight::new(&vec![1; self.n])
    }

    /// <λ, β^∨> for the root β.
    pub fn pair(&self, lambda: &Weight, root: &Root) -> i32 {
        (0..self.n).map(|i| lambda.get(i) * root.coroot.get(i)).sum()
    }

    /// <λ, α_j^∨> for generator j (j = 0 pairs with α_0^∨).
    pub fn pair_j(&self, lambda: &Weight, j: usize) -> i32 {
        if j == 0 {
            self.pair(lambda, self.root(0))
        } else {
            lambda.get(j - 1)
        }
    }

    /// <λ, 2ρ^∨> = Σ_{α>0} <λ, α^∨>.
    pub fn pair_2rho_check(&self, lambda: &Weight) -> i32 {
        self.roots.iter().map(|r| self.pair(lambda, r)).sum()
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().all(|&x| x >= 0)
    }

    /// Classify a weight as a root: Some((index, positive)).
    pub fn root_lookup(&self, w: &Weight) -> Option<(usize, bool)> {
        self.root_index.get(w).copied()
    }

    /// s_j λ for j in 1..=n (finite simple reflection).
    pub fn reflect(&self, j: usize, lambda: &Weight) -> Weight {
        let k = lambda.get(j - 1);
        if k == 0 {
            return *lambda;
        }
        let mut out = *lambda;
        for i in 0..self.n {
            out.set(i, lambda.get(i) - k * self.cartan[j - 1][i]);
        }
        out
    }

    /// s_{β,0} λ.
    pub fn reflect_root(&self, root: &Root, lambda: &Weight) -> Weight {
        let k = self.pair(lambda, root);
        *lambda - root.weight.scale(k)
    }

    /// Affine simple reflection on weights: s_0 = s_{α_0,1}, s_j = s_{α_j,0}.
    pub fn reflect_affine(&self, j: usize, lambda: &Weight) -> Weight {
        if j == 0 {
            let r = self.root(0);
            let k = self.pair(lambda, r);
            *lambda - r.weight.scale(k - 1)
        } else {
            self.reflect(j, lambda)
        }
    }

    /// Simple-root coordinates, if λ lies in the root lattice.
    pub fn simple_coords(&self, lambda: &Weight) -> Option<Vec<i32>> {
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let v: Rational64 = (0..self.n)
                .map(|j| self.to_simple[i][j] * Rational64::from_integer(lambda.get(j) as i64))
                .sum();
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer() as i32);
        }
        Some(out)
    }

    /// λ − μ ∈ Q^+.
    pub fn in_positive_cone(&self, diff: &Weight) -> bool {
        self.simple_coords(diff).is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Coxeter exponent m_{jk} for generators j, k (0 allowed). `None` for
    /// the infinite case (rank one, affine pair).
    pub fn braid_order(&self, j: usize, k: usize) -> Option<usize> {
        if j == k {
            return Some(1);
        }
        let (a, b) = (self.root(j), self.root(k));
        let p = self.pair(&a.weight, b) * self.pair(&b.weight, a);
        match p {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    /// Names of the parameters, one per reflection class.
    pub fn param_names(&self) -> Vec<String> {
        match (self.num_classes, self.alpha0.is_some()) {
            (1, _) => vec!["q".into()],
            (2, true) => vec!["q_s".into(), "q_l".into()],
            (k, _) => (1..=k).map(|i| format!("q_{i}")).collect(),
        }
    }

    pub fn label(&self) -> String {
        self.ctype.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for (t, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("C3", 9),
            ("B4", 16),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("A1xA1", 2),
        ] {
            let rs = RootSystem::parse(t).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{t}");
        }
    }

    #[test]
    fn alpha0_is_short_in_two_length_types() {
        for t in ["B3", "C3", "G2", "F4"] {
            let rs = RootSystem::parse(t).unwrap();
            assert_eq!(rs.num_classes(), 2);
            assert_eq!(rs.root(0).class, 0);
            // the quasi-minuscule pairing: 0 <= <α_0, α^∨> <= 2, value 2 once
            let a0 = rs.alpha0().unwrap();
            let twos = rs.positive_roots().iter().filter(|r| rs.pair(&a0, r) == 2).count();
            assert_eq!(twos, 1, "{t}");
            assert!(rs.positive_roots().iter().all(|r| (0..=2).contains(&rs.pair(&a0, r))));
        }
    }

    #[test]
    fn braid_orders() {
        let g2 = RootSystem::parse("G2").unwrap();
        assert_eq!(g2.braid_order(1, 2), Some(6));
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(a2.braid_order(1, 2), Some(3));
        assert_eq!(a2.braid_order(0, 1), Some(3));
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(a1.braid_order(0, 1), None);
        let b2 = RootSystem::parse("B2").unwrap();
        assert_eq!(b2.braid_order(1, 2), Some(4));
        assert_eq!(b2.braid_order(0, 1), Some(4));
        assert_eq!(b2.braid_order(0, 2), Some(2));
    }

    #[test]
    fn rejects_unsupported() {
        assert!(RootSystem::parse("E6").is_err());
        assert!(RootSystem::parse("D2").is_err());
        assert!(RootSystem::parse("A7").is_err());
        assert!(RootSystem::parse("B1").is_err());
    }
}
