//! GL_N on ℤ^N: the affine permutation group S_N ⋉ ℤ^N, its Hecke operators on
//! C(ℤ^N), the central operators m_r(Y), Hall-Littlewood polynomials and the
//! Morris Pieri rule. Compositions are stored as [`Weight`]s of length N.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::heckeops::{
    first_row_mismatch, form_add, form_to_string, int_i as a_int_i, int_u as a_int_u, that as a_that, translate,
    weyl_op, y_diff, HeckeContext, LinearForm, Operator,
};
use crate::latfun::GroupAlgebraElem;
use crate::pieri::p_basis;
use crate::qring::RingElem;
use crate::random::Sampler;
use crate::report::{Check, Report};
use crate::rootsys::{RootSystem, Weight, MAX_RANK};

fn q() -> RingElem {
    RingElem::var_pow(0, 1)
}

fn q_pow(e: i32) -> RingElem {
    RingElem::var_pow(0, e)
}

fn gap() -> RingElem {
    &q() - &q_pow(-1)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        return Err(Error::IndexOutOfRange { index: n, bound: MAX_RANK + 1 });
    }
    Ok(())
}

fn check_j(n: usize, j: usize) -> Result<()> {
    check_n(n)?;
    if j == 0 || j >= n {
        return Err(Error::IndexOutOfRange { index: j, bound: n });
    }
    Ok(())
}

fn check_len(n: usize, lambda: &Weight) -> Result<()> {
    check_n(n)?;
    lambda.check_rank(n)
}

/// s_j λ, swapping entries j and j+1 (1-based).
pub fn swap(lambda: &Weight, j: usize) -> Weight {
    let mut out = *lambda;
    out.set(j - 1, lambda.get(j));
    out.set(j, lambda.get(j - 1));
    out
}

/// u λ = (λ_N + 1, λ_1, …, λ_{N−1}).
pub fn u_apply(lambda: &Weight) -> Weight {
    let n = lambda.rank();
    let mut out = *lambda;
    out.set(0, lambda.get(n - 1) + 1);
    for i in 1..n {
        out.set(i, lambda.get(i - 1));
    }
    out
}

/// u^{-1} λ = (λ_2, …, λ_N, λ_1 − 1).
pub fn u_inv_apply(lambda: &Weight) -> Weight {
    let n = lambda.rank();
    let mut out = *lambda;
    for i in 0..n - 1 {
        out.set(i, lambda.get(i + 1));
    }
    out.set(n - 1, lambda.get(0) - 1);
    out
}

pub fn reversed(lambda: &Weight) -> Weight {
    let mut c = lambda.coords().to_vec();
    c.reverse();
    Weight::new(&c)
}

/// 2⟨ρ, λ⟩ with ρ = ½(N−1, N−3, …, 1−N).
pub fn two_rho_pair(lambda: &Weight) -> i32 {
    let n = lambda.rank() as i32;
    lambda.coords().iter().enumerate().map(|(i, &x)| (n - 1 - 2 * i as i32) * x).sum()
}

pub fn is_decreasing(lambda: &Weight) -> bool {
    lambda.coords().windows(2).all(|w| w[0] >= w[1])
}

pub fn check_decreasing(lambda: &Weight) -> Result<()> {
    if !is_decreasing(lambda) {
        return Err(Error::NotDecreasing(lambda.coords().to_vec()));
    }
    Ok(())
}

/// λ_+.
pub fn sorted(lambda: &Weight) -> Weight {
    let mut c = lambda.coords().to_vec();
    c.sort_unstable_by(|a, b| b.cmp(a));
    Weight::new(&c)
}

/// w_λ μ for the shortest w_λ with w_λ λ = λ_+ (a stable descending sort of λ).
pub fn sort_like(lambda: &Weight, mu: &Weight) -> Weight {
    let mut idx: Vec<usize> = (0..lambda.rank()).collect();
    idx.sort_by(|&a, &b| lambda.get(b).cmp(&lambda.get(a)));
    let c: Vec<i32> = idx.iter().map(|&i| mu.get(i)).collect();
    Weight::new(&c)
}

/// ℓ(w_μ) = #{i < j : μ_i < μ_j}.
pub fn sorting_length(mu: &Weight) -> i32 {
    let c = mu.coords();
    let mut l = 0;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c[i] < c[j] {
                l += 1;
            }
        }
    }
    l
}

/// e_J for a set of 0-based indices.
pub fn e_set(n: usize, set: &[usize]) -> Weight {
    let mut w = Weight::zero(n);
    for &k in set {
        w.set(k, 1);
    }
    w
}

/// All r-element subsets of {0, …, n−1}.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// The box of compositions with |λ_i| ≤ radius.
pub fn box_points(n: usize, radius: i32) -> Vec<Weight> {
    let mut out = vec![Weight::zero(n)];
    for i in 0..n {
        let mut next = Vec::with_capacity(out.len() * (2 * radius as usize + 1));
        for w in &out {
            for v in -radius..=radius {
                let mut x = *w;
                x.set(i, v);
                next.push(x);
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn unit_form(at: Weight, c: &RingElem) -> LinearForm {
    let mut f = LinearForm::new();
    form_add(&mut f, at, c);
    f
}

/// T̂_j by its three cases on λ_j versus λ_{j+1}.
pub fn that(n: usize, j: usize) -> Result<Operator> {
    check_j(n, j)?;
    Ok(Operator::local(
        move |at| {
            let (a, b) = (at.get(j - 1), at.get(j));
            let s = swap(at, j);
            match a.cmp(&b) {
                std::cmp::Ordering::Greater => {
                    let mut f = unit_form(*at, &gap());
                    form_add(&mut f, s, &q_pow(-1));
                    f
                }
                std::cmp::Ordering::Equal => unit_form(*at, &q()),
                std::cmp::Ordering::Less => unit_form(s, &q()),
            }
        },
        move |s| s.iter().flat_map(|w| [*w, swap(w, j)]).collect(),
    ))
}

pub fn that_inv(n: usize, j: usize) -> Result<Operator> {
    Ok(that(n, j)?.minus(&Operator::scalar(gap())))
}

/// (uf)(λ) = f(u^{-1}λ).
pub fn u_op(n: usize) -> Result<Operator> {
    check_n(n)?;
    Ok(Operator::local(
        |at| unit_form(u_inv_apply(at), &RingElem::one()),
        |s| s.iter().map(u_apply).collect(),
    ))
}

pub fn u_inv_op(n: usize) -> Result<Operator> {
    check_n(n)?;
    Ok(Operator::local(
        |at| unit_form(u_apply(at), &RingElem::one()),
        |s| s.iter().map(u_inv_apply).collect(),
    ))
}

/// I_j = q s_j plus the (q − q^{-1})-weighted string sum.
pub fn int_i(n: usize, j: usize) -> Result<Operator> {
    check_j(n, j)?;
    Ok(Operator::from_rows(move |at| {
        let (a, b) = (at.get(j - 1), at.get(j));
        let mut f = unit_form(swap(at, j), &q());
        let shifted = |l: i32| {
            let mut w = *at;
            w.set(j - 1, a + l);
            w.set(j, b - l);
            w
        };
        if a > b {
            let c = -&gap();
            for l in 1..=a - b {
                form_add(&mut f, shifted(-l), &c);
            }
        } else if a < b {
            let c = gap();
            for l in 0..b - a {
                form_add(&mut f, shifted(l), &c);
            }
        }
        f
    }))
}

pub fn int_i_inv(n: usize, j: usize) -> Result<Operator> {
    Ok(int_i(n, j)?.minus(&Operator::scalar(gap())))
}

/// T_u in the integral representation. From Y_1 = T_u T_{N−1} ⋯ T_1 and
/// Y^λ ↦ t_λ: I_u = t_{e_1} I_1^{-1} ⋯ I_{N−1}^{-1}.
pub fn int_u(n: usize) -> Result<Operator> {
    check_n(n)?;
    let mut ops = vec![translate(Weight::unit(n, 0))];
    for j in 1..n {
        ops.push(int_i_inv(n, j)?);
    }
    Ok(Operator::product(ops))
}

pub fn int_u_inv(n: usize) -> Result<Operator> {
    check_n(n)?;
    let mut ops = Vec::new();
    for j in (1..n).rev() {
        ops.push(int_i(n, j)?);
    }
    ops.push(translate(-Weight::unit(n, 0)));
    Ok(Operator::product(ops))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlRep {
    Difference,
    Integral,
}

impl GlRep {
    pub fn name(self) -> &'static str {
        match self {
            GlRep::Difference => "difference",
            GlRep::Integral => "integral",
        }
    }

    pub fn t(self, n: usize, j: usize) -> Result<Operator> {
        match self {
            GlRep::Difference => that(n, j),
            GlRep::Integral => int_i(n, j),
        }
    }

    pub fn t_inv(self, n: usize, j: usize) -> Result<Operator> {
        match self {
            GlRep::Difference => that_inv(n, j),
            GlRep::Integral => int_i_inv(n, j),
        }
    }

    pub fn t_u(self, n: usize) -> Result<Operator> {
        match self {
            GlRep::Difference => u_op(n),
            GlRep::Integral => int_u(n),
        }
    }

    pub fn t_u_inv(self, n: usize) -> Result<Operator> {
        match self {
            GlRep::Difference => u_inv_op(n),
            GlRep::Integral => int_u_inv(n),
        }
    }

    /// Y_j = T_{j−1}^{-1} ⋯ T_1^{-1} T_u T_{N−1} ⋯ T_j (j is 1-based).
    pub fn y(self, n: usize, j: usize) -> Result<Operator> {
        check_n(n)?;
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, bound: n + 1 });
        }
        let mut ops = Vec::new();
        for k in (1..j).rev() {
            ops.push(self.t_inv(n, k)?);
        }
        ops.push(self.t_u(n)?);
        for k in (j..n).rev() {
            ops.push(self.t(n, k)?);
        }
        Ok(Operator::product(ops).memoized())
    }

    /// m_r(Y) = Σ_{|J|=r} ∏_{j∈J} Y_j.
    pub fn m_r(self, n: usize, r: usize) -> Result<Operator> {
        check_r(n, r)?;
        let ys: Vec<Operator> = (1..=n).map(|j| self.y(n, j)).collect::<Result<_>>()?;
        let terms = subsets(n, r)
            .into_iter()
            .map(|set| (RingElem::one(), Operator::product(set.iter().map(|&k| ys[k].clone()).collect())))
            .collect();
        Ok(Operator::linear_combination(terms))
    }
}

fn check_r(n: usize, r: usize) -> Result<()> {
    check_n(n)?;
    if r == 0 || r > n {
        return Err(Error::IndexOutOfRange { index: r, bound: n + 1 });
    }
    Ok(())
}

/// (εf)(λ) = q^{2⟨ρ,λ_+⟩} f(λ_N, …, λ_1).
pub fn epsilon(n: usize) -> Result<Operator> {
    check_n(n)?;
    Ok(Operator::local(
        |at| unit_form(reversed(at), &q_pow(two_rho_pair(&sorted(at)))),
        |s| s.iter().map(reversed).collect(),
    ))
}

pub fn epsilon_inv(n: usize) -> Result<Operator> {
    check_n(n)?;
    Ok(Operator::local(
        |at| unit_form(reversed(at), &q_pow(-two_rho_pair(&sorted(at)))),
        |s| s.iter().map(reversed).collect(),
    ))
}

/// (M_r f)(λ) = Σ_{|J|=r} q^{2ℓ(w_{w_λ(λ−e_J)})} f(λ − e_J).
pub fn m_op(n: usize, r: usize) -> Result<Operator> {
    check_r(n, r)?;
    let sets: Vec<Weight> = subsets(n, r).iter().map(|s| e_set(n, s)).collect();
    let sets2 = sets.clone();
    Ok(Operator::local(
        move |at| {
            let mut f = LinearForm::new();
            for e in &sets {
                let mu = *at - *e;
                form_add(&mut f, mu, &q_pow(2 * sorting_length(&sort_like(at, &mu))));
            }
            f
        },
        move |s| s.iter().flat_map(|w| sets2.iter().map(move |e| *w + *e)).collect(),
    ))
}

/// ε M_r ε^{-1}.
pub fn m_hat(n: usize, r: usize) -> Result<Operator> {
    Ok(Operator::product(vec![epsilon(n)?, m_op(n, r)?, epsilon_inv(n)?]).memoized())
}

/// V_{λ,J}(q²) for a 0-based index set J.
pub fn v_coeff(lambda: &Weight, set: &[usize]) -> Result<RingElem> {
    let n = lambda.rank();
    let e = e_set(n, set);
    let (mut num, mut den) = (RingElem::one(), RingElem::one());
    for k in 0..n {
        for l in k + 1..n {
            if e.get(k) == 1 && e.get(l) == 0 && lambda.get(k) == lambda.get(l) {
                let d = (l - k) as i32;
                num = &num * &(&RingElem::one() - &q_pow(2 * (d + 1)));
                den = &den * &(&RingElem::one() - &q_pow(2 * d));
            }
        }
    }
    let ratio = num.div_exact(&den).ok_or(Error::InexactDivision)?;
    Ok(&ratio * &q_pow(-two_rho_pair(&e)))
}

/// (m̂_r f)(λ) on symmetric f as the form Σ_{λ−e_J ∈ ℤ^N_≥} V_{λ,J^c} δ_{λ−e_J}.
pub fn symmetric_row(n: usize, r: usize, lambda: &Weight) -> Result<LinearForm> {
    check_r(n, r)?;
    check_len(n, lambda)?;
    check_decreasing(lambda)?;
    let mut f = LinearForm::new();
    for set in subsets(n, r) {
        let mu = *lambda - e_set(n, &set);
        if is_decreasing(&mu) {
            let comp: Vec<usize> = (0..n).filter(|k| !set.contains(k)).collect();
            form_add(&mut f, mu, &v_coeff(lambda, &comp)?);
        }
    }
    Ok(f)
}

/// Morris: m_r p_λ = Σ_{λ+e_J ∈ ℤ^N_≥} V_{λ,J} p_{λ+e_J}.
pub fn morris_pieri(n: usize, r: usize, lambda: &Weight) -> Result<BTreeMap<Weight, RingElem>> {
    check_r(n, r)?;
    check_len(n, lambda)?;
    check_decreasing(lambda)?;
    let mut out = BTreeMap::new();
    for set in subsets(n, r) {
        let nu = *lambda + e_set(n, &set);
        if is_decreasing(&nu) {
            out.insert(nu, v_coeff(lambda, &set)?);
        }
    }
    Ok(out)
}

fn shift(p: &GroupAlgebraElem, by: &Weight) -> GroupAlgebraElem {
    let mut out = GroupAlgebraElem::zero(p.rank());
    for (w, c) in p.iter() {
        out.add_at(*w + *by, c);
    }
    out
}

/// Exact division by x_k − x_l, eliminating the highest power of x_k first.
fn divide_difference(p: &GroupAlgebraElem, k: usize, l: usize) -> Result<GroupAlgebraElem> {
    let mut rem: BTreeMap<Weight, RingElem> = p.iter().map(|(w, c)| (*w, c.clone())).collect();
    let mut quot = GroupAlgebraElem::zero(p.rank());
    let (ek, el) = (Weight::unit(p.rank(), k), Weight::unit(p.rank(), l));
    while let Some(top) = rem.keys().max_by_key(|w| (w.get(k), **w)).copied() {
        let c = rem.remove(&top).unwrap();
        if top.get(k) <= 0 {
            return Err(Error::InexactDivision);
        }
        let t = top - ek;
        quot.add_at(t, &c);
        let lower = t + el;
        let v = rem.remove(&lower).unwrap_or_else(RingElem::zero);
        let v = &v + &c;
        if !v.is_zero() {
            rem.insert(lower, v);
        }
    }
    Ok(quot)
}

/// Permutations of 0..n as images w(k).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// x_k ↦ x_{w(k)}, so x^a ↦ x^{wa} with (wa)_{w(k)} = a_k.
fn permute_monomial(a: &Weight, w: &[usize]) -> Weight {
    let mut out = *a;
    for (k, &wk) in w.iter().enumerate() {
        out.set(wk, a.get(k));
    }
    out
}

/// p_λ = q^{2⟨ρ,λ⟩} Σ_w w(x^λ ∏_{k<l} (x_k − q²x_l)/(x_k − x_l)), computed as
/// the alternant of x^λ ∏(x_k − q²x_l) divided exactly by the Vandermonde.
pub fn hall_littlewood(n: usize, lambda: &Weight) -> Result<GroupAlgebraElem> {
    check_len(n, lambda)?;
    check_decreasing(lambda)?;
    let base_shift = Weight::new(&vec![lambda.get(n - 1); n]);
    let mu = *lambda - base_shift;
    let mut base = GroupAlgebraElem::e(mu);
    let q2 = q_pow(2);
    for k in 0..n {
        for l in k + 1..n {
            let mut lin = GroupAlgebraElem::e(Weight::unit(n, k));
            lin.add_at(Weight::unit(n, l), &-&q2);
            base = base.mul(&lin);
        }
    }
    let mut alt = GroupAlgebraElem::zero(n);
    for w in permutations(n) {
        let sign = RingElem::from_int(perm_sign(&w));
        for (a, c) in base.iter() {
            alt.add_at(permute_monomial(a, &w), &(c * &sign));
        }
    }
    for k in 0..n {
        for l in k + 1..n {
            alt = divide_difference(&alt, k, l)?;
        }
    }
    Ok(shift(&alt, &base_shift).scale(&q_pow(two_rho_pair(lambda))))
}

/// The elementary symmetric polynomial m_r(x) = e_r(x).
pub fn elementary(n: usize, r: usize) -> GroupAlgebraElem {
    let mut out = GroupAlgebraElem::zero(n);
    for set in subsets(n, r) {
        out.add_at(e_set(n, &set), &RingElem::one());
    }
    out
}

/// Hall-Littlewood polynomials with a cache keyed on λ − λ_N(1, …, 1).
pub struct HallLittlewood {
    n: usize,
    cache: Mutex<HashMap<Weight, GroupAlgebraElem>>,
}

impl HallLittlewood {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, cache: Mutex::new(HashMap::new()) })
    }

    pub fn get(&self, lambda: &Weight) -> Result<GroupAlgebraElem> {
        check_len(self.n, lambda)?;
        check_decreasing(lambda)?;
        let s = Weight::new(&vec![lambda.get(self.n - 1); self.n]);
        let key = *lambda - s;
        if let Some(p) = self.cache.lock().unwrap().get(&key) {
            return Ok(shift(p, &s));
        }
        let p = hall_littlewood(self.n, &key)?;
        self.cache.lock().unwrap().insert(key, p.clone());
        Ok(shift(&p, &s))
    }

    /// Coordinates of a symmetric polynomial in the basis p_λ, peeling the
    /// lexicographically largest decreasing exponent (a dominance-maximal one).
    pub fn expand(&self, f: &GroupAlgebraElem) -> Result<BTreeMap<Weight, RingElem>> {
        let mut rem = f.clone();
        let mut out = BTreeMap::new();
        while let Some(top) = rem.support().filter(|w| is_decreasing(w)).max().copied() {
            let p = self.get(&top)?;
            let c = rem.coeff(&top).div_exact(&p.coeff(&top)).ok_or(Error::InexactDivision)?;
            rem = rem.sub(&p.scale(&c));
            out.insert(top, c);
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(out)
    }

    /// e_r(x) p_λ re-expanded in the p-basis.
    pub fn pieri_brute_force(&self, r: usize, lambda: &Weight) -> Result<BTreeMap<Weight, RingElem>> {
        check_r(self.n, r)?;
        self.expand(&elementary(self.n, r).mul(&self.get(lambda)?))
    }
}

/// Semistandard tableaux of shape λ (a partition) with entries 1..=n, summed
/// by content: the Schur polynomial.
pub fn schur_by_tableaux(n: usize, lambda: &Weight) -> Result<GroupAlgebraElem> {
    check_len(n, lambda)?;
    check_decreasing(lambda)?;
    let s = Weight::new(&vec![lambda.get(n - 1); n]);
    let shape: Vec<usize> = (*lambda - s).coords().iter().map(|&x| x as usize).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = GroupAlgebraElem::zero(n);
    fn rec(i: usize, n: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, out: &mut GroupAlgebraElem) {
        if i == cells.len() {
            let mut w = Weight::zero(n);
            for row in grid.iter() {
                for &v in row {
                    w.set(v - 1, w.get(v - 1) + 1);
                }
            }
            out.add_at(w, &RingElem::one());
            return;
        }
        let (r, c) = cells[i];
        let lo_left = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_up = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_left.max(lo_up)..=n {
            grid[r][c] = v;
            rec(i + 1, n, cells, grid, out);
        }
        grid[r][c] = 0;
    }
    rec(0, n, &cells, &mut grid, &mut out);
    Ok(shift(&out, &s))
}

/// ℤ^N → P(A_{N−1}): λ ↦ Σ (λ_i − λ_{i+1}) ω_i (the mean drops out).
pub fn project(lambda: &Weight) -> Weight {
    let c: Vec<i32> = lambda.coords().windows(2).map(|w| w[0] - w[1]).collect();
    Weight::new(&c)
}

pub fn push_forward(form: &LinearForm) -> LinearForm {
    let mut out = LinearForm::new();
    for (w, c) in form {
        form_add(&mut out, project(w), c);
    }
    out
}

/// x^μ ↦ e^{π(μ)}.
pub fn push_forward_poly(p: &GroupAlgebraElem) -> GroupAlgebraElem {
    let mut out = GroupAlgebraElem::zero(p.rank() - 1);
    for (w, c) in p.iter() {
        out.add_at(project(w), c);
    }
    out
}

fn label(n: usize) -> String {
    format!("GL{n}")
}

fn check(n: usize, id: String, relation: &str, cex: Option<Value>) -> Check {
    Check::new(id, relation, label(n), n).with_result(cex)
}

fn err_json(e: Error) -> Option<Value> {
    Some(json!({ "error": e.to_string() }))
}

fn compare(a: &Operator, b: &Operator, points: &[Weight]) -> Option<Value> {
    first_row_mismatch(a, b, points).map(|(at, ra, rb)| {
        json!({ "at": at.coords(), "lhs": form_to_string(&ra, &["q"]), "rhs": form_to_string(&rb, &["q"]) })
    })
}

fn compare_maps(a: &BTreeMap<Weight, RingElem>, b: &BTreeMap<Weight, RingElem>) -> Option<Value> {
    (a != b).then(|| {
        let show = |m: &BTreeMap<Weight, RingElem>| -> Vec<String> {
            m.iter().map(|(w, c)| format!("{w}: {}", c.format_with(&["q"]))).collect()
        };
        json!({ "lhs": show(a), "rhs": show(b) })
    })
}

fn run(n: usize, id: String, relation: &str, f: impl FnOnce() -> Result<Option<Value>>) -> Check {
    check(n, id, relation, f().unwrap_or_else(err_json))
}

/// Quadratic, braid, commutation, T_uT_j = T_{j+1}T_u and centrality of T_u^N,
/// as row identities on the box |λ_i| ≤ radius.
pub fn relation_checks(n: usize, rep: GlRep, radius: i32) -> Report {
    let pts = box_points(n, radius);
    let mut rep_out = Report::new();
    let tag = rep.name();
    for j in 1..n {
        rep_out.push(run(n, format!("gl/{}/{tag}/quadratic-T{j}", label(n)), "(T_j − q)(T_j + q^-1) = 0", || {
            let t = rep.t(n, j)?;
            let lhs = t.then(&t);
            let rhs = t.scaled(gap()).plus(&Operator::identity());
            Ok(compare(&lhs, &rhs, &pts))
        }));
        rep_out.push(run(n, format!("gl/{}/{tag}/inverse-T{j}", label(n)), "T_j T_j^-1 = 1", || {
            Ok(compare(&rep.t(n, j)?.then(&rep.t_inv(n, j)?), &Operator::identity(), &pts))
        }));
        if j + 1 < n {
            rep_out.push(run(n, format!("gl/{}/{tag}/braid-T{j}T{}", label(n), j + 1), "T_jT_{j+1}T_j = T_{j+1}T_jT_{j+1}", || {
                let (a, b) = (rep.t(n, j)?, rep.t(n, j + 1)?);
                let lhs = Operator::product(vec![a.clone(), b.clone(), a.clone()]);
                let rhs = Operator::product(vec![b.clone(), a, b]);
                Ok(compare(&lhs, &rhs, &pts))
            }));
            rep_out.push(run(n, format!("gl/{}/{tag}/shift-T{j}", label(n)), "T_u T_j = T_{j+1} T_u", || {
                let u = rep.t_u(n)?;
                Ok(compare(&u.then(&rep.t(n, j)?), &rep.t(n, j + 1)?.then(&u), &pts))
            }));
        }
        for k in j + 2..n {
            rep_out.push(run(n, format!("gl/{}/{tag}/commute-T{j}T{k}", label(n)), "T_jT_k = T_kT_j", || {
                let (a, b) = (rep.t(n, j)?, rep.t(n, k)?);
                Ok(compare(&a.then(&b), &b.then(&a), &pts))
            }));
        }
        rep_out.push(run(n, format!("gl/{}/{tag}/central-uN-T{j}", label(n)), "T_u^N T_j = T_j T_u^N", || {
            let un = Operator::product(vec![rep.t_u(n)?; n]).memoized();
            let t = rep.t(n, j)?;
            Ok(compare(&un.then(&t), &t.then(&un), &pts))
        }));
    }
    rep_out.push(run(n, format!("gl/{}/{tag}/inverse-U", label(n)), "T_u T_u^-1 = 1", || {
        Ok(compare(&rep.t_u(n)?.then(&rep.t_u_inv(n)?), &Operator::identity(), &pts))
    }));
    rep_out
}

/// The Y_j pairwise commute; in the integral representation Y_j = t_{e_j}.
pub fn y_checks(n: usize, rep: GlRep, radius: i32) -> Report {
    let pts = box_points(n, radius);
    let mut out = Report::new();
    let tag = rep.name();
    for j in 1..=n {
        for k in j + 1..=n {
            out.push(run(n, format!("gl/{}/{tag}/Y{j}Y{k}", label(n)), "Y_jY_k = Y_kY_j", || {
                let (a, b) = (rep.y(n, j)?, rep.y(n, k)?);
                Ok(compare(&a.then(&b), &b.then(&a), &pts))
            }));
        }
        if rep == GlRep::Integral {
            out.push(run(n, format!("gl/{}/{tag}/Y{j}-translation", label(n)), "I(Y_j) = t_{e_j}", || {
                Ok(compare(&rep.y(n, j)?, &translate(Weight::unit(n, j - 1)), &pts))
            }));
        }
    }
    out
}

/// m̂_r: the Y-product route against ε M_r ε^{-1}, centrality of M_r and the
/// folded action on symmetric functions.
pub fn central_checks(n: usize, radius: i32, seed: u64) -> Report {
    let pts = box_points(n, radius);
    let mut out = Report::new();
    for r in 1..=n {
        out.push(run(n, format!("gl/{}/m{r}-epsilon-route", label(n)), "Σ_J ∏ Y_j = ε M_r ε^-1", || {
            Ok(compare(&GlRep::Difference.m_r(n, r)?, &m_hat(n, r)?, &pts))
        }));
        for r2 in r + 1..=n {
            out.push(run(n, format!("gl/{}/M{r}M{r2}-commute", label(n)), "M_r M_r' = M_r' M_r", || {
                let (a, b) = (m_op(n, r)?, m_op(n, r2)?);
                Ok(compare(&a.then(&b), &b.then(&a), &pts))
            }));
        }
        out.push(run(n, format!("gl/{}/m{r}-symmetric", label(n)), "symmetric action of m_r(Y) by V_{λ,J^c}", || {
            let op = m_hat(n, r)?;
            let mut sampler = Sampler::new(seed ^ r as u64);
            let mut values: HashMap<Weight, RingElem> = HashMap::new();
            let mut f = |w: &Weight| {
                values.entry(sorted(w)).or_insert_with(|| RingElem::constant(sampler.small_rational())).clone()
            };
            for lam in pts.iter().filter(|w| is_decreasing(w)) {
                let lhs = crate::heckeops::eval_form_by(&op.row(lam), &mut f);
                let rhs = crate::heckeops::eval_form_by(&symmetric_row(n, r, lam)?, &mut f);
                if lhs != rhs {
                    return Ok(Some(json!({ "at": lam.coords(), "lhs": lhs.format_with(&["q"]), "rhs": rhs.format_with(&["q"]) })));
                }
            }
            Ok(None)
        }));
    }
    out
}

fn dominance_le(mu: &Weight, lambda: &Weight) -> bool {
    let (a, b) = (sorted(mu), sorted(lambda));
    let mut sa = 0;
    let mut sb = 0;
    for i in 0..a.rank() {
        sa += a.get(i);
        sb += b.get(i);
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// [m]_{q²}! for each multiplicity of λ.
fn stabilizer_poincare(lambda: &Weight) -> RingElem {
    let mut out = RingElem::one();
    let c = lambda.coords();
    let mut i = 0;
    while i < c.len() {
        let mut m = 1;
        while i + m < c.len() && c[i + m] == c[i] {
            m += 1;
        }
        for k in 1..=m as i32 {
            out = &out * &(0..k).map(|e| q_pow(2 * e)).sum::<RingElem>();
        }
        i += m;
    }
    out
}

fn decreasing_box(n: usize, radius: i32) -> Vec<Weight> {
    box_points(n, radius).into_iter().filter(is_decreasing).collect()
}

/// p_λ is symmetric with x^λ-coefficient q^{2⟨ρ,λ⟩}·W_λ(q²) and every other
/// exponent dominated by λ; at q = 0 (after removing q^{2⟨ρ,λ⟩}) it is s_λ.
pub fn hl_checks(hl: &HallLittlewood, radius: i32) -> Report {
    let n = hl.n;
    let mut out = Report::new();
    let perms = permutations(n);
    for lam in decreasing_box(n, radius) {
        out.push(run(n, format!("gl/{}/hl-triangular-{lam}", label(n)), "p_λ symmetric, unitriangular", || {
            let p = hl.get(&lam)?;
            for (w, c) in p.iter() {
                if !dominance_le(w, &lam) {
                    return Ok(Some(json!({ "exponent": w.coords(), "reason": "not dominated by λ" })));
                }
                for perm in &perms {
                    if p.coeff(&permute_monomial(w, perm)) != *c {
                        return Ok(Some(json!({ "exponent": w.coords(), "reason": "not symmetric" })));
                    }
                }
            }
            let lead = &q_pow(two_rho_pair(&lam)) * &stabilizer_poincare(&lam);
            Ok((p.coeff(&lam) != lead).then(|| json!({ "lead": p.coeff(&lam).format_with(&["q"]), "expected": lead.format_with(&["q"]) })))
        }));
        out.push(run(n, format!("gl/{}/hl-schur-{lam}", label(n)), "q^{-2⟨ρ,λ⟩} p_λ at q = 0 is s_λ", || {
            let p = hl.get(&lam)?.scale(&q_pow(-two_rho_pair(&lam)));
            let mut at_zero = GroupAlgebraElem::zero(n);
            for (w, c) in p.iter() {
                let v = c.eval(&[num_rational::BigRational::from_integer(0.into())]).ok_or(Error::InexactDivision)?;
                at_zero.add_at(*w, &RingElem::constant(v));
            }
            let s = schur_by_tableaux(n, &lam)?;
            Ok((at_zero != s).then(|| json!({ "lhs": at_zero.to_string(), "rhs": s.to_string() })))
        }));
    }
    out
}

/// Morris Pieri against e_r(x) p_λ re-expanded, for decreasing |λ_i| ≤ radius.
pub fn morris_checks(hl: &HallLittlewood, radius: i32) -> Report {
    let n = hl.n;
    let mut out = Report::new();
    for lam in decreasing_box(n, radius) {
        for r in 1..=n {
            out.push(run(n, format!("gl/{}/morris-r{r}-{lam}", label(n)), "m_r p_λ = Σ V_{λ,J} p_{λ+e_J}", || {
                Ok(compare_maps(&morris_pieri(n, r, &lam)?, &hl.pieri_brute_force(r, &lam)?))
            }));
        }
    }
    out
}

/// Agreement with A_{N−1} under λ ↦ Σ (λ_i − λ_{i+1}) ω_i: T̂_j, I_j, u, I_u
/// and Y_j as pushed-forward rows, and p_λ against e_q(λ)P_{λ*}.
pub fn comparison_checks(n: usize, radius: i32) -> Report {
    let mut out = Report::new();
    if n < 2 {
        return out;
    }
    let rs = match RootSystem::parse(&format!("A{}", n - 1)) {
        Ok(rs) => rs,
        Err(e) => {
            out.push(check(n, format!("gl/{}/compare-setup", label(n)), "A_{N-1} available", err_json(e)));
            return out;
        }
    };
    let ctx = HeckeContext::formal(rs);
    let pts = box_points(n, radius);
    let pushed = |gl: &Operator, a: &Operator| -> Option<Value> {
        pts.iter().find_map(|p| {
            let (lhs, rhs) = (push_forward(&gl.row(p)), a.row(&project(p)));
            (lhs != rhs).then(|| {
                json!({ "at": p.coords(), "lhs": form_to_string(&lhs, &["q"]), "rhs": form_to_string(&rhs, &["q"]) })
            })
        })
    };
    for j in 1..n {
        out.push(run(n, format!("gl/{}/compare-T{j}", label(n)), "T̂_j matches A_{N-1}", || {
            Ok(pushed(&that(n, j)?, &a_that(&ctx, j)?))
        }));
        out.push(run(n, format!("gl/{}/compare-I{j}", label(n)), "I_j matches A_{N-1}", || {
            Ok(pushed(&int_i(n, j)?, &a_int_i(&ctx, j)?))
        }));
    }
    out.push(run(n, format!("gl/{}/compare-u", label(n)), "u matches u_1 of A_{N-1}", || {
        Ok(pushed(&u_op(n)?, &weyl_op(&ctx.rs.u_j(1))))
    }));
    out.push(run(n, format!("gl/{}/compare-Iu", label(n)), "I_u matches I_{u_1} of A_{N-1}", || {
        Ok(pushed(&int_u(n)?, &a_int_u(&ctx, 1)?))
    }));
    for j in 1..=n {
        out.push(run(n, format!("gl/{}/compare-Y{j}", label(n)), "Y_j matches Y^{π(e_j)} of A_{N-1}", || {
            Ok(pushed(&GlRep::Difference.y(n, j)?, &y_diff(&ctx, &project(&Weight::unit(n, j - 1)))?))
        }));
    }
    for lam in decreasing_box(n, radius) {
        out.push(run(n, format!("gl/{}/compare-hl-{lam}", label(n)), "p_λ matches e_q(λ)P_{λ*} of A_{N-1}", || {
            let lhs = push_forward_poly(&hall_littlewood(n, &lam)?);
            let rhs = p_basis(&ctx, &project(&lam))?;
            Ok((lhs != rhs).then(|| json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() })))
        }));
    }
    out
}

/// Everything above for one N.
pub fn gl_suite(n: usize, radius: i32, seed: u64) -> Result<Report> {
    let hl = HallLittlewood::new(n)?;
    let mut out = Report::new();
    for rep in [GlRep::Difference, GlRep::Integral] {
        out.extend(relation_checks(n, rep, radius));
        out.extend(y_checks(n, rep, radius));
    }
    out.extend(central_checks(n, radius, seed));
    out.extend(hl_checks(&hl, radius));
    out.extend(morris_checks(&hl, radius));
    out.extend(comparison_checks(n, radius));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i32]) -> Weight {
        Weight::new(c)
    }

    #[test]
    fn equal_entries() {
        let lam = w(&[2, 2, 0]);
        assert_eq!(that(3, 1).unwrap().row(&lam), unit_form(lam, &q()));
        assert_eq!(int_i(3, 1).unwrap().row(&lam), unit_form(lam, &q()));
        assert!(that(3, 3).is_err());
        assert!(int_i(3, 0).is_err());
    }

    #[test]
    fn m_r_examples() {
        let k = 3;
        let row = m_op(2, 1).unwrap().row(&w(&[k, k]));
        assert_eq!(row.get(&w(&[k - 1, k])), Some(&q_pow(2)));
        assert_eq!(row.get(&w(&[k, k - 1])), Some(&RingElem::one()));
        let full = m_op(3, 3).unwrap().row(&w(&[0, 4, -1]));
        assert_eq!(full, unit_form(w(&[-1, 3, -2]), &RingElem::one()));
    }

    #[test]
    fn v_examples() {
        let one_plus = &RingElem::one() + &q_pow(2);
        assert_eq!(v_coeff(&w(&[2, 2]), &[0]).unwrap(), &q_pow(-1) * &one_plus);
        assert_eq!(v_coeff(&w(&[3, 1]), &[0]).unwrap(), q_pow(-1));
        assert_eq!(v_coeff(&w(&[1, 1, 1]), &[0, 1, 2]).unwrap(), RingElem::one());
    }

    #[test]
    fn hl_small() {
        let one_plus = &RingElem::one() + &q_pow(2);
        let p0 = hall_littlewood(2, &w(&[0, 0])).unwrap();
        assert_eq!(p0, GroupAlgebraElem::monomial(w(&[0, 0]), one_plus.clone()));
        let p0 = hall_littlewood(3, &w(&[0, 0, 0])).unwrap();
        let three = &(&RingElem::one() + &q_pow(2)) + &q_pow(4);
        assert_eq!(p0, GroupAlgebraElem::monomial(w(&[0, 0, 0]), &one_plus * &three));
        let p10 = hall_littlewood(2, &w(&[1, 0])).unwrap();
        let mut expect = GroupAlgebraElem::monomial(w(&[1, 0]), q());
        expect.add_at(w(&[0, 1]), &q());
        assert_eq!(p10, expect);
        assert_eq!(hall_littlewood(2, &w(&[0, 1])), Err(Error::NotDecreasing(vec![0, 1])));
    }

    #[test]
    fn schur_oracle() {
        let s = schur_by_tableaux(3, &w(&[2, 1, 0])).unwrap();
        assert_eq!(s.coeff(&w(&[1, 1, 1])), RingElem::from_int(2));
        assert_eq!(s.len(), 7);
    }

    #[test]
    fn u_power_is_central_translation() {
        let mut x = w(&[3, -1, 0]);
        for _ in 0..3 {
            x = u_apply(&x);
        }
        assert_eq!(x, w(&[4, 0, 1]));
        assert_eq!(u_inv_apply(&u_apply(&w(&[1, 2, 5]))), w(&[1, 2, 5]));
    }

    #[test]
    fn suites_n2_n3() {
        for n in 1..=3 {
            let r = gl_suite(n, 2, 5).unwrap();
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }
}
