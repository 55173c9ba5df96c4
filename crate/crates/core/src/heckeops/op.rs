use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::latfun::LatticeFunction;
use crate::qring::RingElem;
use crate::rootsys::Weight;

/// A linear functional on lattice functions: f ↦ Σ c_μ f(μ).
pub type LinearForm = BTreeMap<Weight, RingElem>;

pub fn form_add(form: &mut LinearForm, w: Weight, c: &RingElem) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match form.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn form_add_scaled(form: &mut LinearForm, other: &LinearForm, c: &RingElem) {
    for (w, v) in other {
        form_add(form, *w, &(v * c));
    }
}

pub fn form_sub(a: &LinearForm, b: &LinearForm) -> LinearForm {
    let mut out = a.clone();
    for (w, v) in b {
        form_add(&mut out, *w, &-v);
    }
    out
}

pub fn eval_form(form: &LinearForm, f: &LatticeFunction) -> RingElem {
    let mut out = RingElem::zero();
    for (w, c) in form {
        if let Some(v) = f.get_ref(w) {
            out.add_mul(c, v);
        }
    }
    out
}

/// Σ c_μ g(μ) for a function given pointwise.
pub fn eval_form_by(form: &LinearForm, mut g: impl FnMut(&Weight) -> RingElem) -> RingElem {
    let mut out = RingElem::zero();
    for (w, c) in form {
        out.add_mul(c, &g(w));
    }
    out
}

pub fn form_to_string(form: &LinearForm, names: &[&str]) -> String {
    if form.is_empty() {
        return "0".into();
    }
    form.iter()
        .map(|(w, c)| format!("({})*f{}", c.format_with(names), w))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// A linear operator on functions P → ring, described by its rows: the value
/// of (Af)(λ) as a linear form in the values of f.
pub trait LatticeOp: Send + Sync {
    fn row(&self, at: &Weight) -> LinearForm;

    /// The points where Af can be nonzero when f is supported in `supp`, if
    /// that set is finite.
    fn image_support(&self, _supp: &BTreeSet<Weight>) -> Option<BTreeSet<Weight>> {
        None
    }
}

type RowFn = dyn Fn(&Weight) -> LinearForm + Send + Sync;
type SuppFn = dyn Fn(&BTreeSet<Weight>) -> BTreeSet<Weight> + Send + Sync;

struct FnOp {
    row: Box<RowFn>,
    supp: Option<Box<SuppFn>>,
}

impl LatticeOp for FnOp {
    fn row(&self, at: &Weight) -> LinearForm {
        (self.row)(at)
    }
    fn image_support(&self, supp: &BTreeSet<Weight>) -> Option<BTreeSet<Weight>> {
        self.supp.as_ref().map(|s| s(supp))
    }
}

/// Product ops[0] ∘ ops[1] ∘ ⋯ (the last factor acts first).
struct Product(Vec<Operator>);

impl LatticeOp for Product {
    fn row(&self, at: &Weight) -> LinearForm {
        let mut form = self.0[0].row(at);
        for op in &self.0[1..] {
            form = op.pull_back(&form);
        }
        form
    }
    fn image_support(&self, supp: &BTreeSet<Weight>) -> Option<BTreeSet<Weight>> {
        let mut s = supp.clone();
        for op in self.0.iter().rev() {
            s = op.image_support(&s)?;
        }
        Some(s)
    }
}

struct Sum(Vec<(RingElem, Operator)>);

impl LatticeOp for Sum {
    fn row(&self, at: &Weight) -> LinearForm {
        let mut form = LinearForm::new();
        for (c, op) in &self.0 {
            form_add_scaled(&mut form, &op.row(at), c);
        }
        form
    }
    fn image_support(&self, supp: &BTreeSet<Weight>) -> Option<BTreeSet<Weight>> {
        let mut out = BTreeSet::new();
        for (_, op) in &self.0 {
            out.extend(op.image_support(supp)?);
        }
        Some(out)
    }
}

/// Row cache around another operator.
struct Memo {
    inner: Operator,
    cache: RwLock<HashMap<Weight, LinearForm>>,
}

impl LatticeOp for Memo {
    fn row(&self, at: &Weight) -> LinearForm {
        if let Some(r) = self.cache.read().unwrap().get(at) {
            return r.clone();
        }
        let r = self.inner.row(at);
        self.cache.write().unwrap().insert(*at, r.clone());
        r
    }
    fn image_support(&self, supp: &BTreeSet<Weight>) -> Option<BTreeSet<Weight>> {
        self.inner.image_support(supp)
    }
}

/// Shared handle to a lattice operator.
#[derive(Clone)]
pub struct Operator(Arc<dyn LatticeOp>);

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Operator")
    }
}

impl Operator {
    pub fn new(op: impl LatticeOp + 'static) -> Self {
        Self(Arc::new(op))
    }

    pub fn from_rows(row: impl Fn(&Weight) -> LinearForm + Send + Sync + 'static) -> Self {
        Self::new(FnOp { row: Box::new(row), supp: None })
    }

    /// An operator with finite propagation, given its rows and the support map.
    pub fn local(
        row: impl Fn(&Weight) -> LinearForm + Send + Sync + 'static,
        supp: impl Fn(&BTreeSet<Weight>) -> BTreeSet<Weight> + Send + Sync + 'static,
    ) -> Self {
        Self::new(FnOp { row: Box::new(row), supp: Some(Box::new(supp)) })
    }

    pub fn identity() -> Self {
        Self::scalar(RingElem::one())
    }

    pub fn scalar(c: RingElem) -> Self {
        Self::local(
            move |at| {
                let mut f = LinearForm::new();
                form_add(&mut f, *at, &c);
                f
            },
            |s| s.clone(),
        )
    }

    /// Multiplication by a function of the weight.
    pub fn multiplier(m: impl Fn(&Weight) -> RingElem + Send + Sync + 'static) -> Self {
        Self::local(
            move |at| {
                let mut f = LinearForm::new();
                form_add(&mut f, *at, &m(at));
                f
            },
            |s| s.clone(),
        )
    }

    pub fn row(&self, at: &Weight) -> LinearForm {
        self.0.row(at)
    }

    /// The same operator with its rows cached.
    pub fn memoized(&self) -> Operator {
        Self::new(Memo { inner: self.clone(), cache: RwLock::new(HashMap::new()) })
    }

    pub fn image_support(&self, supp: &BTreeSet<Weight>) -> Option<BTreeSet<Weight>> {
        self.0.image_support(supp)
    }

    /// The form g ↦ Σ c_μ (A g)(μ) for the form Σ c_μ δ_μ.
    pub fn pull_back(&self, form: &LinearForm) -> LinearForm {
        let mut out = LinearForm::new();
        let mut cache: HashMap<Weight, LinearForm> = HashMap::new();
        for (mu, c) in form {
            let r = cache.entry(*mu).or_insert_with(|| self.row(mu));
            form_add_scaled(&mut out, r, c);
        }
        out
    }

    /// self ∘ other.
    pub fn then(&self, other: &Operator) -> Operator {
        Self::product(vec![self.clone(), other.clone()])
    }

    pub fn product(ops: Vec<Operator>) -> Operator {
        let mut flat = ops;
        match flat.len() {
            0 => Self::identity(),
            1 => flat.pop().unwrap(),
            _ => Self::new(Product(flat)),
        }
    }

    pub fn linear_combination(terms: Vec<(RingElem, Operator)>) -> Operator {
        Self::new(Sum(terms))
    }

    pub fn plus(&self, other: &Operator) -> Operator {
        Self::linear_combination(vec![(RingElem::one(), self.clone()), (RingElem::one(), other.clone())])
    }

    pub fn minus(&self, other: &Operator) -> Operator {
        Self::linear_combination(vec![(RingElem::one(), self.clone()), (RingElem::from_int(-1), other.clone())])
    }

    pub fn scaled(&self, c: RingElem) -> Operator {
        Self::linear_combination(vec![(c, self.clone())])
    }

    pub fn eval_at(&self, f: &LatticeFunction, at: &Weight) -> RingElem {
        eval_form(&self.row(at), f)
    }

    /// Apply to a finitely supported function, when the image stays finite.
    pub fn apply(&self, f: &LatticeFunction) -> Option<LatticeFunction> {
        let supp: BTreeSet<Weight> = f.support().copied().collect();
        let image = self.image_support(&supp)?;
        Some(self.apply_on(f, image.iter()))
    }

    /// The restriction of Af to the given points.
    pub fn apply_on<'a>(&self, f: &LatticeFunction, points: impl Iterator<Item = &'a Weight>) -> LatticeFunction {
        let mut out = LatticeFunction::zero(f.rank());
        for p in points {
            out.set(*p, self.eval_at(f, p));
        }
        out
    }
}

/// First point where the rows of `a` and `b` differ.
pub fn first_row_mismatch(a: &Operator, b: &Operator, points: &[Weight]) -> Option<(Weight, LinearForm, LinearForm)> {
    points
        .par_iter()
        .filter_map(|p| {
            let (ra, rb) = (a.row(p), b.row(p));
            (ra != rb).then_some((*p, ra, rb))
        })
        .min_by_key(|(p, _, _)| *p)
}

/// First point where (af)(λ) ≠ (bf)(λ).
pub fn first_value_mismatch(
    a: &Operator,
    b: &Operator,
    f: &LatticeFunction,
    points: &[Weight],
) -> Option<(Weight, RingElem, RingElem)> {
    points
        .par_iter()
        .filter_map(|p| {
            let (va, vb) = (a.eval_at(f, p), b.eval_at(f, p));
            (va != vb).then_some((*p, va, vb))
        })
        .min_by_key(|(p, _, _)| *p)
}
