use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{Rational, SymFunc};
use crate::partitions::Partition;

/// How an operator moves the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeShift {
    /// The operator is zero; compatible with every shift.
    Zero,
    Exact(i64),
    Mixed,
}

impl DegreeShift {
    fn sum(self, other: DegreeShift) -> DegreeShift {
        match (self, other) {
            (DegreeShift::Zero, x) | (x, DegreeShift::Zero) => x,
            (DegreeShift::Exact(a), DegreeShift::Exact(b)) if a == b => DegreeShift::Exact(a),
            _ => DegreeShift::Mixed,
        }
    }

    fn compose(self, other: DegreeShift) -> DegreeShift {
        match (self, other) {
            (DegreeShift::Zero, _) | (_, DegreeShift::Zero) => DegreeShift::Zero,
            (DegreeShift::Exact(a), DegreeShift::Exact(b)) => DegreeShift::Exact(a + b),
            _ => DegreeShift::Mixed,
        }
    }
}

type Rule = dyn Fn(&Partition) -> SymFunc + Send + Sync;

/// A linear operator on symmetric functions, given by its action on each Schur function.
#[derive(Clone)]
pub struct LinOp {
    rule: Arc<Rule>,
    shift: DegreeShift,
}

impl fmt::Debug for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinOp").field("shift", &self.shift).finish_non_exhaustive()
    }
}

impl LinOp {
    pub fn new(shift: DegreeShift, rule: impl Fn(&Partition) -> SymFunc + Send + Sync + 'static) -> Self {
        LinOp { rule: Arc::new(rule), shift }
    }

    pub fn identity() -> Self {
        LinOp::new(DegreeShift::Exact(0), |lam| SymFunc::schur(lam.clone()))
    }

    pub fn zero() -> Self {
        LinOp::new(DegreeShift::Zero, |_| SymFunc::zero())
    }

    pub fn degree_shift(&self) -> DegreeShift {
        self.shift
    }

    /// Image of a single Schur function.
    pub fn apply_basis(&self, lam: &Partition) -> SymFunc {
        (self.rule)(lam)
    }

    pub fn apply(&self, f: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in f.terms() {
            out.add_scaled(&self.apply_basis(lam), c);
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinOp) -> LinOp {
        let (outer, inner_op) = (self.clone(), inner.clone());
        LinOp::new(self.shift.compose(inner.shift), move |lam| outer.apply(&inner_op.apply_basis(lam)))
    }

    pub fn scale(&self, c: Rational) -> LinOp {
        if c.is_zero() {
            return LinOp::zero();
        }
        let op = self.clone();
        LinOp::new(self.shift, move |lam| op.apply_basis(lam).scale(&c))
    }

    /// Linear combination Σ cᵢ·opᵢ.
    pub fn combination(terms: Vec<(Rational, LinOp)>) -> LinOp {
        let terms: Vec<_> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        let shift = terms.iter().fold(DegreeShift::Zero, |s, (_, op)| s.sum(op.shift));
        LinOp::new(shift, move |lam| {
            let mut out = SymFunc::zero();
            for (c, op) in &terms {
                out.add_scaled(&op.apply_basis(lam), c);
            }
            out
        })
    }

    /// Caches basis images. Worth it for operators that are applied repeatedly
    /// inside compositions.
    pub fn memoized(&self) -> LinOp {
        let op = self.clone();
        let cache: Mutex<HashMap<Partition, SymFunc>> = Mutex::new(HashMap::new());
        LinOp::new(self.shift, move |lam| {
            if let Some(v) = cache.lock().unwrap().get(lam) {
                return v.clone();
            }
            let v = op.apply_basis(lam);
            cache.lock().unwrap().insert(lam.clone(), v.clone());
            v
        })
    }
}

impl Add for &LinOp {
    type Output = LinOp;

    fn add(self, rhs: &LinOp) -> LinOp {
        LinOp::combination(vec![(Rational::one(), self.clone()), (Rational::one(), rhs.clone())])
    }
}

impl Sub for &LinOp {
    type Output = LinOp;

    fn sub(self, rhs: &LinOp) -> LinOp {
        LinOp::combination(vec![(Rational::one(), self.clone()), (-Rational::one(), rhs.clone())])
    }
}

impl Neg for &LinOp {
    type Output = LinOp;

    fn neg(self) -> LinOp {
        self.scale(-Rational::one())
    }
}

/// Composition: `a * b` is `a ∘ b`.
impl Mul for &LinOp {
    type Output = LinOp;

    fn mul(self, rhs: &LinOp) -> LinOp {
        self.compose(rhs)
    }
}

/// First Schur function of degree ≤ `window` (in graded order) on which the two
/// operators differ, with both images.
pub fn first_difference(a: &LinOp, b: &LinOp, window: usize) -> Option<(Partition, SymFunc, SymFunc)> {
    Partition::all_up_to(window).par_iter().find_map_first(|lam| {
        let (lhs, rhs) = (a.apply_basis(lam), b.apply_basis(lam));
        (lhs != rhs).then(|| (lam.clone(), lhs, rhs))
    })
}

/// True iff `a s_λ = b s_λ` for every |λ| ≤ `window`.
pub fn op_equal_on_window(a: &LinOp, b: &LinOp, window: usize) -> bool {
    first_difference(a, b, window).is_none()
}
