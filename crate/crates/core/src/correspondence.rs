//! The boson-fermion dictionary between 𝐅(m) and the symmetric functions.
//!
//! The Clifford generators rebuilt from the vertex operators use
//!
//! ```text
//! ψ_i  on 𝐅(m) = s  ∘ X_{−i−m−1}
//! ψ*_i on 𝐅(m) = s⁻¹ ∘ X*_{i+m}
//! ```
//!
//! which matches the Maya-diagram generators of [`crate::fock`] on the nose.
//! Reading the raising index as `i − m` instead only satisfies
//! `ψ_iψ*_j + ψ*_jψ_i = δ_{i+j+1,0}`, so the index has to be reflected.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::Error;
use crate::fock::{ChargedPartition, FockVector};
use crate::symring::{mul_e, mul_h, skew_e, skew_h, rational, DegreeShift, LinOp, Rational, SymFunc};
use crate::verifier::report::{IdentityCase, Report, Tally};

/// Tags a symmetric function as an element of 𝐅(m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChargeSector {
    pub m: i64,
}

/// Splits a Fock vector into its charge components, each read as a symmetric function.
pub fn sectors(v: &FockVector) -> BTreeMap<ChargeSector, SymFunc> {
    let mut out: BTreeMap<ChargeSector, SymFunc> = BTreeMap::new();
    for (b, c) in v.terms() {
        out.entry(ChargeSector { m: b.charge }).or_default().add_term(b.shape.clone(), c.clone());
    }
    out
}

/// `(m, λ) ↦ s_λ`; every term must have charge `m`.
pub fn to_boson(v: &FockVector, m: i64) -> Result<SymFunc, Error> {
    let found: Vec<i64> = v.charges().into_iter().filter(|&c| c != m).collect();
    if !found.is_empty() {
        return Err(Error::MixedCharge { expected: m, found });
    }
    Ok(SymFunc::from_terms(v.terms().map(|(b, c)| (b.shape.clone(), c.clone()))))
}

/// `s_λ ↦ (m, λ)`.
pub fn from_boson(f: &SymFunc, m: i64) -> FockVector {
    FockVector::from_terms(f.terms().map(|(lam, c)| (ChargedPartition::new(m, lam.clone()), c.clone())))
}

type OpCache = OnceLock<Mutex<BTreeMap<i64, LinOp>>>;

static X_CACHE: OpCache = OnceLock::new();
static XSTAR_CACHE: OpCache = OnceLock::new();

fn cached(cache: &'static OpCache, a: i64, build: impl FnOnce(i64) -> LinOp) -> LinOp {
    let map = cache.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(op) = map.lock().unwrap().get(&a) {
        return op.clone();
    }
    let op = build(a).memoized();
    map.lock().unwrap().entry(a).or_insert(op).clone()
}

fn sign(k: i64) -> Rational {
    rational(if k % 2 == 0 { 1 } else { -1 })
}

/// X_a = Σ_{q ≥ max(0,−a)} (−1)^q h_{a+q} e_q^⊥. Terms with q above the input
/// degree vanish, so the sum is finite on every Schur function.
#[allow(non_snake_case)]
pub fn vertex_X(a: i64) -> LinOp {
    cached(&X_CACHE, a, |a| {
        LinOp::new(DegreeShift::Exact(a), move |lam| {
            let mut out = SymFunc::zero();
            for q in 0.max(-a)..=lam.size() as i64 {
                let lowered = skew_e(q).apply_basis(lam);
                let term = mul_h(a + q).apply(&lowered);
                out.add_scaled(&term, &sign(q));
            }
            out
        })
    })
}

/// X*_a = Σ_{q ≥ max(0,−a)} (−1)^{a+q} e_{a+q} h_q^⊥.
#[allow(non_snake_case)]
pub fn vertex_Xstar(a: i64) -> LinOp {
    cached(&XSTAR_CACHE, a, |a| {
        LinOp::new(DegreeShift::Exact(a), move |lam| {
            let mut out = SymFunc::zero();
            for q in 0.max(-a)..=lam.size() as i64 {
                let lowered = skew_h(q).apply_basis(lam);
                let term = mul_e(a + q).apply(&lowered);
                out.add_scaled(&term, &sign(a + q));
            }
            out
        })
    })
}

fn apply_per_sector(v: &FockVector, op: impl Fn(i64) -> (LinOp, i64)) -> FockVector {
    let mut out = FockVector::zero();
    for (sector, f) in sectors(v) {
        let (x, target) = op(sector.m);
        out.add_scaled(&from_boson(&x.apply(&f), target), &rational(1));
    }
    out
}

/// ψ_i rebuilt from X via the charge shift.
pub fn clifford_psi(i: i64, v: &FockVector) -> FockVector {
    apply_per_sector(v, |m| (vertex_X(-i - m - 1), m + 1))
}

/// ψ*_i rebuilt from X* via the inverse charge shift.
pub fn clifford_psi_star(i: i64, v: &FockVector) -> FockVector {
    apply_per_sector(v, |m| (vertex_Xstar(i + m), m - 1))
}

/// Which of the three vertex relations a check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRelation {
    /// X_aX_b + X_{b−1}X_{a+1} = 0
    XX,
    /// X*_aX*_b + X*_{b−1}X*_{a+1} = 0
    XstarXstar,
    /// X_aX*_b + X*_{b+1}X_{a−1} = δ_{a+b,0} Id
    XXstar,
}

impl VertexRelation {
    pub const ALL: [VertexRelation; 3] = [VertexRelation::XX, VertexRelation::XstarXstar, VertexRelation::XXstar];

    pub fn id(self) -> &'static str {
        match self {
            VertexRelation::XX => "v1",
            VertexRelation::XstarXstar => "v2",
            VertexRelation::XXstar => "v3",
        }
    }

    /// Both sides as operators.
    pub fn sides(self, a: i64, b: i64) -> (LinOp, LinOp) {
        match self {
            VertexRelation::XX => (&(&vertex_X(a) * &vertex_X(b)) + &(&vertex_X(b - 1) * &vertex_X(a + 1)), LinOp::zero()),
            VertexRelation::XstarXstar => (
                &(&vertex_Xstar(a) * &vertex_Xstar(b)) + &(&vertex_Xstar(b - 1) * &vertex_Xstar(a + 1)),
                LinOp::zero(),
            ),
            VertexRelation::XXstar => {
                let rhs = if a + b == 0 { LinOp::identity() } else { LinOp::zero() };
                (&(&vertex_X(a) * &vertex_Xstar(b)) + &(&vertex_Xstar(b + 1) * &vertex_X(a - 1)), rhs)
            }
        }
    }
}

/// Checks one relation for every |a|, |b| ≤ `bound` on the degree window.
pub fn verify_relation(relation: VertexRelation, window: usize, bound: i64) -> Report {
    let started = Instant::now();
    let pairs: Vec<(i64, i64)> = (-bound..=bound).flat_map(|a| (-bound..=bound).map(move |b| (a, b))).collect();
    let tallies: Vec<Tally> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (lhs, rhs) = relation.sides(a, b);
            let mut t = Tally::new();
            t.check_ops(&format!("a={a},b={b}"), &lhs, &rhs, window);
            t
        })
        .collect();
    let case = IdentityCase::new(relation.id(), window).with("bound", bound);
    Tally::merge_all(tallies).finish(case, started)
}

/// One report per relation and per (a, b), in that order.
pub fn verify_vertex_relations(window: usize, bound: i64) -> Vec<Report> {
    let mut jobs = Vec::new();
    for relation in VertexRelation::ALL {
        for a in -bound..=bound {
            for b in -bound..=bound {
                jobs.push((relation, a, b));
            }
        }
    }
    jobs.par_iter()
        .map(|&(relation, a, b)| {
            let started = Instant::now();
            let (lhs, rhs) = relation.sides(a, b);
            let mut t = Tally::new();
            t.check_ops("", &lhs, &rhs, window);
            t.finish(IdentityCase::new(relation.id(), window).with("a", a).with("b", b), started)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{basis_window, charge_shift, fermion_p, fermion_p_star, psi, psi_star, vacuum};
    use crate::oracle::vertex_by_power_sums;
    use crate::partitions::Partition;
    use crate::symring::{hall_inner, mul_p, op_equal_on_window, skew_p};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s(spec: &[(&str, i64)]) -> SymFunc {
        SymFunc::from_terms(spec.iter().map(|&(l, c)| (p(l), rational(c))))
    }

    #[test]
    fn dictionary_examples() {
        assert_eq!(to_boson(&vacuum(3), 3).unwrap(), SymFunc::one());
        let v = fermion_p(2, &vacuum(0)).unwrap();
        assert_eq!(to_boson(&v, 0).unwrap(), s(&[("2", 1), ("1,1", -1)]));
        assert_eq!(to_boson(&v, 0).unwrap(), mul_p(2).unwrap().apply(&SymFunc::one()));
        assert_eq!(from_boson(&s(&[("1", 1)]), -2), FockVector::basis("-2|1".parse().unwrap()));
        let mut mixed = vacuum(0);
        mixed.add_scaled(&vacuum(2), &rational(1));
        mixed.add_scaled(&vacuum(-1), &rational(1));
        assert_eq!(to_boson(&mixed, 0), Err(Error::MixedCharge { expected: 0, found: vec![-1, 2] }));
    }

    #[test]
    fn dictionary_intertwines_power_sums() {
        for b in basis_window(2, 5) {
            let v = FockVector::basis(b.clone());
            let f = to_boson(&v, b.charge).unwrap();
            assert_eq!(from_boson(&f, b.charge), v);
            for n in 1..=4 {
                assert_eq!(
                    to_boson(&fermion_p(n, &v).unwrap(), b.charge).unwrap(),
                    mul_p(n).unwrap().apply(&f)
                );
                assert_eq!(
                    to_boson(&fermion_p_star(n, &v).unwrap(), b.charge).unwrap(),
                    skew_p(n).unwrap().apply(&f)
                );
            }
        }
    }

    #[test]
    fn vertex_on_vacuum() {
        for a in 1..=5 {
            assert_eq!(vertex_X(a).apply(&SymFunc::one()), SymFunc::schur(Partition::row(a as usize)));
        }
        assert_eq!(vertex_X(0).apply(&SymFunc::one()), SymFunc::one());
        assert!(vertex_X(-3).apply(&SymFunc::one()).is_zero());
    }

    #[test]
    fn vertex_star_zero_on_one_box() {
        // q = 0 gives e_0 s_(1) = s_(1); q = 1 gives −e_1 h_1^⊥ s_(1) = −s_(1).
        assert!(vertex_Xstar(0).apply(&s(&[("1", 1)])).is_zero());
        // −e_1 s_(1) + e_2 = −s_(2)
        assert_eq!(vertex_Xstar(1).apply(&s(&[("1", 1)])), s(&[("2", -1)]));
        assert_eq!(vertex_Xstar(-1).apply(&s(&[("1", 1)])), s(&[("∅", 1)]));
    }

    #[test]
    fn vertex_matches_power_sum_oracle() {
        for lam in Partition::all_up_to(5) {
            let f = SymFunc::schur(lam.clone());
            for a in -4..=4 {
                assert_eq!(vertex_X(a).apply(&f), vertex_by_power_sums(a, false, &f), "X_{a} s[{lam}]");
                assert_eq!(vertex_Xstar(a).apply(&f), vertex_by_power_sums(a, true, &f), "X*_{a} s[{lam}]");
            }
        }
    }

    #[test]
    fn vertex_adjoint() {
        // Hall adjoint of X_a straight from its defining sum: Σ_q (−1)^q e_q h_{a+q}^⊥.
        for a in -4i64..=4 {
            let adjoint = LinOp::combination(
                (0.max(-a)..=6).map(|q| (rational(if q % 2 == 0 { 1 } else { -1 }), &mul_e(q) * &skew_h(a + q))).collect(),
            );
            let basis = Partition::all_up_to(6);
            for lam in &basis {
                let image = vertex_X(a).apply_basis(lam);
                for mu in basis.iter().filter(|mu| mu.size() as i64 == lam.size() as i64 + a) {
                    let lhs = hall_inner(&image, &SymFunc::schur(mu.clone()));
                    let rhs = hall_inner(&SymFunc::schur(lam.clone()), &adjoint.apply_basis(mu));
                    assert_eq!(lhs, rhs, "a={a} lam={lam} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn relation_examples() {
        let (l, r) = VertexRelation::XX.sides(1, 0);
        assert!(op_equal_on_window(&l, &r, 6));
        let (l, _) = VertexRelation::XXstar.sides(0, 0);
        assert!(op_equal_on_window(&l, &LinOp::identity(), 6));
        let (l, _) = VertexRelation::XXstar.sides(2, 1);
        assert!(op_equal_on_window(&l, &LinOp::zero(), 6));
    }

    #[test]
    fn all_vertex_relations_small() {
        for r in verify_vertex_relations(4, 3) {
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn clifford_vacuum() {
        for i in 0..5 {
            assert!(clifford_psi(i, &vacuum(0)).is_zero());
            assert!(clifford_psi_star(-1 - i, &vacuum(0)).is_zero());
        }
        assert_eq!(clifford_psi(-1, &vacuum(0)), vacuum(1));
        assert_eq!(clifford_psi_star(0, &vacuum(0)), vacuum(-1));
    }

    #[test]
    fn commuting_square() {
        for b in basis_window(3, 5) {
            let v = FockVector::basis(b.clone());
            for i in -5..=5 {
                assert_eq!(clifford_psi(i, &v), psi(i, &v), "ψ_{i} on {b}");
                assert_eq!(clifford_psi_star(i, &v), psi_star(i, &v), "ψ*_{i} on {b}");
            }
        }
    }

    #[test]
    fn charge_bookkeeping() {
        for b in basis_window(2, 4) {
            let v = FockVector::basis(b.clone());
            for i in -4..=4 {
                assert!(clifford_psi(i, &v).charges().iter().all(|&c| c == b.charge + 1));
                assert!(clifford_psi_star(i, &v).charges().iter().all(|&c| c == b.charge - 1));
            }
            assert_eq!(sectors(&charge_shift(&v)).keys().next().unwrap().m, b.charge + 1);
        }
    }
}
