use num_traits::Zero;

use super::linop::{DegreeShift, LinOp};
use super::{rational, Rational, SymFunc};
use crate::error::Error;
use crate::partitions::{add_ribbons, remove_ribbons, schur_product, skew_expansion, Partition};

/// Multiplication by s_ν: s_λ ↦ Σ_μ N^μ_{ν,λ} s_μ.
pub fn mul_schur(nu: Partition) -> LinOp {
    if nu.is_empty() {
        return LinOp::identity();
    }
    let shift = DegreeShift::Exact(nu.size() as i64);
    LinOp::new(shift, move |lam| SymFunc::from_expansion(&schur_product(&nu, lam)))
}

/// The Hall adjoint of [`mul_schur`]: s_λ ↦ s_{λ/ν}.
pub fn skew_schur(nu: Partition) -> LinOp {
    if nu.is_empty() {
        return LinOp::identity();
    }
    let shift = DegreeShift::Exact(-(nu.size() as i64));
    LinOp::new(shift, move |lam| SymFunc::from_expansion(&skew_expansion(lam, &nu)))
}

fn graded(n: i64, build: impl FnOnce(usize) -> LinOp) -> LinOp {
    match n {
        n if n < 0 => LinOp::zero(),
        0 => LinOp::identity(),
        n => build(n as usize),
    }
}

/// Multiplication by h_n; zero for n < 0, identity for n = 0.
pub fn mul_h(n: i64) -> LinOp {
    graded(n, |n| mul_schur(Partition::row(n)))
}

/// Multiplication by e_n; zero for n < 0, identity for n = 0.
pub fn mul_e(n: i64) -> LinOp {
    graded(n, |n| mul_schur(Partition::column(n)))
}

/// h_n^⊥; zero for n < 0, identity for n = 0.
pub fn skew_h(n: i64) -> LinOp {
    graded(n, |n| skew_schur(Partition::row(n)))
}

/// e_n^⊥; zero for n < 0, identity for n = 0.
pub fn skew_e(n: i64) -> LinOp {
    graded(n, |n| skew_schur(Partition::column(n)))
}

fn signed_ribbons(ribbons: Vec<(Partition, usize)>) -> SymFunc {
    SymFunc::from_terms(ribbons.into_iter().map(|(mu, h)| (mu, rational(if h % 2 == 0 { 1 } else { -1 }))))
}

fn positive(n: i64, what: &str) -> Result<usize, Error> {
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("{what}: n must be at least 1, got {n}")));
    }
    Ok(n as usize)
}

/// Multiplication by the power sum p_n, by Murnaghan–Nakayama.
pub fn mul_p(n: i64) -> Result<LinOp, Error> {
    let n = positive(n, "mul_p")?;
    Ok(LinOp::new(DegreeShift::Exact(n as i64), move |lam| signed_ribbons(add_ribbons(lam, n))))
}

/// p_n^⊥, the Hall adjoint of [`mul_p`].
pub fn skew_p(n: i64) -> Result<LinOp, Error> {
    let n = positive(n, "skew_p")?;
    Ok(LinOp::new(DegreeShift::Exact(-(n as i64)), move |lam| signed_ribbons(remove_ribbons(lam, n))))
}

/// The Hall inner product, for which the Schur functions are orthonormal.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Rational {
    let mut acc = Rational::zero();
    for (lam, c) in f.terms() {
        let d = g.coeff(lam);
        if !d.is_zero() {
            acc += c * d;
        }
    }
    acc
}

/// `[a, b] = a∘b − b∘a`.
pub fn commutator(a: &LinOp, b: &LinOp) -> LinOp {
    &(a * b) - &(b * a)
}

#[cfg(test)]
mod tests {
    use super::super::op_equal_on_window;
    use super::*;
    use crate::partitions::{hooks, lr_coefficient};
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s(spec: &[(&str, i64)]) -> SymFunc {
        SymFunc::from_terms(spec.iter().map(|&(l, c)| (p(l), rational(c))))
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(mul_h(2).apply(&s(&[("1", 1)])), s(&[("3", 1), ("2,1", 1)]));
        assert_eq!(mul_e(2).apply(&s(&[("1", 1)])), s(&[("2,1", 1), ("1,1,1", 1)]));
        assert!(op_equal_on_window(&mul_schur(Partition::empty()), &LinOp::identity(), 5));
        assert!(mul_h(-1).apply(&s(&[("2", 1)])).is_zero());
    }

    #[test]
    fn skew_examples() {
        assert_eq!(skew_h(1).apply(&s(&[("2,1", 1)])), s(&[("2", 1), ("1,1", 1)]));
        assert_eq!(skew_e(1).apply(&s(&[("1,1", 1)])), s(&[("1", 1)]));
        assert!(skew_schur(p("2,1")).apply(&s(&[("2", 1)])).is_zero());
        assert!(op_equal_on_window(&skew_h(0), &LinOp::identity(), 5));
        assert!(op_equal_on_window(&skew_h(-1), &LinOp::zero(), 5));
    }

    #[test]
    fn power_sum_examples() {
        let p2 = mul_p(2).unwrap();
        let p2s = skew_p(2).unwrap();
        assert_eq!(p2.apply(&SymFunc::one()), s(&[("2", 1), ("1,1", -1)]));
        for n in 1..=4 {
            assert!(skew_p(n).unwrap().apply(&SymFunc::one()).is_zero());
        }
        assert_eq!(commutator(&p2s, &p2).apply(&SymFunc::one()), s(&[("∅", 2)]));
        assert!(mul_p(0).is_err());
        assert!(skew_p(-2).is_err());
    }

    #[test]
    fn hall_inner_examples() {
        assert!(hall_inner(&s(&[("2,1", 1)]), &s(&[("2,1", 1)])).is_one());
        assert!(hall_inner(&s(&[("2", 1)]), &s(&[("1,1", 1)])).is_zero());
        let lhs = hall_inner(&mul_h(1).apply(&s(&[("1", 1)])), &s(&[("2", 1)]));
        let rhs = hall_inner(&s(&[("1", 1)]), &skew_h(1).apply(&s(&[("2", 1)])));
        assert!(lhs.is_one() && rhs.is_one());
    }

    #[test]
    fn window_equality_examples() {
        assert!(op_equal_on_window(&(&mul_h(1) * &mul_h(2)), &(&mul_h(2) * &mul_h(1)), 6));
        assert!(!op_equal_on_window(&(&skew_h(1) * &mul_h(1)), &(&mul_h(1) * &skew_h(1)), 4));
        assert!(op_equal_on_window(&LinOp::zero(), &LinOp::zero(), 7));
    }

    #[test]
    fn mul_and_skew_are_hall_adjoint() {
        let basis = Partition::all_up_to(6);
        for nu in Partition::all_up_to(4) {
            let (m, d) = (mul_schur(nu.clone()), skew_schur(nu.clone()));
            for lam in &basis {
                let image = m.apply_basis(lam);
                for mu in basis.iter().filter(|mu| mu.size() == lam.size() + nu.size()) {
                    let lhs = image.coeff(mu);
                    let rhs = d.apply_basis(mu).coeff(lam);
                    assert_eq!(lhs, rhs, "nu={nu} lam={lam} mu={mu}");
                    assert_eq!(lhs, rational(lr_coefficient(mu, &nu, lam) as i64));
                }
            }
        }
    }

    #[test]
    fn skews_compose_like_products() {
        for mu in Partition::all_up_to(3) {
            for nu in Partition::all_up_to(3) {
                let lhs = &skew_schur(mu.clone()) * &skew_schur(nu.clone());
                let product = SymFunc::schur(mu.clone()).product(&SymFunc::schur(nu.clone()));
                let rhs = LinOp::combination(product.terms().map(|(l, c)| (c.clone(), skew_schur(l.clone()))).collect());
                assert!(op_equal_on_window(&lhs, &rhs, 8), "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn power_sum_is_alternating_hook_sum() {
        for k in 1..=8 {
            let hook_sum = LinOp::combination(
                hooks(k)
                    .unwrap()
                    .into_iter()
                    .enumerate()
                    .map(|(i, h)| (rational(if i % 2 == 0 { 1 } else { -1 }), mul_schur(h)))
                    .collect(),
            );
            assert!(op_equal_on_window(&mul_p(k as i64).unwrap(), &hook_sum, 8), "k={k}");
        }
    }

    #[test]
    fn heisenberg_relations() {
        for m in 1..=5 {
            for k in 1..=5 {
                let lhs = commutator(&skew_p(m).unwrap(), &mul_p(k).unwrap());
                let rhs = if m == k { LinOp::identity().scale(rational(k)) } else { LinOp::zero() };
                assert!(op_equal_on_window(&lhs, &rhs, 8), "m={m} k={k}");
                assert!(op_equal_on_window(
                    &commutator(&mul_p(m).unwrap(), &mul_p(k).unwrap()),
                    &LinOp::zero(),
                    6
                ));
            }
        }
    }

    #[test]
    fn koszul_sums_vanish() {
        for k in 1..=10i64 {
            let terms = (0..=k).map(|m| (rational(if m % 2 == 0 { 1 } else { -1 }), &mul_h(k - m) * &mul_e(m)));
            assert!(op_equal_on_window(&LinOp::combination(terms.collect()), &LinOp::zero(), 3), "k={k}");
            let starred = (0..=k).map(|m| (rational(if m % 2 == 0 { 1 } else { -1 }), &skew_h(k - m) * &skew_e(m)));
            assert!(op_equal_on_window(&LinOp::combination(starred.collect()), &LinOp::zero(), 10), "k={k}");
        }
    }
}
