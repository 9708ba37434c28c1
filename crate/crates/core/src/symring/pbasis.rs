//! Power-sum basis: Murnaghan–Nakayama characters, basis changes and the
//! exponential generating functions for h_n and e_n.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{mul_p, rational, write_terms, Rational, SymFunc};
use crate::error::Error;
use crate::partitions::{remove_ribbons, Partition};

/// A ℚ-combination of power-sum monomials p_ρ = p_{ρ_1} p_{ρ_2} ⋯, keyed by the multiset ρ.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PowerSum {
    terms: BTreeMap<Partition, Rational>,
}

impl PowerSum {
    pub fn zero() -> Self {
        PowerSum::default()
    }

    pub fn one() -> Self {
        PowerSum::monomial(Partition::empty(), Rational::one())
    }

    pub fn monomial(rho: Partition, c: Rational) -> Self {
        let mut out = PowerSum::zero();
        out.add_term(rho, c);
        out
    }

    pub fn add_term(&mut self, rho: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(rho.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&rho);
        }
    }

    pub fn coeff(&self, rho: &Partition) -> Rational {
        self.terms.get(rho).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn product(&self, other: &PowerSum) -> PowerSum {
        let mut out = PowerSum::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), x * y);
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &PowerSum, c: &Rational) {
        for (rho, x) in &other.terms {
            self.add_term(rho.clone(), x * c);
        }
    }
}

impl fmt::Display for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(r, c)| (c, format!("p[{r}]"))))
    }
}

/// χ^λ(ρ), the irreducible S_n character at cycle type ρ, by recursive ribbon removal.
pub fn character(lam: &Partition, rho: &Partition) -> i64 {
    if lam.size() != rho.size() {
        return 0;
    }
    let Some((&first, rest)) = rho.parts().split_first() else {
        return 1;
    };
    let rest = Partition::from_unsorted(rest.to_vec());
    remove_ribbons(lam, first)
        .into_iter()
        .map(|(mu, h)| if h % 2 == 0 { 1 } else { -1 } * character(&mu, &rest))
        .sum()
}

/// z_ρ = Π i^{m_i} m_i!, the centralizer order of a permutation of cycle type ρ.
pub fn z_rho(rho: &Partition) -> BigInt {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &part in rho.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    let mut z = BigInt::one();
    for (i, m) in mult {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

/// s_λ = Σ_ρ χ^λ(ρ) p_ρ / z_ρ, extended linearly.
pub fn to_p_basis(f: &SymFunc) -> PowerSum {
    let mut out = PowerSum::zero();
    for (lam, c) in f.terms() {
        for rho in Partition::all_of_size(lam.size()) {
            let chi = character(lam, &rho);
            if chi != 0 {
                out.add_term(rho.clone(), c * Rational::new(BigInt::from(chi), z_rho(&rho)));
            }
        }
    }
    out
}

/// Expands each p_ρ by applying the Murnaghan–Nakayama operators to s_∅.
pub fn from_p_basis(f: &PowerSum) -> SymFunc {
    let mut out = SymFunc::zero();
    for (rho, c) in f.terms() {
        let mut v = SymFunc::one();
        for &part in rho.parts() {
            v = mul_p(part as i64).expect("parts are positive").apply(&v);
        }
        out.add_scaled(&v, c);
    }
    out
}

/// Coefficient of z^n in exp(Σ_{k≥1} c_k p_k z^k / k), via n·E_n = Σ_k k·A_k·E_{n−k}.
fn exp_coefficient(n: usize, sign: impl Fn(usize) -> i64) -> PowerSum {
    let a: Vec<PowerSum> = (0..=n)
        .map(|k| {
            if k == 0 {
                PowerSum::zero()
            } else {
                PowerSum::monomial(Partition::row(k), Rational::new(BigInt::from(sign(k)), BigInt::from(k)))
            }
        })
        .collect();
    let mut e = vec![PowerSum::one()];
    for m in 1..=n {
        let mut acc = PowerSum::zero();
        for k in 1..=m {
            acc.add_scaled(&a[k].product(&e[m - k]), &rational(k as i64));
        }
        let mut scaled = PowerSum::zero();
        scaled.add_scaled(&acc, &Rational::new(BigInt::one(), BigInt::from(m)));
        e.push(scaled);
    }
    e.pop().unwrap()
}

fn nonnegative(n: i64, what: &str) -> Result<usize, Error> {
    usize::try_from(n).map_err(|_| Error::InvalidArgument(format!("{what}: n must be nonnegative, got {n}")))
}

/// h_n read off H(z) = exp(Σ p_k z^k / k), returned in the Schur basis.
pub fn gf_h(n: i64) -> Result<SymFunc, Error> {
    let n = nonnegative(n, "gf_h")?;
    Ok(from_p_basis(&exp_coefficient(n, |_| 1)))
}

/// e_n read off E(z) = exp(Σ (−1)^{k−1} p_k z^k / k), returned in the Schur basis.
pub fn gf_e(n: i64) -> Result<SymFunc, Error> {
    let n = nonnegative(n, "gf_e")?;
    Ok(from_p_basis(&exp_coefficient(n, |k| if k % 2 == 1 { 1 } else { -1 })))
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn schur_to_power_sums() {
        let s2 = to_p_basis(&SymFunc::schur(p("2")));
        assert_eq!(s2.coeff(&p("1,1")), ratio(1, 2));
        assert_eq!(s2.coeff(&p("2")), ratio(1, 2));
        assert_eq!(to_p_basis(&SymFunc::schur(p("1"))), PowerSum::monomial(p("1"), rational(1)));
        let s11 = to_p_basis(&SymFunc::schur(p("1,1")));
        assert_eq!(s11.coeff(&p("1,1")), ratio(1, 2));
        assert_eq!(s11.coeff(&p("2")), ratio(-1, 2));
    }

    #[test]
    fn round_trip_through_power_sums() {
        for lam in Partition::all_up_to(6) {
            let f = SymFunc::schur(lam.clone());
            assert_eq!(from_p_basis(&to_p_basis(&f)), f, "{lam}");
        }
    }

    #[test]
    fn character_values() {
        // χ^{(2,1)} on (1,1,1), (2,1), (3)
        assert_eq!(character(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(character(&p("2,1"), &p("2,1")), 0);
        assert_eq!(character(&p("2,1"), &p("3")), -1);
        assert_eq!(z_rho(&p("2,1,1")), BigInt::from(4));
    }

    #[test]
    fn generating_functions() {
        assert_eq!(gf_h(0).unwrap(), SymFunc::one());
        assert_eq!(gf_e(0).unwrap(), SymFunc::one());
        for n in 1..=8 {
            assert_eq!(gf_h(n).unwrap(), SymFunc::schur(Partition::row(n as usize)), "h_{n}");
            assert_eq!(gf_e(n).unwrap(), SymFunc::schur(Partition::column(n as usize)), "e_{n}");
        }
        assert!(gf_h(-1).is_err());
    }
}
