//! Symmetric functions over ℚ in the Schur basis and their operator algebra.

mod linop;
mod ops;
mod pbasis;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::Error;
use crate::partitions::{Partition, SchurExpansion};

pub use linop::{first_difference, op_equal_on_window, DegreeShift, LinOp};
pub use ops::{
    commutator, hall_inner, mul_e, mul_h, mul_p, mul_schur, skew_e, skew_h, skew_p, skew_schur,
};
pub use pbasis::{character, from_p_basis, gf_e, gf_h, to_p_basis, z_rho, PowerSum};

/// Exact rational coefficients.
pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Textual form used in JSON: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(c: &Rational) -> String {
    c.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse {
        input: s.to_string(),
        position: 0,
        reason: format!("bad rational: {e}"),
    })
}

/// A finitely supported ℚ-combination of Schur functions. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc { terms: BTreeMap::new() }
    }

    /// s_∅ = 1.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lam: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lam, Rational::one());
        SymFunc { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SymFunc::zero();
        for (lam, c) in terms {
            out.add_term(lam, c);
        }
        out
    }

    pub(crate) fn from_expansion(exp: &SchurExpansion) -> Self {
        SymFunc {
            terms: exp.iter().filter(|(_, c)| **c != 0).map(|(l, &c)| (l.clone(), rational(c))).collect(),
        }
    }

    pub fn add_term(&mut self, lam: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lam);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymFunc, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (lam, c) in &other.terms {
            self.add_term(lam.clone(), c * scale);
        }
    }

    pub fn coeff(&self, lam: &Partition) -> Rational {
        self.terms.get(lam).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest |λ| in the support; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// The degree-`d` component.
    pub fn component(&self, d: usize) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().filter(|(l, _)| l.size() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc { terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    /// Returns `Some((c, λ))` when `self = c·s_λ` for a single partition.
    pub fn as_single_term(&self) -> Option<(&Rational, &Partition)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(l, c)| (c, l))
        } else {
            None
        }
    }

    /// Ring product, by Littlewood–Richardson.
    pub fn product(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (nu, c) in &self.terms {
            let op = mul_schur(nu.clone());
            out.add_scaled(&op.apply(other), c);
        }
        out
    }

    /// JSON object from partition strings to rational strings, keys in graded order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (lam, c) in &self.terms {
            map.insert(lam.to_string(), Value::String(format_rational(c)));
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self, Error> {
        let obj = value.as_object().ok_or_else(|| Error::InvalidArgument("expected a JSON object".into()))?;
        let mut out = SymFunc::zero();
        for (k, v) in obj {
            let lam: Partition = k.parse()?;
            let c = match v {
                Value::String(s) => parse_rational(s)?,
                Value::Number(n) => parse_rational(&n.to_string())?,
                other => return Err(Error::InvalidArgument(format!("bad coefficient {other}"))),
            };
            out.add_term(lam, c);
        }
        Ok(out)
    }
}

/// Coefficient-prefixed sum such as `s[3] + s[2,1] - 1/2 s[1,1]`; zero prints as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(l, c)| (c, format!("s[{l}]"))))
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, basis) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if negative { " - " } else { " + " })?;
        }
        if mag.is_one() {
            write!(f, "{basis}")?;
        } else {
            write!(f, "{mag} {basis}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        self.scale(&-Rational::one())
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl Mul<&SymFunc> for &Rational {
    type Output = SymFunc;

    fn mul(self, rhs: &SymFunc) -> SymFunc {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn no_zero_coefficients() {
        let mut f = SymFunc::schur(p("2"));
        f.add_term(p("2"), rational(-1));
        assert!(f.is_zero());
        assert_eq!(f.degree(), None);
        f.add_term(p("1"), Rational::zero());
        assert!(f.is_zero());
    }

    #[test]
    fn grading() {
        let f = SymFunc::from_terms([(p("2,1"), rational(2)), (p("1"), ratio(1, 3))]);
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.component(1), SymFunc::from_terms([(p("1"), ratio(1, 3))]));
        assert!(f.component(2).is_zero());
    }

    #[test]
    fn json_is_graded_and_round_trips() {
        let f = SymFunc::from_terms([
            (p("3"), rational(1)),
            (p("1,1,1"), ratio(-1, 2)),
            (Partition::empty(), rational(4)),
            (p("2,1"), rational(1)),
        ]);
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(text, r#"{"∅":"4","1,1,1":"-1/2","2,1":"1","3":"1"}"#);
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn display() {
        let f = SymFunc::from_terms([(p("2"), rational(1)), (p("1,1"), rational(-1))]);
        assert_eq!(f.to_string(), "-s[1,1] + s[2]");
        assert_eq!(SymFunc::zero().to_string(), "0");
        assert_eq!(SymFunc::from_terms([(p("1"), ratio(3, 2))]).to_string(), "3/2 s[1]");
    }

    #[test]
    fn ring_product() {
        let s1 = SymFunc::schur(p("1"));
        let sq = s1.product(&s1);
        assert_eq!(sq, SymFunc::from_terms([(p("2"), rational(1)), (p("1,1"), rational(1))]));
    }
}
