//! The charged fermionic Fock space on Maya diagrams.
//!
//! Conventions: the basis vector `(m, λ)` has occupied set
//! `O(m, λ) = { λ_k − k + m : k ≥ 1 }`. The generators ψ_i and ψ*_i act at
//! position `−1 − i`; ψ_i fills it, ψ*_i empties it, and either carries the
//! sign `(−1)^{#occupied positions above}`. So ψ_i (i ≥ 0) and ψ*_i (i < 0)
//! kill `vacuum(0)`, and ψ_i raises the charge by one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::Error;
use crate::partitions::Partition;
use crate::symring::{format_rational, parse_rational, write_terms, Rational};

/// A basis vector of 𝐅: a charge `m` and a partition `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedPartition {
    pub charge: i64,
    pub shape: Partition,
}

impl ChargedPartition {
    pub fn new(charge: i64, shape: Partition) -> Self {
        ChargedPartition { charge, shape }
    }

    /// |λ|.
    pub fn energy(&self) -> usize {
        self.shape.size()
    }

    /// Twice the q-weight |λ| + m²/2.
    pub fn q_weight_halves(&self) -> u64 {
        2 * self.shape.size() as u64 + (self.charge * self.charge) as u64
    }

    pub fn maya(&self) -> MayaDiagram {
        MayaDiagram::from_charged(self)
    }
}

/// Text form `m|λ`, e.g. `2|3,1` or `-1|∅`.
impl fmt::Display for ChargedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.charge, self.shape)
    }
}

impl FromStr for ChargedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (m, lam) = s.split_once('|').ok_or_else(|| Error::Parse {
            input: s.to_string(),
            position: 0,
            reason: "expected charge|partition".into(),
        })?;
        let charge = m.trim().parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            position: 0,
            reason: format!("bad charge {m:?}"),
        })?;
        let shape = lam.parse().map_err(|e| match e {
            Error::Parse { position, reason, .. } => {
                Error::Parse { input: s.to_string(), position: position + m.len() + 1, reason }
            }
            other => other,
        })?;
        Ok(ChargedPartition { charge, shape })
    }
}

/// Occupied set of a charged partition: everything below `floor` is occupied,
/// `floor` itself is not (unless `upper` is empty), and `upper` lists the
/// occupied positions above it in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MayaDiagram {
    floor: i64,
    upper: Vec<i64>,
}

impl MayaDiagram {
    pub fn from_charged(b: &ChargedPartition) -> Self {
        let len = b.shape.len() as i64;
        let upper = b.shape.parts().iter().enumerate().map(|(k, &p)| p as i64 - (k as i64 + 1) + b.charge).collect();
        MayaDiagram { floor: b.charge - len, upper }
    }

    /// Reads the charged partition back off the occupied set.
    pub fn to_charged(&self) -> ChargedPartition {
        let charge = self.floor + self.upper.len() as i64;
        let parts = self.upper.iter().enumerate().map(|(k, &x)| (x + k as i64 + 1 - charge) as usize).collect();
        ChargedPartition { charge, shape: Partition::from_decreasing(parts) }
    }

    pub fn is_occupied(&self, x: i64) -> bool {
        x < self.floor || self.upper.contains(&x)
    }

    /// Number of occupied positions strictly greater than `x`.
    pub fn occupied_above(&self, x: i64) -> usize {
        let implicit = if x < self.floor { (self.floor - x - 1) as usize } else { 0 };
        implicit + self.upper.iter().filter(|&&y| y > x).count()
    }

    /// Largest occupied position.
    pub fn top(&self) -> i64 {
        self.upper.first().copied().unwrap_or(self.floor - 1)
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Fills position `x`; `None` if it is already occupied.
    pub fn create(&self, x: i64) -> Option<(MayaDiagram, bool)> {
        if self.is_occupied(x) {
            return None;
        }
        let negative = self.occupied_above(x) % 2 == 1;
        let mut upper = self.upper.clone();
        let at = upper.iter().position(|&y| y < x).unwrap_or(upper.len());
        upper.insert(at, x);
        Some((MayaDiagram { floor: self.floor, upper }, negative))
    }

    /// Empties position `x`; `None` if it is vacant.
    pub fn annihilate(&self, x: i64) -> Option<(MayaDiagram, bool)> {
        if !self.is_occupied(x) {
            return None;
        }
        let negative = self.occupied_above(x) % 2 == 1;
        let next = if x >= self.floor {
            MayaDiagram { floor: self.floor, upper: self.upper.iter().copied().filter(|&y| y != x).collect() }
        } else {
            let mut upper = self.upper.clone();
            upper.extend((x + 1..self.floor).rev());
            MayaDiagram { floor: x, upper }
        };
        Some((next, negative))
    }
}

/// A finitely supported ℚ-combination of charged partitions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<ChargedPartition, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(b: ChargedPartition) -> Self {
        let mut v = FockVector::zero();
        v.add_term(b, Rational::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ChargedPartition, Rational)>) -> Self {
        let mut v = FockVector::zero();
        for (b, c) in terms {
            v.add_term(b, c);
        }
        v
    }

    pub fn add_term(&mut self, b: ChargedPartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(b.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &Rational) {
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn coeff(&self, b: &ChargedPartition) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChargedPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Distinct charges in the support, ascending.
    pub fn charges(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.terms.keys().map(|b| b.charge).collect();
        out.dedup();
        out
    }

    /// Applies a basis-level map linearly.
    pub fn map_basis(&self, f: impl Fn(&ChargedPartition) -> FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (b, c) in &self.terms {
            map.insert(b.to_string(), Value::String(format_rational(c)));
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self, Error> {
        let obj = value.as_object().ok_or_else(|| Error::InvalidArgument("expected a JSON object".into()))?;
        let mut out = FockVector::zero();
        for (k, v) in obj {
            let c = v.as_str().ok_or_else(|| Error::InvalidArgument(format!("bad coefficient {v}")))?;
            out.add_term(k.parse()?, parse_rational(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(b, c)| (c, format!("[{b}]"))))
    }
}

/// The vacuum `(m, ∅)`.
pub fn vacuum(m: i64) -> FockVector {
    FockVector::basis(ChargedPartition::new(m, Partition::empty()))
}

fn position(i: i64) -> i64 {
    -1 - i
}

fn signed(d: MayaDiagram, negative: bool) -> FockVector {
    let mut v = FockVector::zero();
    v.add_term(d.to_charged(), if negative { -Rational::one() } else { Rational::one() });
    v
}

/// ψ_i: fills position −1−i.
pub fn psi(i: i64, v: &FockVector) -> FockVector {
    v.map_basis(|b| match b.maya().create(position(i)) {
        Some((d, neg)) => signed(d, neg),
        None => FockVector::zero(),
    })
}

/// ψ*_i: empties position −1−i.
pub fn psi_star(i: i64, v: &FockVector) -> FockVector {
    v.map_basis(|b| match b.maya().annihilate(position(i)) {
        Some((d, neg)) => signed(d, neg),
        None => FockVector::zero(),
    })
}

fn positive(n: i64, what: &str) -> Result<(), Error> {
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("{what}: n must be at least 1, got {n}")));
    }
    Ok(())
}

/// p_n = Σ_i ψ_i ψ*_{i+n}. Only the finitely many i whose removal position is
/// occupied and whose creation position is vacant contribute.
pub fn fermion_p(n: i64, v: &FockVector) -> Result<FockVector, Error> {
    positive(n, "fermion_p")?;
    Ok(v.map_basis(|b| {
        let d = b.maya();
        let basis = FockVector::basis(b.clone());
        let mut out = FockVector::zero();
        // removal at x = −1−(i+n), creation at x + n ≥ floor
        for x in d.floor() - n..=d.top() {
            let i = -1 - x - n;
            out.add_scaled(&psi(i, &psi_star(i + n, &basis)), &Rational::one());
        }
        out
    }))
}

/// p*_n = Σ_i ψ_i ψ*_{i−n}.
pub fn fermion_p_star(n: i64, v: &FockVector) -> Result<FockVector, Error> {
    positive(n, "fermion_p_star")?;
    Ok(v.map_basis(|b| {
        let d = b.maya();
        let basis = FockVector::basis(b.clone());
        let mut out = FockVector::zero();
        // removal at y = −1−(i−n), creation at y − n ≥ floor
        for y in d.floor() + n..=d.top() {
            let i = n - 1 - y;
            out.add_scaled(&psi(i, &psi_star(i - n, &basis)), &Rational::one());
        }
        out
    }))
}

/// The automorphism s: `(m, λ) ↦ (m + 1, λ)`.
pub fn charge_shift(v: &FockVector) -> FockVector {
    shift_by(v, 1)
}

/// s⁻¹: `(m, λ) ↦ (m − 1, λ)`.
pub fn charge_shift_inverse(v: &FockVector) -> FockVector {
    shift_by(v, -1)
}

fn shift_by(v: &FockVector, k: i64) -> FockVector {
    FockVector::from_terms(v.terms().map(|(b, c)| (ChargedPartition::new(b.charge + k, b.shape.clone()), c.clone())))
}

/// Basis vectors of charge `m` and energy `energy`.
pub fn basis_of(m: i64, energy: usize) -> Vec<ChargedPartition> {
    Partition::all_of_size(energy).into_iter().map(|lam| ChargedPartition::new(m, lam)).collect()
}

/// Basis vectors with |charge| ≤ `max_charge` and energy ≤ `max_energy`.
pub fn basis_window(max_charge: i64, max_energy: usize) -> Vec<ChargedPartition> {
    (-max_charge..=max_charge).flat_map(|m| (0..=max_energy).flat_map(move |e| basis_of(m, e))).collect()
}

/// Number of basis vectors of charge `m` with q-weight `energy_halves / 2`.
pub fn count_basis(m: i64, energy_halves: u64) -> u64 {
    let sea = (m * m) as u64;
    if energy_halves < sea || (energy_halves - sea) % 2 == 1 {
        return 0;
    }
    let energy = ((energy_halves - sea) / 2) as usize;
    basis_of(m, energy).iter().filter(|b| b.q_weight_halves() == energy_halves).count() as u64
}
