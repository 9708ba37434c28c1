//! Partitions, Young diagram combinatorics and Littlewood–Richardson coefficients.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts. The
//! ordering used throughout the crate (and in every serialized form) is
//! *graded*: first by size, then lexicographically by the part sequence.

mod lr;
mod ribbon;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub use lr::{lr_coefficient, pieri_e, pieri_h, skew_expansion, SchurExpansion};
pub(crate) use lr::schur_product;
pub use ribbon::{add_ribbons, remove_ribbons};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition ∅.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, validating that the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition { parts, reason: format!("part {} is zero", pos + 1) });
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: format!("parts {} and {} increase", pos + 1, pos + 2),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary nonnegative entries: zeros are dropped
    /// and the remaining entries sorted into decreasing order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Strips trailing zeros from a weakly decreasing sequence.
    ///
    /// Panics if the sequence is not weakly decreasing.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "not a partition: {parts:?}");
        Partition { parts }
    }

    /// The single-row partition (n); ∅ for n = 0.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition (1^n); ∅ for n = 0.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook (arm, 1^leg) of size arm + leg. `arm` must be positive.
    pub fn hook(arm: usize, leg: usize) -> Self {
        assert!(arm > 0, "hook arm must be positive");
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat(1).take(leg));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Cell-wise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// If `self` is a hook (arm, 1^leg), returns `(arm, leg)`.
    pub fn as_hook(&self) -> Option<(usize, usize)> {
        match self.parts.split_first() {
            Some((&arm, rest)) if rest.iter().all(|&p| p == 1) => Some((arm, rest.len())),
            _ => None,
        }
    }

    /// Cells of the diagram as (row, column) pairs, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// All partitions of `n`, in reverse lexicographic order ((n) first).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of size at most `max`, in graded order.
    pub fn all_up_to(max: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=max).flat_map(Partition::all_of_size).collect();
        out.sort();
        out
    }

    /// All partitions of size `n` contained in `self`.
    pub fn sub_partitions_of_size(&self, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_contained(&self.parts, 0, n, usize::MAX, &mut current, &mut out);
        out
    }

    /// All partitions of size `self.size() + n` containing `self`.
    pub fn super_partitions_adding(&self, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_containing(&self.parts, 0, n, usize::MAX, &mut current, &mut out);
        out
    }
}

fn fill_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

fn fill_contained(
    outer: &[usize],
    row: usize,
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if row >= outer.len() {
        return;
    }
    let cap: usize = outer[row..].iter().map(|&p| p.min(max_part)).sum();
    if cap < remaining {
        return;
    }
    for p in (1..=outer[row].min(max_part).min(remaining)).rev() {
        current.push(p);
        fill_contained(outer, row + 1, remaining - p, p, current, out);
        current.pop();
    }
}

fn fill_containing(
    inner: &[usize],
    row: usize,
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let base = inner.get(row).copied().unwrap_or(0);
    if row >= inner.len() && remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if base > max_part {
        return;
    }
    let lo = base.max(if row >= inner.len() { 1 } else { 0 });
    let hi = max_part.min(base + remaining);
    for p in lo..=hi {
        current.push(p);
        fill_containing(inner, row + 1, remaining - (p - base), p, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text form: comma-separated parts; ∅ is written `∅`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `"3,1,1"`; the empty string, `"-"` and `"∅"` all denote ∅.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = s.len() - s.trim_start().len();
        for piece in trimmed.split(',') {
            let token = piece.trim();
            let value: usize = token.parse().map_err(|_| Error::Parse {
                input: s.to_string(),
                position: offset + (piece.len() - piece.trim_start().len()),
                reason: format!("expected a positive integer, found {token:?}"),
            })?;
            parts.push(value);
            offset += piece.len() + 1;
        }
        Partition::new(parts).map_err(|e| Error::Parse { input: s.to_string(), position: 0, reason: e.to_string() })
    }
}

/// The hooks of size `k`, `[(k), (k-1,1), ..., (1^k)]`, leg length ascending.
pub fn hooks(k: usize) -> Result<Vec<Partition>, Error> {
    if k == 0 {
        return Err(Error::InvalidArgument("hooks: k must be at least 1".into()));
    }
    Ok((0..k).map(|i| Partition::hook(k - i, i)).collect())
}

/// The number of partitions of `n`, by enumeration.
pub fn partition_count(n: usize) -> usize {
    Partition::all_of_size(n).len()
}
