//! Three independent tables for the coefficients of t^n q^{k/2} in
//! Σ_n t^n q^{n²/2} / Π_j (1 − q^j) = Π_j (1 + t q^{j−1/2})(1 + t⁻¹ q^{j−1/2}).

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::json;

use super::report::{IdentityCase, Report, Tally};
use crate::fock::count_basis;

/// Coefficient table keyed by (n, k) for the monomial t^n q^{k/2}.
pub type JacobiTable = BTreeMap<(i64, u64), u64>;

/// Coefficients of 1/Π_{j≥1}(1 − q^j) up to q^max, as a product of geometric series.
fn inverse_euler_product(max: usize) -> Vec<u64> {
    let mut series = vec![0u64; max + 1];
    series[0] = 1;
    for j in 1..=max {
        for d in j..=max {
            series[d] += series[d - j];
        }
    }
    series
}

/// Σ_n t^n q^{n²/2} / Π(1 − q^j).
pub fn bosonic_table(q_halves_max: u64, t_max: i64) -> JacobiTable {
    let p = inverse_euler_product((q_halves_max / 2) as usize);
    let mut out = JacobiTable::new();
    for n in -t_max..=t_max {
        for k in 0..=q_halves_max {
            let sea = (n * n) as u64;
            let c = if k >= sea && (k - sea) % 2 == 0 { p[((k - sea) / 2) as usize] } else { 0 };
            out.insert((n, k), c);
        }
    }
    out
}

/// The truncated product Π_{j ≤ J}(1 + t q^{j−1/2})(1 + t⁻¹ q^{j−1/2}). A factor
/// with j > J only touches q-exponents above the window, so J = ⌈K/2⌉ is exact.
pub fn fermionic_table(q_halves_max: u64, t_max: i64) -> JacobiTable {
    let mut poly: BTreeMap<(i64, u64), u64> = BTreeMap::from([((0, 0), 1)]);
    let top = q_halves_max.div_ceil(2);
    for j in 1..=top {
        let w = 2 * j - 1;
        for dt in [1i64, -1] {
            let mut next = poly.clone();
            for (&(n, k), &c) in &poly {
                if k + w <= q_halves_max {
                    *next.entry((n + dt, k + w)).or_insert(0) += c;
                }
            }
            poly = next;
        }
    }
    let mut out = JacobiTable::new();
    for n in -t_max..=t_max {
        for k in 0..=q_halves_max {
            out.insert((n, k), poly.get(&(n, k)).copied().unwrap_or(0));
        }
    }
    out
}

/// Number of Fock basis vectors of charge n and q-weight k/2.
pub fn fock_table(q_halves_max: u64, t_max: i64) -> JacobiTable {
    let mut out = JacobiTable::new();
    for n in -t_max..=t_max {
        for k in 0..=q_halves_max {
            out.insert((n, k), count_basis(n, k));
        }
    }
    out
}

pub fn jacobi_check(q_halves_max: u64, t_max: i64) -> Report {
    let started = Instant::now();
    let (b, f, c) = (
        bosonic_table(q_halves_max, t_max),
        fermionic_table(q_halves_max, t_max),
        fock_table(q_halves_max, t_max),
    );
    let mut tally = Tally::new();
    for (key, &x) in &b {
        let (y, z) = (f[key], c[key]);
        tally.record(
            x == y && y == z,
            || format!("t^{} q^({}/2)", key.0, key.1),
            || json!(x),
            || json!({"fermionic": y, "fock": z}),
        );
    }
    let case = IdentityCase::new("jacobi", q_halves_max as usize).with("t_max", t_max);
    tally.finish(case, started)
}
