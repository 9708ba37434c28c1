//! The acceptance gate: every criterion at its stated range, one line each.
//!
//! Run with `cargo test -p fockforge --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use fockforge::verifier::{run_case, IdentityCase, Report};

fn case(id: &str, window: usize, params: &[(&str, i64)]) -> IdentityCase {
    params.iter().fold(IdentityCase::new(id, window), |c, &(k, v)| c.with(k, v))
}

/// Runs the cases, prints the verdict line and fails the test on any miss.
fn criterion(name: &str, limit: Option<Duration>, cases: &[IdentityCase]) {
    let started = Instant::now();
    let reports: Vec<Report> = cases.iter().map(|c| run_case(c).expect("registered case")).collect();
    let elapsed = started.elapsed();
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    let failures: Vec<&Report> = reports.iter().filter(|r| !r.passed()).collect();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let ok = failures.is_empty() && in_time;
    let budget = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
    println!(
        "[{}] {name}: {checked} checks in {:.2}s{budget}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    for r in &failures {
        println!("    {}", r.to_text());
    }
    assert!(failures.is_empty(), "{name}: {} case(s) failed", failures.len());
    assert!(in_time, "{name}: took {elapsed:?}, over the limit");
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn jacobi_triple_product() {
    criterion("Jacobi triple product, |n| <= 5, q-halves <= 10", secs(5), &[case("jacobi", 10, &[("t_max", 5)])]);
}

#[test]
fn clifford_relations() {
    criterion(
        "Clifford relations, |charge| <= 3, energy <= 5, |i|,|j| <= 5",
        secs(10),
        &[case("clifford", 5, &[("charge", 3), ("bound", 5)])],
    );
}

#[test]
fn heisenberg_both_sides() {
    criterion(
        "Heisenberg relations, bosonic and fermionic, D = 8, m,k <= 5",
        secs(10),
        &[case("heisenberg", 8, &[("bound", 5)]), case("heisenberg-fermion", 8, &[("bound", 5), ("charge", 2)])],
    );
}

#[test]
fn generating_functions_and_koszul() {
    criterion(
        "generating functions n <= 8, Koszul sums 1 <= k <= 10",
        None,
        &[case("symid", 8, &[]), case("koz2", 4, &[("k_max", 10)]), case("koz3", 10, &[("k_max", 10)])],
    );
}

#[test]
fn half_vertex_identities() {
    let cases: Vec<IdentityCase> = ["ex1", "ex2", "ex3", "ex4"].iter().map(|id| case(id, 8, &[("bound", 5)])).collect();
    criterion("half-vertex identities, D = 8, m,n <= 5", None, &cases);
}

#[test]
fn vertex_anticommutation() {
    let cases: Vec<IdentityCase> = ["v1", "v2", "v3"].iter().map(|id| case(id, 6, &[("bound", 4)])).collect();
    criterion("vertex anticommutation, D = 6, |a|,|b| <= 4", secs(30), &cases);
}

#[test]
fn z_character_sum() {
    criterion("sum of chi(Z_{a+i,b-i}), D = 5, |a|,|b| <= 3", None, &[case("zchar", 5, &[("bound", 3)])]);
}

#[test]
fn socle_model() {
    let mut cases = vec![case("socle", 4, &[]), case("hom-dim", 0, &[("bound", 4)])];
    cases.extend(["exx1", "exx2", "exx3", "exx4"].iter().map(|id| case(id, 0, &[("bound", 5)])));
    criterion("socle layers, Hom dichotomy |lam|,|mu| <= 4, exx forms m,n <= 5", None, &cases);
}

#[test]
fn hook_identity() {
    criterion(
        "hook identity and auxiliary hook sums, k,m <= 5",
        None,
        &[case("hookid", 0, &[("bound", 5)]), case("auxp", 0, &[("bound", 5)])],
    );
}

#[test]
fn boson_fermion_square() {
    criterion(
        "vertex-built Clifford generators vs Maya diagrams, |charge| <= 2, energy <= 4, |i| <= 4",
        None,
        &[case("bf-square", 4, &[("charge", 2), ("bound", 4)])],
    );
}

#[test]
fn euler_shadow() {
    criterion("X_a s_lam is 0 or a signed Schur function, |lam| <= 5, |a| <= 4", None, &[case("shadow", 5, &[("bound", 4)])]);
}

#[test]
fn oracle_equivalence() {
    criterion(
        "LR vs tableaux |lam| <= 8, products vs monomials |mu|+|nu| <= 8",
        secs(60),
        &[case("lr-oracle", 8, &[]), case("schur-monomial", 8, &[])],
    );
}
