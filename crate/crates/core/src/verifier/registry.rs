use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use num_traits::Signed;
use serde_json::{json, Value};

use super::jacobi::jacobi_check;
use super::report::{IdentityCase, Report, Tally};
use crate::category::{
    auxp_expected, auxp_sum, dual_class, expand_injectives, hom_dim, hook_P, hook_P_star, hook_identity_check,
    injective_class, simple_in_injectives, socle_layer, zchar_sum, ExSequence, KClass, SimpleLabel,
};
use crate::correspondence::{clifford_psi, clifford_psi_star, vertex_X, VertexRelation};
use crate::error::Error;
use crate::fock::{basis_window, fermion_p, fermion_p_star, psi, psi_star, FockVector};
use crate::oracle;
use crate::partitions::{lr_coefficient, schur_product, Partition};
use crate::symring::{
    commutator, gf_e, gf_h, hall_inner, mul_e, mul_h, mul_p, rational, skew_e, skew_h, skew_p, LinOp, SymFunc,
};

/// A parameter a case accepts. `default: None` means the parameter is optional
/// and selects a single instance when present.
#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: Option<i64>,
    pub min: i64,
}

const fn param(name: &'static str, default: i64, min: i64) -> ParamSpec {
    ParamSpec { name, default: Some(default), min }
}

const fn optional(name: &'static str, min: i64) -> ParamSpec {
    ParamSpec { name, default: None, min }
}

/// Parameters as seen by a running case.
struct Ctx {
    window: usize,
    params: BTreeMap<String, i64>,
}

impl Ctx {
    fn get(&self, key: &str) -> i64 {
        self.params[key]
    }

    fn opt(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }

    /// A single value if `key` was given, else the whole range.
    fn single_or(&self, key: &str, range: std::ops::RangeInclusive<i64>) -> Vec<i64> {
        match self.opt(key) {
            Some(v) => vec![v],
            None => range.collect(),
        }
    }
}

pub struct Entry {
    pub id: &'static str,
    pub summary: &'static str,
    pub window: usize,
    pub params: &'static [ParamSpec],
    run: fn(&Ctx) -> Tally,
}

const NO_MIN: i64 = i64::MIN;

/// Every registered identity, sorted by id. Defaults are the full acceptance ranges.
pub static REGISTRY: &[Entry] = &[
    Entry {
        id: "adjoint",
        summary: "Hall adjointness of X_a against its adjoint built from the defining sum",
        window: 6,
        params: &[param("bound", 4, 0)],
        run: run_adjoint,
    },
    Entry {
        id: "auxp",
        summary: "alternating hook sums of LR coefficients match the sign law",
        window: 0,
        params: &[param("bound", 5, 0)],
        run: run_auxp,
    },
    Entry {
        id: "bf-square",
        summary: "vertex-built Clifford generators equal the Maya-diagram ones",
        window: 4,
        params: &[param("charge", 2, 0), param("bound", 4, 0)],
        run: run_bf_square,
    },
    Entry {
        id: "clifford",
        summary: "Clifford relations for the Maya-diagram generators",
        window: 5,
        params: &[param("charge", 3, 0), param("bound", 5, 0)],
        run: run_clifford,
    },
    Entry {
        id: "clifford-vertex",
        summary: "Clifford relations for the vertex-built generators",
        window: 3,
        params: &[param("charge", 2, 0), param("bound", 3, 0)],
        run: run_clifford_vertex,
    },
    Entry { id: "ex1", summary: "h*_m h_n = h_n h*_m + h*_{m-1} h_{n-1}", window: 8, params: EX_PARAMS, run: run_ex1 },
    Entry { id: "ex2", summary: "e*_m e_n = e_n e*_m + e*_{m-1} e_{n-1}", window: 8, params: EX_PARAMS, run: run_ex2 },
    Entry { id: "ex3", summary: "e*_m h_n = h_n e*_m + h_{n-1} e*_{m-1}", window: 8, params: EX_PARAMS, run: run_ex3 },
    Entry { id: "ex4", summary: "h*_m e_n = e_n h*_m + e_{n-1} h*_{m-1}", window: 8, params: EX_PARAMS, run: run_ex4 },
    Entry {
        id: "exx1",
        summary: "[S^m x (S^n)_*] - [S^{m-1} x (S^{n-1})_*] = [V_{m,n}]",
        window: 0,
        params: &[param("bound", 5, 0)],
        run: run_exx1,
    },
    Entry {
        id: "exx2",
        summary: "the same with exterior powers",
        window: 0,
        params: &[param("bound", 5, 0)],
        run: run_exx2,
    },
    Entry {
        id: "exx3",
        summary: "[Lambda^m x (S^n)_*] = [V_{1^m,n}] + [V_{1^{m-1},n-1}]",
        window: 0,
        params: &[param("bound", 5, 0)],
        run: run_exx3,
    },
    Entry {
        id: "exx4",
        summary: "[S^m x (Lambda^n)_*] = [V_{m,1^n}] + [V_{m-1,1^{n-1}}]",
        window: 0,
        params: &[param("bound", 5, 0)],
        run: run_exx4,
    },
    Entry {
        id: "heisenberg",
        summary: "[p*_m, p_k] = k delta_{mk} and the power sums commute",
        window: 8,
        params: &[param("bound", 5, 0), optional("m", 1), optional("k", 1)],
        run: run_heisenberg,
    },
    Entry {
        id: "heisenberg-fermion",
        summary: "the same relations for the fermionic power sums",
        window: 8,
        params: &[param("bound", 5, 0), param("charge", 2, 0), optional("m", 1), optional("k", 1)],
        run: run_heisenberg_fermion,
    },
    Entry {
        id: "hom-dim",
        summary: "Hom dimensions between injectives one box apart are 0 or 1",
        window: 0,
        params: &[param("bound", 4, 0)],
        run: run_hom_dim,
    },
    Entry {
        id: "hookid",
        summary: "the reduced hook classes sum to k delta_{km} [C]",
        window: 0,
        params: &[param("bound", 5, 0)],
        run: run_hookid,
    },
    Entry {
        id: "jacobi",
        summary: "bosonic series, fermionic product and Fock basis counts agree",
        window: 10,
        params: &[param("t_max", 5, 0)],
        run: run_jacobi,
    },
    Entry {
        id: "koz2",
        summary: "sum_{m+n=k} (-1)^m h_n e_m = 0",
        window: 4,
        params: &[param("k_max", 10, 0)],
        run: run_koz2,
    },
    Entry {
        id: "koz3",
        summary: "sum_{m+n=k} (-1)^m h*_n e*_m = 0",
        window: 10,
        params: &[param("k_max", 10, 0)],
        run: run_koz3,
    },
    Entry {
        id: "lr-oracle",
        summary: "LR coefficients against LR-tableau enumeration",
        window: 8,
        params: &[],
        run: run_lr_oracle,
    },
    Entry {
        id: "mn-hook",
        summary: "alternating hook sums equal the power-sum operators",
        window: 7,
        params: &[param("bound", 7, 0)],
        run: run_mn_hook,
    },
    Entry {
        id: "schur-monomial",
        summary: "Schur products against monomial expansion",
        window: 8,
        params: &[],
        run: run_schur_monomial,
    },
    Entry {
        id: "shadow",
        summary: "X_a s_lam is zero or plus/minus one Schur function",
        window: 5,
        params: &[param("bound", 4, 0)],
        run: run_shadow,
    },
    Entry {
        id: "socle",
        summary: "socle layers, unitriangularity and resolutions of simples",
        window: 4,
        params: &[],
        run: run_socle,
    },
    Entry {
        id: "symid",
        summary: "power-sum generating functions give h_n and e_n",
        window: 8,
        params: &[],
        run: run_symid,
    },
    Entry { id: "v1", summary: "X_a X_b + X_{b-1} X_{a+1} = 0", window: 6, params: V_PARAMS, run: run_v1 },
    Entry { id: "v2", summary: "X*_a X*_b + X*_{b-1} X*_{a+1} = 0", window: 6, params: V_PARAMS, run: run_v2 },
    Entry {
        id: "v3",
        summary: "X_a X*_b + X*_{b+1} X_{a-1} = delta_{a+b,0} Id",
        window: 6,
        params: V_PARAMS,
        run: run_v3,
    },
    Entry {
        id: "zchar",
        summary: "sum_i chi(Z_{a+i,b-i}) = delta_{a+b,0} Id",
        window: 5,
        params: &[param("bound", 3, 0), optional("a", NO_MIN), optional("b", NO_MIN)],
        run: run_zchar,
    },
];

const EX_PARAMS: &[ParamSpec] = &[param("bound", 5, 0), optional("m", 0), optional("n", 0)];
const V_PARAMS: &[ParamSpec] = &[param("bound", 4, 0), optional("a", NO_MIN), optional("b", NO_MIN)];

pub fn lookup(id: &str) -> Result<&'static Entry, Error> {
    REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownCase(id.to_string()))
}

/// A case with the registry's default window and parameters.
pub fn default_case(id: &str) -> Result<IdentityCase, Error> {
    let entry = lookup(id)?;
    let mut case = IdentityCase::new(id, entry.window);
    for p in entry.params {
        if let Some(d) = p.default {
            case.params.insert(p.name.to_string(), d);
        }
    }
    Ok(case)
}

/// Fills in defaults and rejects unknown or out-of-range parameters.
fn resolve(entry: &Entry, case: &IdentityCase) -> Result<IdentityCase, Error> {
    let invalid = |reason: String| Error::InvalidParams { case: case.id.clone(), reason };
    for key in case.params.keys() {
        if !entry.params.iter().any(|p| p.name == key) {
            let known: Vec<&str> = entry.params.iter().map(|p| p.name).collect();
            return Err(invalid(format!("unknown parameter {key:?}; accepted: {known:?}")));
        }
    }
    let mut resolved = IdentityCase::new(entry.id, case.window);
    for p in entry.params {
        match case.params.get(p.name).copied().or(p.default) {
            Some(v) if v < p.min => return Err(invalid(format!("{} must be at least {}, got {v}", p.name, p.min))),
            Some(v) => {
                resolved.params.insert(p.name.to_string(), v);
            }
            None => {}
        }
    }
    Ok(resolved)
}

/// Runs one case. Deterministic: the same case always yields the same report
/// apart from `elapsed`.
pub fn run_case(case: &IdentityCase) -> Result<Report, Error> {
    let entry = lookup(&case.id)?;
    let resolved = resolve(entry, case)?;
    let started = Instant::now();
    let ctx = Ctx { window: resolved.window, params: resolved.params.clone() };
    Ok((entry.run)(&ctx).finish(resolved, started))
}

/// Overrides applied to every case of a batch run.
#[derive(Clone, Debug, Default)]
pub struct Bounds {
    pub window: Option<usize>,
    pub bound: Option<i64>,
}

/// Runs the whole registry, sorted by id.
pub fn run_all(bounds: &Bounds) -> Result<Vec<Report>, Error> {
    let cases: Vec<IdentityCase> = REGISTRY
        .iter()
        .map(|e| {
            let mut case = default_case(e.id)?;
            if let Some(w) = bounds.window {
                case.window = w;
            }
            if let (Some(b), true) = (bounds.bound, case.params.contains_key("bound")) {
                case.params.insert("bound".into(), b);
            }
            Ok(case)
        })
        .collect::<Result<_, Error>>()?;
    let mut reports: Vec<Report> = cases.par_iter().map(run_case).collect::<Result<_, Error>>()?;
    reports.sort_by(|a, b| a.case.id.cmp(&b.case.id));
    Ok(reports)
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn fock_json(v: &FockVector) -> Value {
    v.to_json()
}

fn sym_json(f: &SymFunc) -> Value {
    f.to_json()
}

fn k_json(c: &KClass) -> Value {
    c.to_json()
}

fn indices(bound: i64) -> Vec<(i64, i64)> {
    (-bound..=bound).flat_map(|i| (-bound..=bound).map(move |j| (i, j))).collect()
}

// Operator identities

fn run_adjoint(ctx: &Ctx) -> Tally {
    let d = ctx.window;
    let basis = Partition::all_up_to(d);
    let parts: Vec<Tally> = (-ctx.get("bound")..=ctx.get("bound"))
        .into_par_iter()
        .map(|a| {
            let adjoint = LinOp::combination(
                (0.max(-a)..=d as i64).map(|q| (rational(sign(q)), &mul_e(q) * &skew_h(a + q))).collect(),
            );
            let mut t = Tally::new();
            for lam in &basis {
                let image = vertex_X(a).apply_basis(lam);
                for mu in basis.iter().filter(|mu| mu.size() as i64 == lam.size() as i64 + a) {
                    let lhs = hall_inner(&image, &SymFunc::schur(mu.clone()));
                    let rhs = hall_inner(&SymFunc::schur(lam.clone()), &adjoint.apply_basis(mu));
                    t.check_eq(|| format!("a={a} <X s[{lam}], s[{mu}]>"), &lhs, &rhs, |x| json!(x.to_string()));
                }
            }
            t
        })
        .collect();
    Tally::merge_all(parts)
}

fn run_ex(ctx: &Ctx, seq: ExSequence) -> Tally {
    let bound = ctx.get("bound");
    let pairs: Vec<(i64, i64)> = ctx
        .single_or("m", 0..=bound)
        .into_iter()
        .flat_map(|m| ctx.single_or("n", 0..=bound).into_iter().map(move |n| (m, n)))
        .collect();
    Tally::merge_all(pairs.par_iter().map(|&(m, n)| {
        let (lhs, rhs) = seq.sides(m, n);
        let mut t = Tally::new();
        t.check_ops(&format!("m={m},n={n}"), &lhs, &rhs, ctx.window);
        t
    }).collect::<Vec<_>>())
}

fn run_ex1(ctx: &Ctx) -> Tally {
    run_ex(ctx, ExSequence::Ex1)
}

fn run_ex2(ctx: &Ctx) -> Tally {
    run_ex(ctx, ExSequence::Ex2)
}

fn run_ex3(ctx: &Ctx) -> Tally {
    run_ex(ctx, ExSequence::Ex3)
}

fn run_ex4(ctx: &Ctx) -> Tally {
    run_ex(ctx, ExSequence::Ex4)
}

fn power_pairs(ctx: &Ctx) -> Vec<(i64, i64)> {
    let bound = ctx.get("bound");
    ctx.single_or("m", 1..=bound)
        .into_iter()
        .flat_map(|m| ctx.single_or("k", 1..=bound).into_iter().map(move |k| (m, k)))
        .collect()
}

fn run_heisenberg(ctx: &Ctx) -> Tally {
    let pairs = power_pairs(ctx);
    Tally::merge_all(pairs.par_iter().map(|&(m, k)| {
        let (pm, pk) = (mul_p(m).unwrap(), mul_p(k).unwrap());
        let (sm, sk) = (skew_p(m).unwrap(), skew_p(k).unwrap());
        let delta = if m == k { LinOp::identity().scale(rational(k)) } else { LinOp::zero() };
        let mut t = Tally::new();
        t.check_ops(&format!("[p*_{m}, p_{k}]"), &commutator(&sm, &pk), &delta, ctx.window);
        t.check_ops(&format!("[p_{m}, p_{k}]"), &commutator(&pm, &pk), &LinOp::zero(), ctx.window);
        t.check_ops(&format!("[p*_{m}, p*_{k}]"), &commutator(&sm, &sk), &LinOp::zero(), ctx.window);
        t
    }).collect::<Vec<_>>())
}

fn run_heisenberg_fermion(ctx: &Ctx) -> Tally {
    let pairs = power_pairs(ctx);
    let basis = basis_window(ctx.get("charge"), ctx.window);
    Tally::merge_all(basis.par_iter().map(|b| {
        let v = FockVector::basis(b.clone());
        let mut t = Tally::new();
        for &(m, k) in &pairs {
            let up = |n, x: &FockVector| fermion_p(n, x).unwrap();
            let down = |n, x: &FockVector| fermion_p_star(n, x).unwrap();
            let mut comm = down(m, &up(k, &v));
            comm.add_scaled(&up(k, &down(m, &v)), &rational(-1));
            let expected = if m == k { FockVector::from_terms([(b.clone(), rational(k))]) } else { FockVector::zero() };
            t.check_eq(|| format!("[p*_{m}, p_{k}] on [{b}]"), &comm, &expected, fock_json);
            let mut flat = up(m, &up(k, &v));
            flat.add_scaled(&up(k, &up(m, &v)), &rational(-1));
            t.check_eq(|| format!("[p_{m}, p_{k}] on [{b}]"), &flat, &FockVector::zero(), fock_json);
        }
        t
    }).collect::<Vec<_>>())
}

fn run_koz2(ctx: &Ctx) -> Tally {
    let mut t = Tally::new();
    for k in 1..=ctx.get("k_max") {
        let sum = LinOp::combination((0..=k).map(|m| (rational(sign(m)), &mul_h(k - m) * &mul_e(m))).collect());
        t.check_ops(&format!("k={k}"), &sum, &LinOp::zero(), ctx.window);
    }
    t
}

fn run_koz3(ctx: &Ctx) -> Tally {
    let mut t = Tally::new();
    for k in 1..=ctx.get("k_max") {
        let sum = LinOp::combination((0..=k).map(|m| (rational(sign(m)), &skew_h(k - m) * &skew_e(m))).collect());
        t.check_ops(&format!("k={k}"), &sum, &LinOp::zero(), ctx.window);
    }
    t
}

fn run_mn_hook(ctx: &Ctx) -> Tally {
    let mut t = Tally::new();
    for k in 1..=ctx.get("bound") {
        t.check_ops(&format!("P_{k}"), &hook_P(k).unwrap(), &mul_p(k).unwrap(), ctx.window);
        t.check_ops(&format!("P*_{k}"), &hook_P_star(k).unwrap(), &skew_p(k).unwrap(), ctx.window);
    }
    t
}

fn run_symid(ctx: &Ctx) -> Tally {
    let mut t = Tally::new();
    for n in 0..=ctx.window {
        let h = gf_h(n as i64).unwrap();
        t.check_eq(|| format!("h_{n}"), &h, &SymFunc::schur(Partition::row(n)), sym_json);
        let e = gf_e(n as i64).unwrap();
        t.check_eq(|| format!("e_{n}"), &e, &SymFunc::schur(Partition::column(n)), sym_json);
    }
    t
}

fn run_vertex(ctx: &Ctx, relation: VertexRelation) -> Tally {
    let bound = ctx.get("bound");
    let pairs: Vec<(i64, i64)> = ctx
        .single_or("a", -bound..=bound)
        .into_iter()
        .flat_map(|a| ctx.single_or("b", -bound..=bound).into_iter().map(move |b| (a, b)))
        .collect();
    Tally::merge_all(pairs.par_iter().map(|&(a, b)| {
        let (lhs, rhs) = relation.sides(a, b);
        let mut t = Tally::new();
        t.check_ops(&format!("a={a},b={b}"), &lhs, &rhs, ctx.window);
        t
    }).collect::<Vec<_>>())
}

fn run_v1(ctx: &Ctx) -> Tally {
    run_vertex(ctx, VertexRelation::XX)
}

fn run_v2(ctx: &Ctx) -> Tally {
    run_vertex(ctx, VertexRelation::XstarXstar)
}

fn run_v3(ctx: &Ctx) -> Tally {
    run_vertex(ctx, VertexRelation::XXstar)
}

fn run_zchar(ctx: &Ctx) -> Tally {
    let bound = ctx.get("bound");
    let pairs: Vec<(i64, i64)> = ctx
        .single_or("a", -bound..=bound)
        .into_iter()
        .flat_map(|a| ctx.single_or("b", -bound..=bound).into_iter().map(move |b| (a, b)))
        .collect();
    Tally::merge_all(pairs.par_iter().map(|&(a, b)| {
        let rhs = if a + b == 0 { LinOp::identity() } else { LinOp::zero() };
        let mut t = Tally::new();
        t.check_ops(&format!("a={a},b={b}"), &zchar_sum(a, b), &rhs, ctx.window);
        t
    }).collect::<Vec<_>>())
}

fn run_shadow(ctx: &Ctx) -> Tally {
    let bound = ctx.get("bound");
    let mut t = Tally::new();
    for lam in Partition::all_up_to(ctx.window) {
        for a in -bound..=bound {
            let image = vertex_X(a).apply_basis(&lam);
            let ok = image.is_zero()
                || image.as_single_term().is_some_and(|(c, _)| c.abs() == rational(1));
            t.record(ok, || format!("X_{a} s[{lam}]"), || sym_json(&image), || json!("0 or a single ±s[μ]"));
        }
    }
    t
}

// Fock space

fn run_clifford(ctx: &Ctx) -> Tally {
    clifford_family(ctx, psi, psi_star)
}

fn run_clifford_vertex(ctx: &Ctx) -> Tally {
    clifford_family(ctx, clifford_psi, clifford_psi_star)
}

fn clifford_family(ctx: &Ctx, up: fn(i64, &FockVector) -> FockVector, down: fn(i64, &FockVector) -> FockVector) -> Tally {
    let idx = indices(ctx.get("bound"));
    let basis = basis_window(ctx.get("charge"), ctx.window);
    Tally::merge_all(basis.par_iter().map(|b| {
        let v = FockVector::basis(b.clone());
        let mut t = Tally::new();
        for &(i, j) in &idx {
            let anti = |x: FockVector, y: FockVector| {
                let mut s = x;
                s.add_scaled(&y, &rational(1));
                s
            };
            let pp = anti(up(i, &up(j, &v)), up(j, &up(i, &v)));
            t.check_eq(|| format!("psi_{i} psi_{j} on [{b}]"), &pp, &FockVector::zero(), fock_json);
            let ss = anti(down(i, &down(j, &v)), down(j, &down(i, &v)));
            t.check_eq(|| format!("psi*_{i} psi*_{j} on [{b}]"), &ss, &FockVector::zero(), fock_json);
            let mixed = anti(up(i, &down(j, &v)), down(j, &up(i, &v)));
            let expected = if i == j { v.clone() } else { FockVector::zero() };
            t.check_eq(|| format!("psi_{i} psi*_{j} on [{b}]"), &mixed, &expected, fock_json);
        }
        t
    }).collect::<Vec<_>>())
}

fn run_bf_square(ctx: &Ctx) -> Tally {
    let bound = ctx.get("bound");
    let basis = basis_window(ctx.get("charge"), ctx.window);
    Tally::merge_all(basis.par_iter().map(|b| {
        let v = FockVector::basis(b.clone());
        let mut t = Tally::new();
        for i in -bound..=bound {
            t.check_eq(|| format!("psi_{i} on [{b}]"), &clifford_psi(i, &v), &psi(i, &v), fock_json);
            t.check_eq(|| format!("psi*_{i} on [{b}]"), &clifford_psi_star(i, &v), &psi_star(i, &v), fock_json);
        }
        t
    }).collect::<Vec<_>>())
}

fn run_jacobi(ctx: &Ctx) -> Tally {
    let r = jacobi_check(ctx.window as u64, ctx.get("t_max"));
    Tally { checked: r.checked, counterexample: r.counterexample }
}

// K(𝕋)

fn row(n: i64) -> Partition {
    if n <= 0 {
        Partition::empty()
    } else {
        Partition::row(n as usize)
    }
}

fn col(n: i64) -> Partition {
    if n <= 0 {
        Partition::empty()
    } else {
        Partition::column(n as usize)
    }
}

fn run_exx(ctx: &Ctx, lhs_rhs: fn(i64, i64) -> (KClass, KClass)) -> Tally {
    let mut t = Tally::new();
    for m in 1..=ctx.get("bound") {
        for n in 1..=ctx.get("bound") {
            let (l, r) = lhs_rhs(m, n);
            t.check_eq(|| format!("m={m},n={n}"), &l, &r, k_json);
        }
    }
    t
}

fn run_exx1(ctx: &Ctx) -> Tally {
    run_exx(ctx, |m, n| {
        (&injective_class(&row(m), &row(n)) - &injective_class(&row(m - 1), &row(n - 1)), KClass::simple(row(m), row(n)))
    })
}

fn run_exx2(ctx: &Ctx) -> Tally {
    run_exx(ctx, |m, n| {
        (&injective_class(&col(m), &col(n)) - &injective_class(&col(m - 1), &col(n - 1)), KClass::simple(col(m), col(n)))
    })
}

fn run_exx3(ctx: &Ctx) -> Tally {
    run_exx(ctx, |m, n| {
        (injective_class(&col(m), &row(n)), &KClass::simple(col(m), row(n)) + &KClass::simple(col(m - 1), row(n - 1)))
    })
}

fn run_exx4(ctx: &Ctx) -> Tally {
    run_exx(ctx, |m, n| {
        (injective_class(&row(m), &col(n)), &KClass::simple(row(m), col(n)) + &KClass::simple(row(m - 1), col(n - 1)))
    })
}

fn run_hookid(ctx: &Ctx) -> Tally {
    let mut t = Tally::new();
    for k in 1..=ctx.get("bound") {
        for m in 1..=ctx.get("bound") {
            let lhs = hook_identity_check(k, m).unwrap();
            let rhs = if k == m { KClass::trivial().scale(k) } else { KClass::zero() };
            t.check_eq(|| format!("k={k},m={m}"), &lhs, &rhs, k_json);
        }
    }
    t
}

fn run_auxp(ctx: &Ctx) -> Tally {
    let mut t = Tally::new();
    for m in 1..=ctx.get("bound") {
        for nu in Partition::all_up_to(m as usize - 1) {
            for gamma in Partition::all_up_to(m as usize) {
                let lhs = auxp_sum(m, &nu, &gamma).unwrap();
                let rhs = auxp_expected(m, &nu, &gamma);
                t.check_eq(|| format!("m={m} nu={nu} gamma={gamma}"), &lhs, &rhs, |x| json!(x));
            }
        }
    }
    t
}

fn run_hom_dim(ctx: &Ctx) -> Tally {
    let mut t = Tally::new();
    let labels = Partition::all_up_to(ctx.get("bound") as usize);
    for lam in labels.iter().filter(|l| !l.is_empty()) {
        for mu in labels.iter().filter(|m| !m.is_empty()) {
            for lam2 in Partition::all_of_size(lam.size() - 1) {
                for mu2 in Partition::all_of_size(mu.size() - 1) {
                    let d = hom_dim(lam, mu, &lam2, &mu2);
                    let expected = u64::from(lam.contains(&lam2) && mu.contains(&mu2));
                    t.check_eq(|| format!("{lam};{mu} -> {lam2};{mu2}"), &d, &expected, |x| json!(x));
                }
            }
        }
    }
    t
}

/// The socle multiplicities straight from LR-tableau counts.
fn socle_by_tableaux(lam: &Partition, mu: &Partition) -> KClass {
    let mut out = KClass::zero();
    for k in 0..=lam.size().min(mu.size()) {
        for gamma in Partition::all_of_size(k) {
            for l2 in Partition::all_of_size(lam.size() - k) {
                let x = oracle::lr_by_tableaux(lam, &l2, &gamma);
                if x == 0 {
                    continue;
                }
                for m2 in Partition::all_of_size(mu.size() - k) {
                    let y = oracle::lr_by_tableaux(mu, &m2, &gamma);
                    out.add_term(SimpleLabel::new(l2.clone(), m2), (x * y) as i64);
                }
            }
        }
    }
    out
}

fn run_socle(ctx: &Ctx) -> Tally {
    let labels = Partition::all_up_to(ctx.window);
    let pairs: Vec<(Partition, Partition)> =
        labels.iter().flat_map(|l| labels.iter().map(move |m| (l.clone(), m.clone()))).collect();
    Tally::merge_all(pairs.par_iter().map(|(lam, mu)| {
        let mut t = Tally::new();
        let whole = injective_class(lam, mu);
        let mut layers = KClass::zero();
        for k in 0..=lam.size().min(mu.size()) + 1 {
            layers.add_scaled(&socle_layer(lam, mu, k), 1);
        }
        t.check_eq(|| format!("layer sum {lam};{mu}"), &layers, &whole, k_json);
        t.check_eq(|| format!("tableaux {lam};{mu}"), &whole, &socle_by_tableaux(lam, mu), k_json);
        let top = SimpleLabel::new(lam.clone(), mu.clone());
        let unitriangular = whole.coeff(&top) == 1 && whole.terms().all(|(l, _)| *l == top || l.size() < top.size());
        t.record(unitriangular, || format!("unitriangular {lam};{mu}"), || k_json(&whole), || json!("leading [V_{λ,μ}]"));
        let simple = KClass::simple(lam.clone(), mu.clone());
        t.check_eq(|| format!("resolution {lam};{mu}"), &expand_injectives(&simple_in_injectives(lam, mu)), &simple, k_json);
        t.check_eq(|| format!("duality {lam};{mu}"), &dual_class(&whole), &injective_class(mu, lam), k_json);
        t
    }).collect::<Vec<_>>())
}

// Oracles

fn run_lr_oracle(ctx: &Ctx) -> Tally {
    let lams = Partition::all_up_to(ctx.window);
    Tally::merge_all(lams.par_iter().map(|lam| {
        let mut t = Tally::new();
        for k in 0..=lam.size() {
            for mu in lam.sub_partitions_of_size(k) {
                for nu in Partition::all_of_size(lam.size() - k) {
                    let fast = lr_coefficient(lam, &mu, &nu);
                    let slow = oracle::lr_by_tableaux(lam, &mu, &nu);
                    t.check_eq(|| format!("N^{lam}_{mu},{nu}"), &fast, &slow, |x| json!(x));
                }
            }
        }
        t
    }).collect::<Vec<_>>())
}

fn run_schur_monomial(ctx: &Ctx) -> Tally {
    let d = ctx.window;
    let pairs: Vec<(Partition, Partition)> = Partition::all_up_to(d)
        .into_iter()
        .flat_map(|mu| Partition::all_up_to(d - mu.size()).into_iter().map(move |nu| (mu.clone(), nu)))
        .collect();
    Tally::merge_all(pairs.par_iter().map(|(mu, nu)| {
        let mut t = Tally::new();
        let degree = mu.size() + nu.size();
        let product = schur_product(mu, nu);
        let fast = oracle::expansion_monomials(&product, degree, degree);
        let slow = oracle::product_monomials(mu, nu, degree);
        t.check_eq(|| format!("s[{mu}] s[{nu}]"), &fast, &slow, |m| json!(m.iter().map(|(k, v)| (format!("{k:?}"), *v)).collect::<BTreeMap<_, _>>()));
        t
    }).collect::<Vec<_>>())
}
