//! Fixed battery of reference checks run by `verify-all`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::linkage::{verify_f4_g2, verify_lemma_b, verify_lemma_c, verify_lemma_typec_zero};
use crate::numeric::primes_between;
use crate::rootsys::{Family, RootSystem, Weight};
use crate::typec::{fixture_c12_p3, four_term_consistency, h2_fundamental, CohBound};
use crate::wsearch::{remark44_catalog, scope_weights, search_two_root_sum, NuRange, SearchSpec};

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

fn check(name: &str, passed: bool, detail: Value) -> CheckResult {
    if !passed {
        log::error!("check {name} failed");
    }
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn om(rank: usize, coeffs: &[(usize, i64)]) -> Weight {
    let mut w = Weight::zero(rank);
    for &(i, c) in coeffs {
        w.coords[i - 1] += c;
    }
    w
}

/// (family, rank, highest short, highest long) in fundamental-weight coordinates.
pub fn dominant_root_rows(max_rank: usize) -> Vec<(Family, usize, Weight, Weight)> {
    let mut rows = Vec::new();
    for n in 1..=max_rank {
        let l = om(n, &[(1, 1), (n, 1)]);
        rows.push((Family::A, n, l.clone(), l));
    }
    rows.push((Family::B, 2, om(2, &[(1, 1)]), om(2, &[(2, 2)])));
    for n in 3..=max_rank {
        rows.push((Family::B, n, om(n, &[(1, 1)]), om(n, &[(2, 1)])));
        rows.push((Family::C, n, om(n, &[(2, 1)]), om(n, &[(1, 2)])));
    }
    for n in 4..=max_rank {
        rows.push((Family::D, n, om(n, &[(2, 1)]), om(n, &[(2, 1)])));
    }
    for (n, i) in [(6, 2), (7, 1), (8, 8)] {
        rows.push((Family::E, n, om(n, &[(i, 1)]), om(n, &[(i, 1)])));
    }
    rows.push((Family::F, 4, om(4, &[(4, 1)]), om(4, &[(1, 1)])));
    rows.push((Family::G, 2, om(2, &[(1, 1)]), om(2, &[(2, 1)])));
    rows
}

fn dominant_roots(max_rank: usize) -> Result<CheckResult> {
    let mut bad = Vec::new();
    for (f, n, short, long) in dominant_root_rows(max_rank) {
        let rs = RootSystem::new(f, n)?;
        if rs.highest_short != short || rs.highest_long != long {
            bad.push(rs.name());
        }
    }
    Ok(check(
        "dominant-roots",
        bad.is_empty(),
        json!({"mismatches": bad}),
    ))
}

fn remark44() -> Result<CheckResult> {
    let mut ids = Vec::new();
    for (f, n) in [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 3),
        (Family::C, 4),
    ] {
        ids.extend(remark44_catalog(&RootSystem::new(f, n)?, 5)?);
    }
    let passed = ids.iter().all(|i| i.holds);
    Ok(check("remark44-identities", passed, json!(ids)))
}

fn e8_chain() -> Result<CheckResult> {
    let e8 = RootSystem::new(Family::E, 8)?;
    let a0 = e8.highest_short.clone();
    let s0 = |l: &Weight| e8.affine_dot_reflect(&a0, 1, 31, l);
    let z = e8.zero();
    let got = [
        s0(&z)?,
        s0(&e8.dot_word(&[8], &z)?)?,
        s0(&e8.dot_word(&[8, 7], &z)?)?,
    ];
    let want = [
        om(8, &[(8, 2)]),
        om(8, &[(7, 1), (8, 1)]),
        om(8, &[(6, 1), (8, 1)]),
    ];
    Ok(check(
        "e8-affine-chain",
        got == want,
        json!({"values": got}),
    ))
}

fn linkage_lemmas(quick: bool) -> Result<Vec<CheckResult>> {
    let primes = [5, 7, 11, 13];
    let b_max = if quick { 5 } else { 9 };
    let mut b_fail = Vec::new();
    for n in 2..=b_max {
        for p in primes {
            if !verify_lemma_b(n, p)?.passes() {
                b_fail.push((n, p));
            }
        }
    }
    let c_max = if quick { 5 } else { 8 };
    let mut c_fail = Vec::new();
    for n in 3..=c_max {
        for p in primes {
            if !verify_lemma_c(n, p)?.passes() {
                c_fail.push((n, p));
            }
        }
    }
    let z_max = if quick { 6 } else { 10 };
    let mut z_fail = Vec::new();
    let mut z_count = 0;
    for n in 3..=z_max {
        for p in primes_between(n as i64 + 1, 2 * n as i64 + 1) {
            for j in (2..=n).step_by(2) {
                z_count += 1;
                if !verify_lemma_typec_zero(n, p, j)?.passes() {
                    z_fail.push((n, p, j));
                }
            }
        }
    }
    let mut fg_fail = Vec::new();
    for p in primes {
        if !verify_f4_g2(p)?.iter().all(|r| r.passes()) {
            fg_fail.push(p);
        }
    }
    Ok(vec![
        check(
            "type-b-dominant-roots",
            b_fail.is_empty(),
            json!({"failures": b_fail}),
        ),
        check(
            "type-c-omega2",
            c_fail.is_empty(),
            json!({"failures": c_fail}),
        ),
        check(
            "type-c-omega-j-vs-zero",
            z_fail.is_empty(),
            json!({"cases": z_count, "failures": z_fail}),
        ),
        check(
            "f4-g2-dominant-roots",
            fg_fail.is_empty(),
            json!({"failures": fg_fail}),
        ),
    ])
}

/// (type, p, r) configurations of the two-root-sum sweep.
pub fn two_root_sum_configs(quick: bool) -> Vec<(Family, usize, i64, u32)> {
    if quick {
        vec![
            (Family::G, 2, 7, 1),
            (Family::E, 6, 5, 1),
            (Family::F, 4, 5, 2),
        ]
    } else {
        vec![
            (Family::E, 6, 5, 1),
            (Family::E, 6, 5, 2),
            (Family::E, 7, 7, 1),
            (Family::E, 7, 7, 2),
            (Family::E, 7, 5, 2),
            (Family::E, 8, 7, 1),
            (Family::E, 8, 7, 2),
            (Family::F, 4, 5, 2),
            (Family::F, 4, 7, 1),
            (Family::G, 2, 7, 1),
            (Family::G, 2, 7, 2),
        ]
    }
}

fn two_root_sums(quick: bool) -> Result<CheckResult> {
    let mut found = Vec::new();
    let mut candidates = 0;
    for (f, n, p, r) in two_root_sum_configs(quick) {
        let rs = RootSystem::new(f, n)?;
        let lambdas = if quick && f == Family::E {
            vec![rs.highest_short.clone()]
        } else {
            scope_weights(&rs)?
        };
        for lambda in lambdas {
            let spec = SearchSpec {
                rs: &rs,
                p,
                r,
                lambda: lambda.clone(),
                nu_range: NuRange::DominantLeq,
            };
            let o = search_two_root_sum(&spec)?;
            candidates += o.candidates_examined;
            if !o.solutions.is_empty() {
                found.push(json!({"type": rs.name(), "p": p, "r": r, "lambda": lambda}));
            }
        }
    }
    let e8 = RootSystem::new(Family::E, 8)?;
    let spec = SearchSpec {
        rs: &e8,
        p: 7,
        r: 1,
        lambda: e8.highest_short.clone(),
        nu_range: NuRange::DominantLeq,
    };
    let o = search_two_root_sum(&spec)?;
    candidates += o.candidates_examined;
    if !o.solutions.is_empty() {
        found.push(json!({"type": "E8", "p": 7, "r": 1, "lambda": e8.highest_short}));
    }
    Ok(check(
        "two-root-sum-empty",
        found.is_empty(),
        json!({"candidates": candidates, "nonempty": found}),
    ))
}

fn typec_fixture() -> Result<CheckResult> {
    let fx = fixture_c12_p3();
    let mut values = Vec::new();
    let mut passed = true;
    for (j, want) in [(2, 0), (4, 0), (6, 1), (8, 0), (10, 0), (12, 0)] {
        let b = h2_fundamental(&fx, 12, 3, j)?.bound;
        passed &= b == CohBound::exact(want);
        values.push(json!({"j": j, "h2": b}));
    }
    let ft = four_term_consistency(&fx, 12, 3, 6, 1, 1)?;
    passed &= ft.holds;
    Ok(check(
        "type-c-fixture-h2",
        passed,
        json!({"values": values, "four_term": ft}),
    ))
}

/// Runs the battery; `quick` trims ranges and sweeps.
pub fn run_all(quick: bool) -> Result<Vec<CheckResult>> {
    let mut out = vec![
        dominant_roots(if quick { 8 } else { 12 })?,
        remark44()?,
        e8_chain()?,
    ];
    out.extend(linkage_lemmas(quick)?);
    out.push(two_root_sums(quick)?);
    out.push(typec_fixture()?);
    Ok(out)
}
