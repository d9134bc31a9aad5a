//! Execution of parsed commands into JSON results.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use super::args::{
    AuditCmd, Command, LinkageCmd, ProviderArg, RootsysCmd, SearchArgs, SearchCmd, SocleCmd,
    TypeArg, TypecCmd,
};
use super::checks;
use super::gate::{GateVerdict, Table1Gate};
use crate::error::{Error, Result};
use crate::linkage::{
    linked, linked_extended, verify_f4_g2, verify_lemma_b, verify_lemma_c, verify_lemma_typec_zero,
};
use crate::rootsys::{parse_type, Family, RootSystem, Weight};
use crate::socle::{provider_from_spec, socle_weights_general, socle_weights_small};
use crate::typec::{
    fixture_c12_p3, generate_table, h2_fundamental, reference_table, FixtureProvider, RuleProvider,
    StructureProvider,
};
use crate::wsearch::{
    inequality_maxima, remark44_catalog, scan_e2_11, scan_e2_20_r1, scan_e2_forms_r_ge_2,
    scope_weights, search_two_root_sum, socle_weight_fixed_points, NuRange, SearchSpec, Solution,
};

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub result: Value,
    pub passed: bool,
    pub candidates: Option<u64>,
    pub csv: Option<String>,
}

impl Outcome {
    fn new<T: Serialize>(result: &T, passed: bool) -> Result<Self> {
        Ok(Outcome {
            result: serde_json::to_value(result)?,
            passed,
            candidates: None,
            csv: None,
        })
    }
}

/// Resolves `--type` (and `--rank`) to a root system.
pub fn resolve_type(t: &TypeArg) -> Result<RootSystem> {
    let s = t.type_name.trim();
    let (family, rank) = if s.chars().any(|c| c.is_ascii_digit()) {
        let (f, n) = parse_type(s)?;
        if t.rank.is_some_and(|r| r != n) {
            return Err(Error::Precondition(format!(
                "--type {s} conflicts with --rank"
            )));
        }
        (f, n)
    } else {
        let f: Family = s.parse()?;
        let n = t
            .rank
            .ok_or_else(|| Error::Precondition(format!("--type {s} needs --rank")))?;
        (f, n)
    };
    RootSystem::new(family, rank)
}

/// Parses coordinates or the aliases `table2:long`, `table2:short`, `wK`, `zero`.
pub fn resolve_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    let s = s.trim();
    match s {
        "table2:long" => return Ok(rs.highest_long.clone()),
        "table2:short" => return Ok(rs.highest_short.clone()),
        "zero" | "w0" => return Ok(rs.zero()),
        _ => {}
    }
    if let Some(k) = s.strip_prefix('w') {
        let k: usize = k
            .parse()
            .map_err(|_| Error::MalformedWeight(format!("unknown weight alias {s:?}")))?;
        if k > rs.rank {
            return Err(Error::MalformedWeight(format!(
                "{s} does not exist in {}",
                rs.name()
            )));
        }
        return Ok(rs.omega(k));
    }
    Weight::parse_with_rank(s, rs.rank)
}

fn lambdas(rs: &RootSystem, lambda: &Option<String>) -> Result<Vec<Weight>> {
    match lambda {
        Some(s) => Ok(vec![resolve_weight(rs, s)?]),
        None => scope_weights(rs),
    }
}

/// Admissibility gate verdict for commands that carry a type, p and r.
pub fn gate_for(cmd: &Command) -> Result<Option<GateVerdict>> {
    let verdict = |rs: &RootSystem, p: i64, r: u32, l: Option<Weight>| {
        Table1Gate::for_type(rs.family, rs.rank).check(rs, p, r, l.as_ref())
    };
    Ok(match cmd {
        Command::Linkage(LinkageCmd::Check { ty, p, lambda, .. }) => {
            let rs = resolve_type(ty)?;
            let l = resolve_weight(&rs, lambda)?;
            Some(verdict(&rs, *p, 1, Some(l)))
        }
        Command::Search(
            SearchCmd::TwoRootSum { args, .. }
            | SearchCmd::E2Forms(args)
            | SearchCmd::FixedPoints(args)
            | SearchCmd::Remark44(args),
        )
        | Command::Socle(SocleCmd::Compute { args, .. }) => {
            let rs = resolve_type(&args.ty)?;
            let l = match &args.lambda {
                Some(s) => Some(resolve_weight(&rs, s)?),
                None => None,
            };
            Some(verdict(&rs, args.p, args.r, l))
        }
        Command::Typec(TypecCmd::H2 { p, n, j, .. }) => {
            let rs = RootSystem::new(Family::C, *n)?;
            if *j > *n {
                return Err(Error::Precondition(format!(
                    "ω_{j} does not exist in C_{n}"
                )));
            }
            Some(verdict(&rs, *p, 1, Some(rs.omega(*j))))
        }
        _ => None,
    })
}

/// Runs one command.
pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Rootsys(RootsysCmd::Info(t)) => Outcome::new(&resolve_type(t)?.info(), true),
        Command::Linkage(c) => linkage(c),
        Command::Search(c) => search(c),
        Command::Audit(AuditCmd::Inequalities { type_name }) => audit(type_name.as_deref()),
        Command::Socle(SocleCmd::Compute {
            args,
            msigma,
            compare,
        }) => socle(args, msigma, *compare),
        Command::Typec(c) => typec(c),
        Command::VerifyAll { quick } => {
            let results = checks::run_all(*quick)?;
            let passed = results.iter().all(|c| c.passed);
            Outcome::new(&results, passed)
        }
    }
}

fn linkage(cmd: &LinkageCmd) -> Result<Outcome> {
    match cmd {
        LinkageCmd::Check {
            ty,
            p,
            lambda,
            mu,
            extended,
        } => {
            let rs = resolve_type(ty)?;
            let l = resolve_weight(&rs, lambda)?;
            let m = resolve_weight(&rs, mu)?;
            let v = if *extended {
                linked_extended(&rs, &l, &m, *p)?
            } else {
                linked(&rs, &l, &m, *p)?
            };
            let record = json!({
                "type": rs.name(),
                "rank": rs.rank,
                "p": p,
                "lhs": l,
                "rhs": m,
                "extended": extended,
                "linked": v.linked,
                "witness": v.witness,
            });
            Outcome::new(&record, true)
        }
        LinkageCmd::LemmaB { rank, p } => {
            let r = verify_lemma_b(*rank, *p)?;
            Outcome::new(&r, r.passes())
        }
        LinkageCmd::LemmaC { rank, p } => {
            let r = verify_lemma_c(*rank, *p)?;
            Outcome::new(&r, r.passes())
        }
        LinkageCmd::F4g2 { p } => {
            let r = verify_f4_g2(*p)?;
            Outcome::new(&r, r.iter().all(|x| x.passes()))
        }
        LinkageCmd::TypecZero { rank, p, j } => {
            let r = verify_lemma_typec_zero(*rank, *p, *j)?;
            Outcome::new(&r, r.passes())
        }
    }
}

/// A solution forced by λ being a dominant root: the summand carrying the
/// root is a multiple of λ* and the rest is −λ*.
pub fn is_forced(sol: &Solution, star: &Weight) -> bool {
    let neg = -star;
    let [first, second] = sol.constituents.as_slice() else {
        return false;
    };
    if *second != neg || star.is_zero() {
        return false;
    }
    let i = star.coords.iter().position(|&c| c != 0).expect("nonzero");
    let k = first.coords[i] / star.coords[i];
    k > 0 && *first == star.scaled(k)
}

fn search(cmd: &SearchCmd) -> Result<Outcome> {
    match cmd {
        SearchCmd::TwoRootSum { args, saturated } => {
            let rs = resolve_type(&args.ty)?;
            let nu_range = if *saturated {
                NuRange::Saturated
            } else {
                NuRange::DominantLeq
            };
            let mut rows = Vec::new();
            let mut candidates = 0;
            let mut passed = true;
            for lambda in lambdas(&rs, &args.lambda)? {
                let spec = SearchSpec {
                    rs: &rs,
                    p: args.p,
                    r: args.r,
                    lambda: lambda.clone(),
                    nu_range,
                };
                let o = search_two_root_sum(&spec)?;
                candidates += o.candidates_examined;
                passed &= o.solutions.is_empty();
                rows.push(json!({"lambda": lambda, "outcome": o}));
            }
            let mut out = Outcome::new(
                &json!({"type": rs.name(), "p": args.p, "r": args.r, "results": rows}),
                passed,
            )?;
            out.candidates = Some(candidates);
            Ok(out)
        }
        SearchCmd::E2Forms(args) => {
            let rs = resolve_type(&args.ty)?;
            let mut rows = Vec::new();
            let mut candidates = 0;
            let mut passed = true;
            for lambda in lambdas(&rs, &args.lambda)? {
                let star = rs.duality_star(&lambda)?;
                let scans = if args.r == 1 {
                    let o = scan_e2_20_r1(&rs, args.p, 1, &lambda)?;
                    let v = json!({
                        "form": "p*beta - lambda*",
                        "candidates_examined": o.candidates_examined,
                        "solutions": o.solutions,
                    });
                    vec![(v, o.candidates_examined, o.solutions)]
                } else {
                    let mut all = scan_e2_forms_r_ge_2(&rs, args.p, args.r, &lambda)?;
                    all.extend(scan_e2_11(&rs, args.p, args.r, &lambda)?);
                    all.into_iter()
                        .map(|s| {
                            (
                                serde_json::to_value(&s).expect("scan"),
                                s.candidates_examined,
                                s.solutions,
                            )
                        })
                        .collect()
                };
                let mut unforced = 0;
                let mut forms = Vec::new();
                for (v, c, sols) in scans {
                    candidates += c;
                    unforced += sols.iter().filter(|s| !is_forced(s, &star)).count();
                    forms.push(v);
                }
                passed &= unforced == 0;
                rows.push(json!({
                    "lambda": lambda,
                    "is_root": rs.is_root(&lambda),
                    "unforced_solutions": unforced,
                    "forms": forms,
                }));
            }
            let mut out = Outcome::new(
                &json!({"type": rs.name(), "p": args.p, "r": args.r, "results": rows}),
                passed,
            )?;
            out.candidates = Some(candidates);
            Ok(out)
        }
        SearchCmd::FixedPoints(args) => {
            let rs = resolve_type(&args.ty)?;
            let reports = lambdas(&rs, &args.lambda)?
                .iter()
                .map(|l| socle_weight_fixed_points(&rs, args.p, args.r, l))
                .collect::<Result<Vec<_>>>()?;
            let passed = reports
                .iter()
                .all(|r| r.fixed_points.is_empty() && r.bound_holds);
            Outcome::new(
                &json!({"type": rs.name(), "p": args.p, "r": args.r, "results": reports}),
                passed,
            )
        }
        SearchCmd::Remark44(args) => {
            let rs = resolve_type(&args.ty)?;
            let ids = remark44_catalog(&rs, args.p)?;
            let passed = ids.iter().all(|i| i.holds);
            Outcome::new(&ids, passed)
        }
    }
}

/// Types covered by the inequality audit.
pub const AUDIT_TYPES: [&str; 9] = ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"];

fn audit(type_name: Option<&str>) -> Result<Outcome> {
    let names: Vec<&str> = match type_name {
        Some(t) => vec![t],
        None => AUDIT_TYPES.to_vec(),
    };
    let reports = names
        .iter()
        .map(|t| {
            let (f, n) = parse_type(t)?;
            let rs = RootSystem::new(f, n)?;
            inequality_maxima(&rs, &scope_weights(&rs)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.holds);
    Outcome::new(&reports, passed)
}

fn socle(args: &SearchArgs, msigma: &str, compare: bool) -> Result<Outcome> {
    let rs = resolve_type(&args.ty)?;
    let lambda = match &args.lambda {
        Some(s) => resolve_weight(&rs, s)?,
        None => return Err(Error::Precondition("socle compute needs --lambda".into())),
    };
    let provider = provider_from_spec(msigma)?;
    let general = socle_weights_general(&rs, args.p, args.r, &lambda, provider.as_ref())?;
    let mut result = json!({
        "type": rs.name(),
        "p": args.p,
        "r": args.r,
        "lambda": lambda,
        "msigma": provider.name(),
        "placeholder": provider.is_placeholder(),
        "multiset": general,
    });
    let mut passed = true;
    if compare {
        let small = socle_weights_small(&rs, args.p, args.r, &lambda, provider.as_ref())?;
        passed = small == general;
        result["small_formula_agrees"] = json!(passed);
    }
    Outcome::new(&result, passed)
}

fn structure_provider(
    arg: &ProviderArg,
    n: Option<usize>,
    p: i64,
) -> Result<Box<dyn StructureProvider>> {
    Ok(match arg.provider.as_str() {
        "rule" => Box::new(RuleProvider),
        "c12p3" => Box::new(fixture_c12_p3()),
        path => {
            let n = n.ok_or_else(|| {
                Error::Precondition("a diagram file describes a single rank n".into())
            })?;
            Box::new(FixtureProvider::from_path(n, p, Path::new(path))?)
        }
    })
}

fn typec(cmd: &TypecCmd) -> Result<Outcome> {
    match cmd {
        TypecCmd::H2 { p, n, j, provider } => {
            let prov = structure_provider(provider, Some(*n), *p)?;
            let r = h2_fundamental(prov.as_ref(), *n, *p, *j)?;
            let expected =
                reference_table(*p).and_then(|t| t.get(n).map(|row| u64::from(row.contains(j))));
            let passed = expected.map_or(true, |e| r.bound.contains(e))
                && r.bound.value().map_or(true, |v| v <= 1);
            let mut v = serde_json::to_value(&r)?;
            v["reference"] = json!(expected);
            Outcome::new(&v, passed)
        }
        TypecCmd::Table {
            p,
            n_min,
            n_max,
            provider,
        } => {
            let reference = reference_table(*p);
            let default_min = reference
                .as_ref()
                .and_then(|t| t.keys().next().copied())
                .unwrap_or(2);
            let lo = n_min.unwrap_or(default_min);
            let single = (lo == *n_max).then_some(lo);
            let prov = structure_provider(provider, single, *p)?;
            let table = generate_table(prov.as_ref(), *p, lo..=*n_max)?;
            let mut conflicts = Vec::new();
            let mut matching_rows = 0;
            if let Some(t) = &reference {
                for row in &table.rows {
                    let Some(want) = t.get(&row.n) else { continue };
                    if row.undetermined.is_empty() && &row.nonzero == want {
                        matching_rows += 1;
                    }
                    for c in &row.cells {
                        if !c.bound.contains(u64::from(want.contains(&c.j))) {
                            conflicts.push(json!({"n": row.n, "j": c.j, "bound": c.bound}));
                        }
                    }
                }
            }
            let passed = conflicts.is_empty() && table.max_exact() <= 1;
            let result = json!({
                "table": table,
                "reference_rows_matched": matching_rows,
                "reference_conflicts": conflicts,
                "max_exact": table.max_exact(),
            });
            let mut out = Outcome::new(&result, passed)?;
            out.csv = Some(table.to_csv()?);
            Ok(out)
        }
    }
}
