//! Exhaustive weight-equation searches: which weights of the low-degree
//! U_r-cohomology lie in (p^r − 1)X(T), plus the pairing-inequality audits
//! that bound them.
//!
//! Every search returns solutions with a nonzero quotient σ, sorted, so an
//! empty list certifies that only the zero weight is T(F_q)-fixed.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{checked_pow, require_prime};
use crate::rootsys::{lattice_quotient, Family, RootSystem, Weight};
use crate::socle::{ext1_weights, SupersetProvider};

/// One weight `total = Σ constituents = (p^r − 1)·sigma` with σ ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Solution {
    pub form: String,
    /// Already-scaled summands, in the order the form lists them.
    pub constituents: Vec<Weight>,
    pub total: Weight,
    pub sigma: Weight,
}

impl Solution {
    /// Checks that the constituents add up to (p^r − 1)·σ.
    pub fn reconstructs(&self, modulus: i64) -> bool {
        let mut sum = Weight::zero(self.total.rank());
        for c in &self.constituents {
            sum = &sum + c;
        }
        sum == self.total && self.total == self.sigma.scaled(modulus)
    }
}

fn solution(form: &str, constituents: Vec<Weight>, modulus: i64) -> Option<Solution> {
    let mut total = Weight::zero(constituents[0].rank());
    for c in &constituents {
        total = &total + c;
    }
    let sigma = lattice_quotient(&total, modulus)?;
    (!sigma.is_zero()).then(|| Solution {
        form: form.to_string(),
        constituents,
        total,
        sigma,
    })
}

/// Whether λ is a dominant root or lies below some fundamental weight.
pub fn in_scope(rs: &RootSystem, lambda: &Weight) -> bool {
    lambda.rank() == rs.rank
        && lambda.is_dominant()
        && (*lambda == rs.highest_long
            || *lambda == rs.highest_short
            || (1..=rs.rank).any(|i| rs.dominance_leq(lambda, &rs.omega(i))))
}

/// All in-scope weights of a type, sorted.
pub fn scope_weights(rs: &RootSystem) -> Result<Vec<Weight>> {
    let mut out: BTreeSet<Weight> = BTreeSet::new();
    for i in 1..=rs.rank {
        out.extend(rs.dominant_weights_leq(&rs.omega(i))?);
    }
    out.insert(rs.highest_long.clone());
    out.insert(rs.highest_short.clone());
    Ok(out.into_iter().collect())
}

fn check_scope(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_weight(lambda)?;
    if in_scope(rs, lambda) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{lambda} is neither a dominant root nor below a fundamental weight of {}",
            rs.name()
        )))
    }
}

fn modulus(p: i64, r: u32) -> Result<i64> {
    require_prime(p)?;
    if r == 0 {
        return Err(Error::Precondition("needs r >= 1".into()));
    }
    Ok(checked_pow(p, r)? - 1)
}

/// Which weights ν are paired with the root sums.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NuRange {
    /// Dominant ν ≤ λ: the reduction after conjugating by W.
    #[default]
    DominantLeq,
    /// Every weight of H⁰(λ), without conjugating.
    Saturated,
}

/// Parameters of a search.
#[derive(Clone, Debug)]
pub struct SearchSpec<'a> {
    pub rs: &'a RootSystem,
    pub p: i64,
    pub r: u32,
    pub lambda: Weight,
    pub nu_range: NuRange,
}

/// Solutions plus the number of candidates examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub candidates_examined: u64,
    pub solutions: Vec<Solution>,
}

impl SearchOutcome {
    fn merge(parts: Vec<SearchOutcome>) -> SearchOutcome {
        let mut solutions: Vec<Solution> = parts.iter().flat_map(|o| o.solutions.clone()).collect();
        solutions.sort();
        solutions.dedup();
        SearchOutcome {
            candidates_examined: parts.iter().map(|o| o.candidates_examined).sum(),
            solutions,
        }
    }
}

struct TwoRootPlan {
    roots: Vec<Weight>,
    nus: Vec<Weight>,
    modulus: i64,
}

impl TwoRootPlan {
    fn new(spec: &SearchSpec<'_>) -> Result<Self> {
        check_scope(spec.rs, &spec.lambda)?;
        let modulus = modulus(spec.p, spec.r)?;
        let nus: Vec<Weight> = match spec.nu_range {
            NuRange::DominantLeq => spec.rs.dominant_weights_leq(&spec.lambda)?,
            NuRange::Saturated => spec.rs.weight_superset(&spec.lambda)?.into_iter().collect(),
        };
        Ok(TwoRootPlan {
            roots: spec.rs.roots(),
            nus,
            modulus,
        })
    }

    /// Pairs (i, j) with i < j and β_j ≠ −β_i, for outer indices in `range`.
    fn run(&self, range: std::ops::Range<usize>) -> SearchOutcome {
        let mut out = SearchOutcome {
            candidates_examined: 0,
            solutions: Vec::new(),
        };
        let neg = |a: &Weight, b: &Weight| a.coords.iter().zip(&b.coords).all(|(x, y)| x == &-y);
        for i in range {
            let b1 = &self.roots[i];
            for b2 in &self.roots[i + 1..] {
                if neg(b1, b2) {
                    continue;
                }
                let pair = b1 + b2;
                for nu in &self.nus {
                    out.candidates_examined += 1;
                    let total = &pair + nu;
                    if let Some(sigma) = lattice_quotient(&total, self.modulus) {
                        if !sigma.is_zero() {
                            out.solutions.push(Solution {
                                form: "beta1 + beta2 + nu".into(),
                                constituents: vec![b1.clone(), b2.clone(), nu.clone()],
                                total,
                                sigma,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

/// All β₁ + β₂ + ν ∈ (p^r − 1)X(T) with nonzero quotient, over unordered
/// root pairs with β₁ ≠ ±β₂.
pub fn search_two_root_sum(spec: &SearchSpec<'_>) -> Result<SearchOutcome> {
    let plan = TwoRootPlan::new(spec)?;
    let parts: Vec<SearchOutcome> = (0..plan.roots.len())
        .into_par_iter()
        .map(|i| plan.run(i..i + 1))
        .collect();
    Ok(SearchOutcome::merge(parts))
}

/// Sequential variant over an explicit partition of the outer loop; used to
/// check that results do not depend on how the work is split.
pub fn search_two_root_sum_split(
    spec: &SearchSpec<'_>,
    cut_points: &[usize],
) -> Result<SearchOutcome> {
    let plan = TwoRootPlan::new(spec)?;
    let n = plan.roots.len();
    let mut bounds: Vec<usize> = cut_points.iter().map(|&c| c.min(n)).collect();
    bounds.push(0);
    bounds.push(n);
    bounds.sort_unstable();
    bounds.dedup();
    let parts = bounds
        .windows(2)
        .rev()
        .map(|w| plan.run(w[0]..w[1]))
        .collect();
    Ok(SearchOutcome::merge(parts))
}

/// pβ − λ* ∈ (p^r − 1)X(T) for β ∈ Φ⁺. At r = 1 the solution β = λ*
/// (a dominant root) is the expected coincidence.
pub fn scan_e2_20_r1(rs: &RootSystem, p: i64, r: u32, lambda: &Weight) -> Result<SearchOutcome> {
    check_scope(rs, lambda)?;
    let m = modulus(p, r)?;
    let star = rs.duality_star(lambda)?;
    let neg_star = -&star;
    let mut solutions: Vec<Solution> = rs
        .positive_roots
        .iter()
        .filter_map(|b| solution("p*beta - lambda*", vec![b.scaled(p), neg_star.clone()], m))
        .collect();
    solutions.sort();
    Ok(SearchOutcome {
        candidates_examined: rs.positive_roots.len() as u64,
        solutions,
    })
}

/// Results of one weight family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormScan {
    pub form: String,
    pub candidates_examined: u64,
    pub solutions: Vec<Solution>,
}

impl FormScan {
    fn new(form: &str, candidates: u64, mut solutions: Vec<Solution>) -> Self {
        solutions.sort();
        FormScan {
            form: form.into(),
            candidates_examined: candidates,
            solutions,
        }
    }
}

/// The three weight families of H²(U_{r−1}, k)^{(1)} ⊗ w₀λ for r ≥ 2:
/// p^aα + p^bβ − λ* (1 ≤ a < b ≤ r−1), p^e(α+β) − λ* (1 ≤ e ≤ r−1, α ≠ β
/// unordered), and p^cα − λ* (2 ≤ c ≤ r).
pub fn scan_e2_forms_r_ge_2(
    rs: &RootSystem,
    p: i64,
    r: u32,
    lambda: &Weight,
) -> Result<Vec<FormScan>> {
    if r < 2 {
        return Err(Error::Precondition(format!("needs r >= 2, got {r}")));
    }
    check_scope(rs, lambda)?;
    let m = modulus(p, r)?;
    let neg_star = -&rs.duality_star(lambda)?;
    let pos = &rs.positive_roots;
    let mut scans = Vec::new();

    let mut count = 0u64;
    let mut sols = Vec::new();
    for a in 1..r {
        for b in a + 1..r {
            let (pa, pb) = (checked_pow(p, a)?, checked_pow(p, b)?);
            for x in pos {
                for y in pos {
                    count += 1;
                    sols.extend(solution(
                        "p^a*alpha + p^b*beta - lambda*",
                        vec![x.scaled(pa), y.scaled(pb), neg_star.clone()],
                        m,
                    ));
                }
            }
        }
    }
    scans.push(FormScan::new("p^a*alpha + p^b*beta - lambda*", count, sols));

    let mut count = 0u64;
    let mut sols = Vec::new();
    for e in 1..r {
        let pe = checked_pow(p, e)?;
        for (i, x) in pos.iter().enumerate() {
            for y in &pos[i + 1..] {
                count += 1;
                sols.extend(solution(
                    "p^e*(alpha + beta) - lambda*",
                    vec![(x + y).scaled(pe), neg_star.clone()],
                    m,
                ));
            }
        }
    }
    scans.push(FormScan::new("p^e*(alpha + beta) - lambda*", count, sols));

    let mut count = 0u64;
    let mut sols = Vec::new();
    for c in 2..=r {
        let pc = checked_pow(p, c)?;
        for x in pos {
            count += 1;
            sols.extend(solution(
                "p^c*alpha - lambda*",
                vec![x.scaled(pc), neg_star.clone()],
                m,
            ));
        }
    }
    scans.push(FormScan::new("p^c*alpha - lambda*", count, sols));
    Ok(scans)
}

/// The three shapes of E₂^{1,1} weights for r ≥ 2, with α, β simple and
/// 1 ≤ i, n < r: p^iβ − s_α·λ*, p^iβ − (λ* − pⁿα), p^iβ − σ for dominant
/// σ < λ*.
pub fn scan_e2_11(rs: &RootSystem, p: i64, r: u32, lambda: &Weight) -> Result<Vec<FormScan>> {
    if r < 2 {
        return Err(Error::Precondition(format!("needs r >= 2, got {r}")));
    }
    check_scope(rs, lambda)?;
    let m = modulus(p, r)?;
    let star = rs.duality_star(lambda)?;
    let sigmas: Vec<Weight> = rs
        .dominant_weights_leq(&star)?
        .into_iter()
        .filter(|s| *s != star)
        .collect();
    let simple = &rs.simple_roots;
    let mut reflect = (0u64, Vec::new());
    let mut shift = (0u64, Vec::new());
    let mut below = (0u64, Vec::new());
    for i in 1..r {
        let pi = checked_pow(p, i)?;
        for beta in simple {
            let head = beta.scaled(pi);
            for a in 1..=rs.rank {
                reflect.0 += 1;
                reflect.1.extend(solution(
                    "p^i*beta - s_alpha.lambda*",
                    vec![head.clone(), -&rs.dot_reflect(a, &star)?],
                    m,
                ));
                for n in 1..r {
                    let mut x = star.clone();
                    x.add_scaled(rs.simple_root(a), -checked_pow(p, n)?);
                    shift.0 += 1;
                    shift.1.extend(solution(
                        "p^i*beta - (lambda* - p^n*alpha)",
                        vec![head.clone(), -&x],
                        m,
                    ));
                }
            }
            for s in &sigmas {
                below.0 += 1;
                below
                    .1
                    .extend(solution("p^i*beta - sigma", vec![head.clone(), -s], m));
            }
        }
    }
    Ok(vec![
        FormScan::new("p^i*beta - s_alpha.lambda*", reflect.0, reflect.1),
        FormScan::new("p^i*beta - (lambda* - p^n*alpha)", shift.0, shift.1),
        FormScan::new("p^i*beta - sigma", below.0, below.1),
    ])
}

/// The bound on (s_α·λ*, γ∨) that the vanishing argument uses per type.
pub fn inequality_bound(rs: &RootSystem) -> i64 {
    match (rs.family, rs.rank) {
        (Family::D, _) | (Family::E, 6) => 2,
        (Family::A, _) | (Family::E, 7) => 3,
        (Family::G, _) => 6,
        _ => 4,
    }
}

/// Maximum of (s_α·λ*, γ∨) over simple α, γ and λ in scope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub maximum: i64,
    pub bound: i64,
    pub holds: bool,
    /// (λ, α, γ) attaining the maximum, first in sorted order.
    pub argmax: (Weight, usize, usize),
    pub scope_size: usize,
}

pub fn inequality_maxima(rs: &RootSystem, scope: &[Weight]) -> Result<InequalityReport> {
    if scope.is_empty() {
        return Err(Error::Precondition("empty scope".into()));
    }
    let mut best: Option<(i64, (Weight, usize, usize))> = None;
    for lambda in scope {
        check_scope(rs, lambda)?;
        let star = rs.duality_star(lambda)?;
        for a in 1..=rs.rank {
            let x = rs.dot_reflect(a, &star)?;
            for g in 1..=rs.rank {
                let v = x.coords[g - 1];
                if best.as_ref().map_or(true, |(b, _)| v > *b) {
                    best = Some((v, (lambda.clone(), a, g)));
                }
            }
        }
    }
    let (maximum, argmax) = best.expect("nonempty scope");
    let bound = inequality_bound(rs);
    Ok(InequalityReport {
        type_name: rs.name(),
        maximum,
        bound,
        holds: maximum <= bound,
        argmax,
        scope_size: scope.len(),
    })
}

/// Nonzero weights of Ext¹_{U_r}(k, L(λ)) in (p^r − 1)X(T), with the bound
/// max{−(ν, γ∨)} compared against p^r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub lambda: Weight,
    pub fixed_points: Vec<Weight>,
    pub max_negative_pairing: i64,
    pub q: i64,
    pub bound_holds: bool,
}

/// Uses the superset m_σ provider, so an empty answer is sound for the true
/// multiplicities.
pub fn socle_weight_fixed_points(
    rs: &RootSystem,
    p: i64,
    r: u32,
    lambda: &Weight,
) -> Result<FixedPointReport> {
    check_scope(rs, lambda)?;
    let m = modulus(p, r)?;
    let q = m + 1;
    let weights = ext1_weights(rs, p, r, lambda, &SupersetProvider)?;
    let fixed_points: Vec<Weight> = weights
        .weights()
        .filter(|w| !w.is_zero() && lattice_quotient(w, m).is_some())
        .cloned()
        .collect();
    let max_negative_pairing = weights
        .weights()
        .flat_map(|w| w.coords.iter().map(|c| -c))
        .max()
        .unwrap_or(i64::MIN);
    Ok(FixedPointReport {
        lambda: lambda.clone(),
        fixed_points,
        max_negative_pairing,
        q,
        bound_holds: q > max_negative_pairing,
    })
}

/// One dot-action identity checked by exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    #[serde(rename = "type")]
    pub type_name: String,
    pub statement: String,
    pub lhs: Weight,
    pub rhs: Weight,
    pub holds: bool,
}

/// Identities `−w·0 + ν = (p−1)σ` exhibiting nonzero T(F_p)-fixed weights
/// at p = 5, for A₂, A₃, B₂ and C_n (n ≥ 3).
pub fn remark44_catalog(rs: &RootSystem, p: i64) -> Result<Vec<Identity>> {
    if p != 5 {
        return Err(Error::Precondition(format!(
            "the catalog is stated for p = 5, got {p}"
        )));
    }
    let n = rs.rank;
    let alpha = |i: usize| rs.simple_root(i).clone();
    let om = |i: usize| rs.omega(i);
    // (word, ν, σ, statement) with −w·0 + ν = (p − 1)σ.
    let cases: Vec<(Vec<usize>, Weight, Weight, String)> = match (rs.family, n) {
        (Family::A, 2) => vec![
            (vec![1, 2], om(1), om(1), "-s1 s2 . 0 + w1 = 4 w1".into()),
            (vec![2, 1], om(2), om(2), "-s2 s1 . 0 + w2 = 4 w2".into()),
        ],
        (Family::A, 3) => vec![
            (
                vec![2, 1],
                -&alpha(3),
                &om(2) - &om(3),
                "-s2 s1 . 0 + (-a3) = 4 w2 - 4 w3".into(),
            ),
            (
                vec![2, 3],
                -&alpha(1),
                &om(2) - &om(1),
                "-s2 s3 . 0 + (-a1) = 4 w2 - 4 w1".into(),
            ),
        ],
        (Family::B, 2) => vec![(
            vec![1, 2],
            -&alpha(2),
            &om(1) - &om(2),
            "-s1 s2 . 0 + (-a2) = 4 w1 - 4 w2".into(),
        )],
        (Family::C, n) if n >= 3 => vec![(
            vec![n - 1, n],
            &alpha(n - 1) + &alpha(n),
            &om(n - 1) - &om(n - 2),
            format!(
                "-s{} s{} . 0 + (a{} + a{}) = 4 w{} - 4 w{}",
                n - 1,
                n,
                n - 1,
                n,
                n - 1,
                n - 2
            ),
        )],
        _ => {
            return Err(Error::Precondition(format!(
                "no catalogued identities for {}",
                rs.name()
            )))
        }
    };
    cases
        .into_iter()
        .map(|(word, nu, sigma, statement)| {
            let lhs = &(-&rs.dot_word(&word, &rs.zero())?) + &nu;
            let rhs = sigma.scaled(p - 1);
            Ok(Identity {
                type_name: rs.name(),
                statement,
                holds: lhs == rhs,
                lhs,
                rhs,
            })
        })
        .collect()
}
