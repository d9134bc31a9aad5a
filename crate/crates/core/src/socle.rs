//! Closed-form weight multisets for the B/U_r-socle of first U_r-cohomology
//! of a simple module, its small-weight specialization, and the dual form
//! consumed by the fixed-point searches.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{checked_pow, require_prime};
use crate::rootsys::{Family, RootSystem, Weight};

/// Sorted multiset of weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WeightMultiset {
    pub entries: Vec<MultisetEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultisetEntry {
    pub weight: Weight,
    pub multiplicity: u64,
}

impl WeightMultiset {
    pub fn from_weights<I: IntoIterator<Item = Weight>>(weights: I) -> Self {
        let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
        for w in weights {
            *counts.entry(w).or_default() += 1;
        }
        WeightMultiset {
            entries: counts
                .into_iter()
                .map(|(weight, multiplicity)| MultisetEntry {
                    weight,
                    multiplicity,
                })
                .collect(),
        }
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries
            .binary_search_by(|e| e.weight.cmp(w))
            .map(|i| self.entries[i].multiplicity)
            .unwrap_or(0)
    }

    /// Distinct weights in sorted order.
    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|e| &e.weight)
    }
}

/// Source of the multiplicities m_σ = dim Ext¹_G(L(λ), H⁰(σ)).
pub trait MsigmaProvider: Send + Sync {
    fn name(&self) -> &str;

    /// Raw table value; callers go through [`m_sigma`], which enforces the
    /// support condition.
    fn value(&self, rs: &RootSystem, p: i64, lambda: &Weight, sigma: &Weight) -> u64;

    /// True for the all-zero fallback, which is reported loudly.
    fn is_placeholder(&self) -> bool {
        false
    }
}

/// m_σ, forced to 0 unless σ is dominant and σ < λ.
pub fn m_sigma(
    provider: &dyn MsigmaProvider,
    rs: &RootSystem,
    p: i64,
    lambda: &Weight,
    sigma: &Weight,
) -> u64 {
    if !sigma.is_dominant() || sigma == lambda || !rs.dominance_leq(sigma, lambda) {
        return 0;
    }
    provider.value(rs, p, lambda, sigma)
}

/// Every m_σ is 0. Used when no data is available.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroProvider;

impl MsigmaProvider for ZeroProvider {
    fn name(&self) -> &str {
        "zero"
    }
    fn value(&self, _: &RootSystem, _: i64, _: &Weight, _: &Weight) -> u64 {
        0
    }
    fn is_placeholder(&self) -> bool {
        true
    }
}

/// m_σ = 1 for every admissible σ. Its multiset contains every weight the
/// true one can contain, so emptiness results derived from it are sound.
#[derive(Clone, Copy, Debug, Default)]
pub struct SupersetProvider;

impl MsigmaProvider for SupersetProvider {
    fn name(&self) -> &str {
        "superset"
    }
    fn value(&self, _: &RootSystem, _: i64, _: &Weight, _: &Weight) -> u64 {
        1
    }
}

/// Values quoted in the literature for the worked cases: in type C_n,
/// dim Ext¹_G(L(ω₂), k) = 1 exactly when p divides n. All other values are 0.
#[derive(Clone, Copy, Debug, Default)]
pub struct BuiltinProvider;

impl MsigmaProvider for BuiltinProvider {
    fn name(&self) -> &str {
        "builtin"
    }
    fn value(&self, rs: &RootSystem, p: i64, lambda: &Weight, sigma: &Weight) -> u64 {
        if rs.family == Family::C && *lambda == rs.omega(2) && sigma.is_zero() {
            u64::from(rs.rank as i64 % p == 0)
        } else {
            0
        }
    }
}

/// One row of an m_σ data file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MsigmaEntry {
    /// Restricts the row to one root system such as "C4".
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    /// Restricts the row to one prime.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    pub lambda: Weight,
    pub sigma: Weight,
    pub m: u64,
}

/// m_σ values read from a JSON list of `{lambda, sigma, m}` records.
#[derive(Clone, Debug, Default)]
pub struct TableProvider {
    pub entries: Vec<MsigmaEntry>,
}

impl TableProvider {
    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<MsigmaEntry> = serde_json::from_str(text)?;
        Ok(TableProvider { entries })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Rejects rows with a nonzero m outside the support condition.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        for e in self.entries.iter().filter(|e| self.applies(e, rs, None)) {
            rs.check_weight(&e.lambda)?;
            rs.check_weight(&e.sigma)?;
            let admissible = e.sigma.is_dominant()
                && e.sigma != e.lambda
                && rs.dominance_leq(&e.sigma, &e.lambda);
            if e.m > 0 && !admissible {
                return Err(Error::Inconsistent(format!(
                    "m = {} given for σ = {} which is not a dominant weight below λ = {}",
                    e.m, e.sigma, e.lambda
                )));
            }
        }
        Ok(())
    }

    fn applies(&self, e: &MsigmaEntry, rs: &RootSystem, p: Option<i64>) -> bool {
        e.type_name
            .as_deref()
            .map_or(true, |t| t.eq_ignore_ascii_case(&rs.name()))
            && match (e.p, p) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            }
            && e.lambda.rank() == rs.rank
    }
}

impl MsigmaProvider for TableProvider {
    fn name(&self) -> &str {
        "table"
    }
    fn value(&self, rs: &RootSystem, p: i64, lambda: &Weight, sigma: &Weight) -> u64 {
        self.entries
            .iter()
            .filter(|e| self.applies(e, rs, Some(p)))
            .find(|e| e.lambda == *lambda && e.sigma == *sigma)
            .map_or(0, |e| e.m)
    }
}

/// Which summand of the socle formula a weight comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum SocleTerm {
    /// −s_α·λ for simple α (1-based) with (λ, α∨) = a pⁿ − 1.
    Reflection {
        alpha: usize,
        n: u32,
        a: i64,
        weight: Weight,
    },
    /// −(λ − a pⁿ α).
    Shift {
        alpha: usize,
        n: u32,
        a: i64,
        weight: Weight,
    },
    /// −σ, repeated m_σ times in the multiset.
    Sigma {
        sigma: Weight,
        m: u64,
        weight: Weight,
    },
}

impl SocleTerm {
    pub fn weight(&self) -> &Weight {
        match self {
            SocleTerm::Reflection { weight, .. }
            | SocleTerm::Shift { weight, .. }
            | SocleTerm::Sigma { weight, .. } => weight,
        }
    }

    fn multiplicity(&self) -> u64 {
        match self {
            SocleTerm::Sigma { m, .. } => *m,
            _ => 1,
        }
    }

    /// Recomputes the weight from the term's indices.
    pub fn replay(&self, rs: &RootSystem, p: i64, lambda: &Weight) -> Result<Weight> {
        Ok(match self {
            SocleTerm::Reflection { alpha, .. } => -&rs.dot_reflect(*alpha, lambda)?,
            SocleTerm::Shift { alpha, n, a, .. } => {
                let mut x = lambda.clone();
                x.add_scaled(rs.simple_root(*alpha), -a * checked_pow(p, *n)?);
                -&x
            }
            SocleTerm::Sigma { sigma, .. } => -sigma,
        })
    }
}

/// Expands terms into a multiset.
pub fn multiset_of(terms: &[SocleTerm]) -> WeightMultiset {
    WeightMultiset::from_weights(
        terms
            .iter()
            .flat_map(|t| std::iter::repeat(t.weight().clone()).take(t.multiplicity() as usize)),
    )
}

fn sigma_terms(
    rs: &RootSystem,
    p: i64,
    lambda: &Weight,
    provider: &dyn MsigmaProvider,
) -> Result<Vec<SocleTerm>> {
    let below: Vec<Weight> = rs
        .dominant_weights_leq(lambda)?
        .into_iter()
        .filter(|s| s != lambda)
        .collect();
    if provider.is_placeholder() && !below.is_empty() {
        log::warn!(
            "m_σ provider '{}' reports 0 for all {} dominant σ < {} in {}; the σ-summand is omitted",
            provider.name(),
            below.len(),
            lambda,
            rs.name()
        );
    }
    Ok(below
        .into_iter()
        .filter_map(|sigma| {
            let m = m_sigma(provider, rs, p, lambda, &sigma);
            (m > 0).then(|| SocleTerm::Sigma {
                weight: -&sigma,
                sigma,
                m,
            })
        })
        .collect())
}

/// Index terms of the general socle formula for λ ∈ X_r(T).
pub fn socle_terms_general(
    rs: &RootSystem,
    p: i64,
    r: u32,
    lambda: &Weight,
    provider: &dyn MsigmaProvider,
) -> Result<Vec<SocleTerm>> {
    require_prime(p)?;
    if p <= 2 {
        return Err(Error::Precondition(format!("needs p > 2, got {p}")));
    }
    if r == 0 {
        return Err(Error::Precondition("needs r >= 1".into()));
    }
    rs.check_weight(lambda)?;
    let q = checked_pow(p, r)?;
    if !lambda.is_restricted(q - 1) {
        return Err(Error::Precondition(format!(
            "{lambda} is not {q}-restricted"
        )));
    }
    let mut terms = Vec::new();
    for alpha in 1..=rs.rank {
        let c = lambda.coords[alpha - 1];
        for n in 0..r {
            let pn = checked_pow(p, n)?;
            for a in 1..=p {
                if c == a * pn - 1 && c != q - 1 {
                    terms.push(SocleTerm::Reflection {
                        alpha,
                        n,
                        a,
                        weight: -&rs.dot_reflect(alpha, lambda)?,
                    });
                }
            }
        }
        for n in 1..r {
            let pn = checked_pow(p, n)?;
            for a in 1..p {
                if (a - 1) * pn <= c && c < a * pn - 1 {
                    let mut x = lambda.clone();
                    x.add_scaled(rs.simple_root(alpha), -a * pn);
                    terms.push(SocleTerm::Shift {
                        alpha,
                        n,
                        a,
                        weight: -&x,
                    });
                }
            }
        }
    }
    terms.extend(sigma_terms(rs, p, lambda, provider)?);
    Ok(terms)
}

/// The general socle multiset.
pub fn socle_weights_general(
    rs: &RootSystem,
    p: i64,
    r: u32,
    lambda: &Weight,
    provider: &dyn MsigmaProvider,
) -> Result<WeightMultiset> {
    Ok(multiset_of(&socle_terms_general(
        rs, p, r, lambda, provider,
    )?))
}

/// Index terms of the specialization for weights with (λ, α∨) ≤ 3, p > 3.
pub fn socle_terms_small(
    rs: &RootSystem,
    p: i64,
    r: u32,
    lambda: &Weight,
    provider: &dyn MsigmaProvider,
) -> Result<Vec<SocleTerm>> {
    require_prime(p)?;
    if p <= 3 {
        return Err(Error::Precondition(format!("needs p > 3, got {p}")));
    }
    if r == 0 {
        return Err(Error::Precondition("needs r >= 1".into()));
    }
    rs.check_weight(lambda)?;
    if !lambda.is_restricted(3) {
        return Err(Error::Precondition(format!(
            "{lambda} has a coordinate outside 0..=3"
        )));
    }
    let mut terms = Vec::new();
    for alpha in 1..=rs.rank {
        let c = lambda.coords[alpha - 1];
        terms.push(SocleTerm::Reflection {
            alpha,
            n: 0,
            a: c + 1,
            weight: -&rs.dot_reflect(alpha, lambda)?,
        });
        for n in 1..r {
            let mut x = lambda.clone();
            x.add_scaled(rs.simple_root(alpha), -checked_pow(p, n)?);
            terms.push(SocleTerm::Shift {
                alpha,
                n,
                a: 1,
                weight: -&x,
            });
        }
    }
    terms.extend(sigma_terms(rs, p, lambda, provider)?);
    Ok(terms)
}

/// The small-weight socle multiset.
pub fn socle_weights_small(
    rs: &RootSystem,
    p: i64,
    r: u32,
    lambda: &Weight,
    provider: &dyn MsigmaProvider,
) -> Result<WeightMultiset> {
    Ok(multiset_of(&socle_terms_small(rs, p, r, lambda, provider)?))
}

/// Weights of Ext¹_{U_r}(k, L(λ)): the small-weight multiset for λ*. The
/// provider is queried with λ* in the λ slot.
pub fn ext1_weights(
    rs: &RootSystem,
    p: i64,
    r: u32,
    lambda: &Weight,
    provider: &dyn MsigmaProvider,
) -> Result<WeightMultiset> {
    let star = rs.duality_star(lambda)?;
    socle_weights_small(rs, p, r, &star, provider)
}

/// Provider selected by name: "zero", "builtin", "superset", or a path to a
/// JSON data file.
pub fn provider_from_spec(spec: &str) -> Result<Box<dyn MsigmaProvider>> {
    Ok(match spec {
        "zero" => Box::new(ZeroProvider),
        "builtin" => Box::new(BuiltinProvider),
        "superset" => Box::new(SupersetProvider),
        path => Box::new(TableProvider::from_path(Path::new(path))?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn zero_weight_contributes_every_simple_root() {
        for (f, n) in [(Family::A, 3), (Family::C, 4), (Family::G, 2)] {
            let rs = RootSystem::new(f, n).unwrap();
            let got = socle_weights_general(&rs, 5, 1, &rs.zero(), &ZeroProvider).unwrap();
            let expect = WeightMultiset::from_weights(rs.simple_roots.iter().cloned());
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn a2_hand_values() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let lam = rs.omega(1);
        let r1 = socle_weights_general(&rs, 5, 1, &lam, &ZeroProvider).unwrap();
        assert_eq!(r1, WeightMultiset::from_weights([w(&[3, -2]), w(&[-2, 2])]));
        let r2 = socle_weights_general(&rs, 5, 2, &lam, &ZeroProvider).unwrap();
        assert_eq!(
            r2,
            WeightMultiset::from_weights([w(&[3, -2]), w(&[-2, 2]), w(&[9, -5]), w(&[-6, 10])])
        );
    }

    #[test]
    fn degenerate_coordinate_counts_twice() {
        // (λ, α∨) = p − 1 arises from (n, a) = (0, p) and (1, 1) when r ≥ 2.
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let terms = socle_terms_general(&rs, 5, 2, &w(&[4]), &ZeroProvider).unwrap();
        let refl = terms
            .iter()
            .filter(|t| matches!(t, SocleTerm::Reflection { .. }))
            .count();
        assert_eq!(refl, 2);
        // At r = 1 the same coordinate equals p^r − 1 and is excluded.
        let terms = socle_terms_general(&rs, 5, 1, &w(&[4]), &ZeroProvider).unwrap();
        assert!(terms.is_empty());
    }

    #[test]
    fn providers_and_support_enforcement() {
        let c4 = RootSystem::new(Family::C, 4).unwrap();
        let om2 = c4.omega(2);
        assert_eq!(m_sigma(&BuiltinProvider, &c4, 2, &om2, &c4.zero()), 1);
        assert_eq!(m_sigma(&BuiltinProvider, &c4, 5, &om2, &c4.zero()), 0);
        let table = TableProvider::from_json(
            r#"[{"lambda": "0,1,0,0", "sigma": "0,0,0,0", "m": 2},
                {"lambda": "0,1,0,0", "sigma": "1,0,0,0", "m": 3}]"#,
        )
        .unwrap();
        assert_eq!(m_sigma(&table, &c4, 5, &om2, &c4.zero()), 2);
        // ω₁ is not below ω₂, so the second row is ignored and flagged.
        assert_eq!(m_sigma(&table, &c4, 5, &om2, &c4.omega(1)), 0);
        assert!(table.validate(&c4).is_err());
        let ms = socle_weights_small(&c4, 5, 1, &om2, &table).unwrap();
        assert_eq!(ms.multiplicity(&c4.zero()), 2);
        assert_eq!(ms.total(), 4 + 2);
    }

    #[test]
    fn preconditions() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        assert!(socle_weights_general(&rs, 2, 1, &rs.zero(), &ZeroProvider).is_err());
        assert!(socle_weights_general(&rs, 5, 1, &w(&[5, 0]), &ZeroProvider).is_err());
        assert!(socle_weights_small(&rs, 5, 1, &w(&[4, 0]), &ZeroProvider).is_err());
        assert!(socle_weights_small(&rs, 3, 1, &w(&[1, 0]), &ZeroProvider).is_err());
    }

    #[test]
    fn ext1_uses_the_dual_weight() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(
            ext1_weights(&a2, 5, 1, &a2.omega(1), &ZeroProvider).unwrap(),
            socle_weights_small(&a2, 5, 1, &a2.omega(2), &ZeroProvider).unwrap()
        );
        let b3 = RootSystem::new(Family::B, 3).unwrap();
        let lam = b3.omega(1);
        assert_eq!(
            ext1_weights(&b3, 5, 2, &lam, &SupersetProvider).unwrap(),
            socle_weights_small(&b3, 5, 2, &lam, &SupersetProvider).unwrap()
        );
    }

    #[test]
    fn terms_replay() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let lam = w(&[1, 0, 1]);
        for t in socle_terms_general(&rs, 5, 3, &lam, &SupersetProvider).unwrap() {
            assert_eq!(&t.replay(&rs, 5, &lam).unwrap(), t.weight());
        }
    }
}
