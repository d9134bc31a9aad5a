//! Sources of Weyl-module structure for V(ω_j) in type C_n.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use super::diagram::{DiagramKind, Label, ModuleDiagram, ProjectiveDiagram};
use crate::error::{Error, Result};

/// How a provider obtains its diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backing {
    Fixture,
    Rule,
}

/// What a provider knows about one Weyl module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "structure", rename_all = "snake_case")]
pub enum WeylStructure {
    /// Full uniserial layer structure.
    Uniserial(ModuleDiagram),
    /// Composition factors only (ascending); the layering is not determined.
    FactorsOnly { highest: Label, factors: Vec<Label> },
}

impl WeylStructure {
    pub fn highest(&self) -> Label {
        match self {
            WeylStructure::Uniserial(d) => d.highest,
            WeylStructure::FactorsOnly { highest, .. } => *highest,
        }
    }

    /// Composition factors in ascending order.
    pub fn factors(&self) -> Vec<Label> {
        match self {
            WeylStructure::Uniserial(d) => d.composition_factors(),
            WeylStructure::FactorsOnly { factors, .. } => factors.clone(),
        }
    }

    /// Composition multiplicity of L(ω_t).
    pub fn multiplicity(&self, t: Label) -> usize {
        self.factors().iter().filter(|&&l| l == t).count()
    }

    pub fn is_simple(&self) -> bool {
        self.factors().len() == 1
    }
}

/// Structure of V(ω_j) for C_n in characteristic p.
pub trait StructureProvider: Send + Sync {
    fn name(&self) -> &str;
    fn backing(&self) -> Backing;
    /// Whether the provider has data for (n, p).
    fn covers(&self, n: usize, p: i64) -> bool;
    /// The structure of V(ω_j); `j = 0` is the trivial module.
    fn weyl_module(&self, n: usize, p: i64, j: Label) -> Result<WeylStructure>;
}

fn check_index(n: usize, j: Label) -> Result<()> {
    if j > n {
        return Err(Error::Precondition(format!(
            "ω_{j} does not exist in C_{n}"
        )));
    }
    Ok(())
}

/// Provider backed by explicit diagrams for one (n, p).
#[derive(Clone, Debug)]
pub struct FixtureProvider {
    pub n: usize,
    pub p: i64,
    diagrams: BTreeMap<Label, ModuleDiagram>,
    pub projective: Option<ProjectiveDiagram>,
}

impl FixtureProvider {
    /// Builds a provider from validated Weyl diagrams.
    pub fn new(n: usize, p: i64, diagrams: Vec<ModuleDiagram>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for mut d in diagrams {
            check_index(n, d.highest)?;
            d.kind = DiagramKind::Weyl;
            d.validate()?;
            if map.insert(d.highest, d).is_some() {
                return Err(Error::Inconsistent("duplicate diagram".into()));
            }
        }
        map.entry(0).or_insert(ModuleDiagram {
            highest: 0,
            layers: vec![0],
            kind: DiagramKind::Weyl,
        });
        Ok(FixtureProvider {
            n,
            p,
            diagrams: map,
            projective: None,
        })
    }

    /// Parses a JSON list of `{highest, layers}` records.
    pub fn from_json(n: usize, p: i64, text: &str) -> Result<Self> {
        let diagrams: Vec<ModuleDiagram> = serde_json::from_str(text)?;
        Self::new(n, p, diagrams)
    }

    pub fn from_path(n: usize, p: i64, path: &Path) -> Result<Self> {
        Self::from_json(n, p, &std::fs::read_to_string(path)?)
    }

    pub fn diagrams(&self) -> impl Iterator<Item = &ModuleDiagram> {
        self.diagrams.values()
    }
}

impl StructureProvider for FixtureProvider {
    fn name(&self) -> &str {
        "fixture"
    }

    fn backing(&self) -> Backing {
        Backing::Fixture
    }

    fn covers(&self, n: usize, p: i64) -> bool {
        n == self.n && p == self.p
    }

    fn weyl_module(&self, n: usize, p: i64, j: Label) -> Result<WeylStructure> {
        if !self.covers(n, p) {
            return Err(Error::Precondition(format!(
                "fixture covers C_{} at p = {}, not C_{n} at p = {p}",
                self.n, self.p
            )));
        }
        check_index(n, j)?;
        self.diagrams
            .get(&j)
            .cloned()
            .map(WeylStructure::Uniserial)
            .ok_or_else(|| Error::Precondition(format!("fixture has no diagram for V(ω_{j})")))
    }
}

/// The six Weyl modules V(ω_2), …, V(ω_12) of C_12 at p = 3 and the projective cover of k.
pub fn fixture_c12_p3() -> FixtureProvider {
    let rows: [(Label, &[Label]); 6] = [
        (2, &[2, 0]),
        (4, &[4]),
        (6, &[6, 0, 2]),
        (8, &[8, 6, 0]),
        (10, &[10]),
        (12, &[12, 8]),
    ];
    let diagrams = rows
        .iter()
        .map(|(h, l)| ModuleDiagram::weyl(*h, l.to_vec()).expect("fixture diagram"))
        .collect();
    let mut fx = FixtureProvider::new(12, 3, diagrams).expect("fixture provider");
    // Nodes: 0 top, right column 6,0,2, bottom 0, left column 6,0,2, and the 8 in the middle.
    fx.projective = Some(ProjectiveDiagram {
        labels: vec![0, 6, 0, 2, 0, 6, 0, 2, 8],
        edges: vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (5, 4),
            (6, 5),
            (7, 6),
            (0, 7),
            (8, 5),
            (1, 8),
        ],
    });
    fx
}

/// True when every base-p digit of `b` is 0 or equal to the matching digit of `a`.
pub fn contains_base_p(mut a: u64, mut b: u64, p: u64) -> bool {
    while b > 0 {
        let (da, db) = (a % p, b % p);
        if db != 0 && db != da {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// Composition factors of V(ω_k) in C_n: L(ω_{k-2i}) occurs, once, exactly when
/// n + 1 - k + 2i contains i to base p.
pub fn fundamental_composition_factors(n: usize, p: i64, k: Label) -> Result<Vec<Label>> {
    check_index(n, k)?;
    if p < 2 {
        return Err(Error::Precondition(format!("invalid characteristic {p}")));
    }
    let mut out: Vec<Label> = (0..=k / 2)
        .filter(|&i| contains_base_p((n + 1 - k + 2 * i) as u64, i as u64, p as u64))
        .map(|i| k - 2 * i)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Rule-backed provider: composition factors from the base-p containment rule.
///
/// Two factors under a simple head force a uniserial module; with three or more
/// the layering is left undetermined.
#[derive(Clone, Copy, Debug, Default)]
pub struct RuleProvider;

impl StructureProvider for RuleProvider {
    fn name(&self) -> &str {
        "rule"
    }

    fn backing(&self) -> Backing {
        Backing::Rule
    }

    fn covers(&self, n: usize, p: i64) -> bool {
        n >= 2 && crate::numeric::is_prime(p) && p > 2
    }

    fn weyl_module(&self, n: usize, p: i64, j: Label) -> Result<WeylStructure> {
        let mut factors = fundamental_composition_factors(n, p, j)?;
        Ok(match factors.len() {
            1 | 2 => {
                factors.reverse();
                WeylStructure::Uniserial(ModuleDiagram::weyl(j, factors)?)
            }
            _ => WeylStructure::FactorsOnly {
                highest: j,
                factors,
            },
        })
    }
}
