//! Interval chase of G-cohomology through long exact sequences.
//!
//! Nodes are modules drawn from Weyl-module diagrams. Each node carries an
//! interval for dim H^i(G, -), i = 0..=3. Short exact sequences come from diagram
//! surgery and propagate through the long exact sequence by rank bookkeeping:
//! every term equals the sum of the ranks of its incoming and outgoing maps.

use std::collections::HashMap;

use serde::{Serialize, Serializer};

use super::diagram::{Label, ModuleDiagram};
use super::provider::{StructureProvider, WeylStructure};
use crate::error::{Error, Result};

/// Degrees tracked by the chase.
pub const DEGREES: usize = 4;
/// Pass cap for the fixpoint loop.
pub const MAX_PASSES: usize = 100;
/// Upper bound meaning "no information".
pub const UNBOUNDED: u64 = u64::MAX;

/// Closed interval `lower..=upper` for a dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohBound {
    pub lower: u64,
    #[serde(serialize_with = "ser_upper")]
    pub upper: u64,
}

fn ser_upper<S: Serializer>(u: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if *u == UNBOUNDED {
        s.serialize_none()
    } else {
        s.serialize_u64(*u)
    }
}

impl CohBound {
    pub fn exact(v: u64) -> Self {
        CohBound { lower: v, upper: v }
    }

    pub fn unknown() -> Self {
        CohBound {
            lower: 0,
            upper: UNBOUNDED,
        }
    }

    /// The value when the interval is a single point.
    pub fn value(&self) -> Option<u64> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lower <= v && v <= self.upper
    }

    /// Narrows to the intersection; errors when it is empty. Returns whether anything changed.
    fn tighten(&mut self, lower: u64, upper: u64) -> std::result::Result<bool, (u64, u64)> {
        let lo = self.lower.max(lower);
        let hi = self.upper.min(upper);
        if lo > hi {
            return Err((lo, hi));
        }
        let changed = lo != self.lower || hi != self.upper;
        self.lower = lo;
        self.upper = hi;
        Ok(changed)
    }
}

impl std::fmt::Display for CohBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.value(), self.upper) {
            (Some(v), _) => write!(f, "{v}"),
            (None, UNBOUNDED) => write!(f, "[{}, inf)", self.lower),
            (None, u) => write!(f, "[{}, {u}]", self.lower),
        }
    }
}

fn add(a: u64, b: u64) -> u64 {
    if a == UNBOUNDED || b == UNBOUNDED {
        UNBOUNDED
    } else {
        a + b
    }
}

fn sub_floor(a: u64, b: u64) -> u64 {
    if b == UNBOUNDED {
        0
    } else {
        a.saturating_sub(b)
    }
}

fn sub_ceil(a: u64, b: u64) -> u64 {
    if a == UNBOUNDED {
        UNBOUNDED
    } else {
        a.saturating_sub(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    Zero,
    /// Uniserial module, head first.
    Layers(Vec<Label>),
    /// H⁰(ω_t) whose layering is unknown.
    Induced(Label),
    /// Module known only through its composition factors (ascending).
    Factors(Vec<Label>),
}

impl std::fmt::Display for Key {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Key::Zero => write!(f, "0"),
            Key::Layers(v) if v == &[0] => write!(f, "k"),
            Key::Layers(v) if v.len() == 1 => write!(f, "L(ω{})", v[0]),
            Key::Layers(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.to_string()).collect();
                write!(f, "[{}]", parts.join(";"))
            }
            Key::Induced(t) => write!(f, "H0(ω{t})"),
            Key::Factors(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// Handle of a module registered with a [`Chase`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeId(usize);

struct Node {
    key: Key,
    h: [CohBound; DEGREES],
}

/// 0 → sub → mid → quot → 0.
struct Ses {
    terms: [usize; 3],
    /// ranks[k] is the rank of the map out of the k-th LES term (1-based); ranks[0] = 0.
    ranks: Vec<CohBound>,
    origin: String,
}

/// Result of chasing one target.
#[derive(Clone, Debug, Serialize)]
pub struct ChaseResult {
    pub bound: CohBound,
    pub passes: usize,
    pub converged: bool,
    pub trace: Vec<String>,
}

/// The chase engine for one (n, p).
pub struct Chase<'a> {
    provider: &'a dyn StructureProvider,
    n: usize,
    p: i64,
    nodes: Vec<Node>,
    index: HashMap<Key, usize>,
    pending: Vec<usize>,
    seqs: Vec<Ses>,
    sums: Vec<(usize, Vec<usize>)>,
    trace: Vec<String>,
    passes: usize,
    converged: bool,
}

impl<'a> Chase<'a> {
    pub fn new(provider: &'a dyn StructureProvider, n: usize, p: i64) -> Result<Self> {
        if !provider.covers(n, p) {
            return Err(Error::Precondition(format!(
                "provider {} does not cover C_{n} at p = {p}",
                provider.name()
            )));
        }
        Ok(Chase {
            provider,
            n,
            p,
            nodes: Vec::new(),
            index: HashMap::new(),
            pending: Vec::new(),
            seqs: Vec::new(),
            sums: Vec::new(),
            trace: Vec::new(),
            passes: 0,
            converged: false,
        })
    }

    /// Registers a uniserial module and everything its analysis needs.
    pub fn add(&mut self, d: &ModuleDiagram) -> Result<NodeId> {
        d.validate()?;
        let key = if d.is_empty() {
            Key::Zero
        } else {
            Key::Layers(d.layers.clone())
        };
        let id = self.intern(key)?;
        self.expand_pending()?;
        Ok(NodeId(id))
    }

    /// Registers the simple module L(ω_t).
    pub fn simple(&mut self, t: Label) -> Result<NodeId> {
        let id = self.intern(Key::Layers(vec![t]))?;
        self.expand_pending()?;
        Ok(NodeId(id))
    }

    pub fn bound(&self, id: NodeId, degree: usize) -> CohBound {
        self.nodes[id.0].h[degree]
    }

    pub fn trace(&self) -> &[String] {
        &self.trace
    }

    pub fn passes(&self) -> usize {
        self.passes
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    fn check_label(&self, t: Label) -> Result<()> {
        if t > self.n || t % 2 != 0 {
            return Err(Error::Precondition(format!(
                "label {t} lies outside Γ = {{0, ω2, …}} for C_{}",
                self.n
            )));
        }
        Ok(())
    }

    fn intern(&mut self, key: Key) -> Result<usize> {
        if let Some(&id) = self.index.get(&key) {
            return Ok(id);
        }
        match &key {
            Key::Layers(v) | Key::Factors(v) => {
                for &t in v {
                    self.check_label(t)?;
                }
            }
            Key::Induced(t) => self.check_label(*t)?,
            Key::Zero => {}
        }
        let id = self.nodes.len();
        self.nodes.push(Node {
            key: key.clone(),
            h: [CohBound::unknown(); DEGREES],
        });
        self.index.insert(key, id);
        self.pending.push(id);
        Ok(id)
    }

    fn weyl(&self, t: Label) -> Result<WeylStructure> {
        self.provider.weyl_module(self.n, self.p, t)
    }

    fn set(&mut self, id: usize, degree: usize, v: CohBound, why: &str) -> Result<bool> {
        let before = self.nodes[id].h[degree];
        let changed = self.nodes[id].h[degree]
            .tighten(v.lower, v.upper)
            .map_err(|(lo, hi)| {
                Error::Inconsistent(format!(
                    "H^{degree}({}) forced into the empty range [{lo}, {hi}] by {why}",
                    self.nodes[id].key
                ))
            })?;
        let after = self.nodes[id].h[degree];
        if changed && !before.is_exact() && after.is_exact() {
            self.trace.push(format!(
                "H^{degree}({}) = {after}: {why}",
                self.nodes[id].key
            ));
        }
        Ok(changed)
    }

    fn set_all(&mut self, id: usize, values: [u64; DEGREES], why: &str) -> Result<()> {
        for (d, v) in values.into_iter().enumerate() {
            self.set(id, d, CohBound::exact(v), why)?;
        }
        Ok(())
    }

    fn add_ses(&mut self, sub: usize, mid: usize, quot: usize) {
        let origin = format!(
            "0 → {} → {} → {} → 0",
            self.nodes[sub].key, self.nodes[mid].key, self.nodes[quot].key
        );
        if self.seqs.iter().any(|s| s.terms == [sub, mid, quot]) {
            return;
        }
        let mut ranks = vec![CohBound::unknown(); 3 * DEGREES + 1];
        ranks[0] = CohBound::exact(0);
        self.seqs.push(Ses {
            terms: [sub, mid, quot],
            ranks,
            origin,
        });
    }

    fn expand_pending(&mut self) -> Result<()> {
        while let Some(id) = self.pending.pop() {
            self.expand(id)?;
        }
        Ok(())
    }

    fn expand(&mut self, id: usize) -> Result<()> {
        match self.nodes[id].key.clone() {
            Key::Zero => self.set_all(id, [0; DEGREES], "zero module")?,
            Key::Induced(t) => {
                let base = if t == 0 { [1, 0, 0, 0] } else { [0; DEGREES] };
                self.set_all(id, base, "H^i(G, H0(μ)) is k for i = 0 = μ and 0 otherwise")?;
            }
            Key::Factors(fs) => {
                let parts = fs
                    .iter()
                    .map(|&t| self.intern(Key::Layers(vec![t])))
                    .collect::<Result<Vec<_>>>()?;
                self.sums.push((id, parts));
            }
            Key::Layers(v) if v.len() == 1 => self.expand_simple(id, v[0])?,
            Key::Layers(v) => self.expand_uniserial(id, &v)?,
        }
        Ok(())
    }

    fn expand_simple(&mut self, id: usize, t: Label) -> Result<()> {
        if t == 0 {
            return self.set_all(id, [1, 0, 0, 0], "H^i(G, k) vanishes for i > 0");
        }
        self.set(
            id,
            0,
            CohBound::exact(0),
            "Hom_G(k, L(ω)) = 0 for a nontrivial simple",
        )?;
        match self.weyl(t)? {
            WeylStructure::Uniserial(v) if v.is_simple() => {
                self.set_all(id, [0; DEGREES], "V(ω) simple, so L(ω) = H0(ω)")?;
            }
            WeylStructure::Uniserial(v) => {
                let h0 = v.flip();
                let mid = self.intern(Key::Layers(h0.layers.clone()))?;
                let quot = self.intern(Key::Layers(h0.layers[..h0.layers.len() - 1].to_vec()))?;
                self.add_ses(id, mid, quot);
            }
            WeylStructure::FactorsOnly { factors, .. } => {
                let mid = self.intern(Key::Induced(t))?;
                let mut rest = factors.clone();
                let pos = rest.iter().position(|&f| f == t).expect("head factor");
                rest.remove(pos);
                let quot = self.intern(Key::Factors(rest))?;
                self.add_ses(id, mid, quot);
            }
        }
        Ok(())
    }

    fn expand_uniserial(&mut self, id: usize, v: &[Label]) -> Result<()> {
        let socle = *v.last().expect("nonempty");
        let h0 = u64::from(socle == 0);
        self.set(
            id,
            0,
            CohBound::exact(h0),
            "Hom_G(k, M) counts k in the simple socle",
        )?;
        if let WeylStructure::Uniserial(w) = self.weyl(socle)? {
            if w.flip().layers == v {
                let why = format!(
                    "identified with H0(ω{socle}) (identical layers, Ext^1 between simples at most 1-dimensional)"
                );
                let base = if socle == 0 {
                    [1, 0, 0, 0]
                } else {
                    [0; DEGREES]
                };
                self.set_all(id, base, &why)?;
            }
        }
        let soc = self.intern(Key::Layers(vec![socle]))?;
        let top = self.intern(Key::Layers(v[..v.len() - 1].to_vec()))?;
        self.add_ses(soc, id, top);
        let rad = self.intern(Key::Layers(v[1..].to_vec()))?;
        let head = self.intern(Key::Layers(vec![v[0]]))?;
        self.add_ses(rad, id, head);
        Ok(())
    }

    /// Propagates until nothing changes or the pass cap is hit.
    pub fn run(&mut self) -> Result<()> {
        self.converged = false;
        for _ in 0..MAX_PASSES {
            self.passes += 1;
            let mut changed = false;
            for s in 0..self.seqs.len() {
                changed |= self.propagate_ses(s)?;
            }
            for s in 0..self.sums.len() {
                changed |= self.propagate_sum(s)?;
            }
            if !changed {
                self.converged = true;
                break;
            }
        }
        Ok(())
    }

    fn propagate_ses(&mut self, s: usize) -> Result<bool> {
        let terms = self.seqs[s].terms;
        let len = 3 * DEGREES;
        // LES term k (1-based) is H^{(k-1)/3} of terms[(k-1)%3].
        let locate = |k: usize| (terms[(k - 1) % 3], (k - 1) / 3);
        let mut x: Vec<CohBound> = (1..=len)
            .map(|k| {
                let (node, d) = locate(k);
                self.nodes[node].h[d]
            })
            .collect();
        x.insert(0, CohBound::exact(0));
        let mut r = self.seqs[s].ranks.clone();
        let bad = |_| {
            Error::Inconsistent(format!(
                "rank bookkeeping failed on {}",
                self.seqs[s].origin
            ))
        };
        loop {
            let mut local = false;
            for k in 1..=len {
                // x_k = r_{k-1} + r_k
                let (a, b) = (r[k - 1], r[k]);
                local |= x[k]
                    .tighten(add(a.lower, b.lower), add(a.upper, b.upper))
                    .map_err(bad)?;
                let xk = x[k];
                local |= r[k - 1]
                    .tighten(sub_floor(xk.lower, b.upper), sub_ceil(xk.upper, b.lower))
                    .map_err(bad)?;
                let a = r[k - 1];
                local |= r[k]
                    .tighten(sub_floor(xk.lower, a.upper), sub_ceil(xk.upper, a.lower))
                    .map_err(bad)?;
                // the map out of x_k has rank at most dim x_k and dim x_{k+1}
                let cap = if k < len {
                    xk.upper.min(x[k + 1].upper)
                } else {
                    xk.upper
                };
                local |= r[k].tighten(0, cap).map_err(bad)?;
            }
            if !local {
                break;
            }
        }
        self.seqs[s].ranks = r;
        let origin = format!("long exact sequence of {}", self.seqs[s].origin);
        let mut changed = false;
        for (k, &xk) in x.iter().enumerate().take(len + 1).skip(1) {
            let (node, d) = locate(k);
            changed |= self.set(node, d, xk, &origin)?;
        }
        Ok(changed)
    }

    fn propagate_sum(&mut self, s: usize) -> Result<bool> {
        let (id, parts) = self.sums[s].clone();
        let mut changed = false;
        for d in 0..DEGREES {
            let upper = parts
                .iter()
                .fold(0, |acc, &q| add(acc, self.nodes[q].h[d].upper));
            let why = format!(
                "subadditivity over composition factors of {}",
                self.nodes[id].key
            );
            changed |= self.set(id, d, CohBound { lower: 0, upper }, &why)?;
        }
        Ok(changed)
    }
}

/// dim H^degree(G, target) for a uniserial target, as exact value or interval.
pub fn chase_h(
    provider: &dyn StructureProvider,
    n: usize,
    p: i64,
    target: &ModuleDiagram,
    degree: usize,
) -> Result<ChaseResult> {
    if degree >= DEGREES {
        return Err(Error::Precondition(format!(
            "degree {degree} is not tracked"
        )));
    }
    let mut chase = Chase::new(provider, n, p)?;
    let id = chase.add(target)?;
    chase.run()?;
    Ok(ChaseResult {
        bound: chase.bound(id, degree),
        passes: chase.passes(),
        converged: chase.converged(),
        trace: chase.trace().to_vec(),
    })
}
