//! Exact root-system, weight-lattice and Weyl-group arithmetic for every
//! simple type, with Bourbaki labels.
//!
//! Weights are integer vectors in the fundamental-weight basis. Simple
//! roots are the rows of the Cartan matrix; positive roots come from
//! root-string closure. Labels of simple roots and fundamental weights are
//! 1-based in the public API, matching α₁..αₙ and ω₁..ωₙ.

mod family;
mod weight;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

pub use family::{
    cartan_matrix, coset_representative_labels, dot, epsilon_simple_roots, parse_type, Family,
    Rational,
};
pub use weight::Weight;

use crate::error::{Error, Result};

/// A product of simple reflections `s_{w[0]} s_{w[1]} ⋯`, 1-based labels;
/// the rightmost factor acts first.
pub type Word = Vec<usize>;

/// Exact vector in the ε-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector {
    pub entries: Vec<Rational>,
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Immutable data for one simple root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Weight>,
    pub positive_roots: Vec<Weight>,
    pub highest_long: Weight,
    pub highest_short: Weight,
    pub rho: Weight,
    pub coxeter_number: i64,
    pub fundamental_group_order: i64,
    pub epsilon_realization: Vec<Vec<Rational>>,
    /// Simple-root coefficients of each positive root.
    pos_coeffs: Vec<Vec<i64>>,
    /// Simple-coroot coefficients of each positive root's coroot.
    pos_coroots: Vec<Vec<i64>>,
    /// Half squared length of each positive root (short roots of simply
    /// laced types have 1).
    pos_half_len: Vec<i64>,
    /// Index of each root (positive `k`, negative `N + k`).
    root_index: HashMap<Vec<i64>, usize>,
    /// `det(cartan) · cartan⁻¹`, exact integers.
    inv_num: Vec<Vec<i64>>,
    /// Half squared lengths of simple roots.
    symmetrizer: Vec<i64>,
    /// Word for the reflection in the highest short root.
    s_alpha0_word: Word,
}

/// Serializable summary of a root system.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystemInfo {
    pub name: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Weight>,
    pub positive_root_count: usize,
    pub highest_long: Weight,
    pub highest_short: Weight,
    pub rho: Weight,
    pub coxeter_number: i64,
    pub fundamental_group_order: i64,
    pub weyl_group_order: u128,
}

/// Builds the root system of the given type.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        let cartan = cartan_matrix(family, rank)?;
        let n = rank;
        let simple_roots: Vec<Weight> = cartan.iter().map(|r| Weight::new(r.clone())).collect();
        let symmetrizer = symmetrizer(&cartan);
        let pos_coeffs = positive_root_coefficients(&cartan);
        let to_weight = |a: &[i64]| -> Weight {
            let mut w = Weight::zero(n);
            for (i, &ai) in a.iter().enumerate() {
                if ai != 0 {
                    w.add_scaled(&simple_roots[i], ai);
                }
            }
            w
        };
        let positive_roots: Vec<Weight> = pos_coeffs.iter().map(|a| to_weight(a)).collect();
        let half_len = |a: &[i64]| -> i64 {
            // (α, α) = Σ a_i a_j d_j A_ij
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += a[i] * a[j] * symmetrizer[j] * cartan[i][j];
                }
            }
            s / 2
        };
        let pos_half_len: Vec<i64> = pos_coeffs.iter().map(|a| half_len(a)).collect();
        let pos_coroots: Vec<Vec<i64>> = pos_coeffs
            .iter()
            .zip(&pos_half_len)
            .map(|(a, &d)| {
                a.iter()
                    .zip(&symmetrizer)
                    .map(|(&ai, &di)| {
                        debug_assert_eq!((ai * di) % d, 0);
                        ai * di / d
                    })
                    .collect()
            })
            .collect();
        let npos = positive_roots.len();
        let mut root_index = HashMap::with_capacity(2 * npos);
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.coords.clone(), k);
            root_index.insert((-r).coords, npos + k);
        }
        let height = |k: usize| pos_coeffs[k].iter().sum::<i64>();
        let top = (0..npos).max_by_key(|&k| height(k)).expect("nonempty");
        let min_len = *pos_half_len.iter().min().expect("nonempty");
        let top_short = (0..npos)
            .filter(|&k| pos_half_len[k] == min_len)
            .max_by_key(|&k| height(k))
            .expect("nonempty");
        let (det, inv_num) = integer_inverse(&cartan);
        let epsilon_realization = epsilon_simple_roots(family, rank)?;
        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            simple_roots,
            highest_long: positive_roots[top].clone(),
            highest_short: positive_roots[top_short].clone(),
            positive_roots,
            rho: Weight::new(vec![1; n]),
            coxeter_number: height(top) + 1,
            fundamental_group_order: det,
            epsilon_realization,
            pos_coeffs,
            pos_coroots,
            pos_half_len,
            root_index,
            inv_num,
            symmetrizer,
            s_alpha0_word: Vec::new(),
        };
        rs.s_alpha0_word = rs.reflection_word(&rs.highest_short.clone())?;
        Ok(rs)
    }

    /// Name such as "E8".
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn info(&self) -> RootSystemInfo {
        RootSystemInfo {
            name: self.name(),
            rank: self.rank,
            cartan: self.cartan.clone(),
            simple_roots: self.simple_roots.clone(),
            positive_root_count: self.positive_roots.len(),
            highest_long: self.highest_long.clone(),
            highest_short: self.highest_short.clone(),
            rho: self.rho.clone(),
            coxeter_number: self.coxeter_number,
            fundamental_group_order: self.fundamental_group_order,
            weyl_group_order: self.weyl_group_order(),
        }
    }

    /// |W| = ∏ (m_i + 1) over the exponents m_i, read off the heights of
    /// positive roots: the number of roots of height k equals the number of
    /// exponents that are at least k.
    pub fn weyl_group_order(&self) -> u128 {
        let max_h = (self.coxeter_number - 1) as usize;
        let mut count = vec![0usize; max_h + 2];
        for a in &self.pos_coeffs {
            count[a.iter().sum::<i64>() as usize] += 1;
        }
        let mut order: u128 = 1;
        for m in 1..=max_h {
            for _ in 0..count[m] - count[m + 1] {
                order *= (m as u128) + 1;
            }
        }
        order
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// ω_i, 1-based.
    pub fn omega(&self, i: usize) -> Weight {
        Weight::omega(self.rank, i)
    }

    /// α_i, 1-based.
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i - 1]
    }

    /// All roots: positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Weight> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(|r| -r));
        v
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_index.contains_key(&w.coords)
    }

    /// Whether a root is short (only meaningful for roots).
    pub fn is_short_root(&self, w: &Weight) -> Result<bool> {
        let k = self.root_position(w)?;
        let min = *self.pos_half_len.iter().min().expect("nonempty");
        Ok(self.pos_half_len[k] == min)
    }

    /// Index in `positive_roots` of ±w, with the sign.
    fn root_lookup(&self, w: &Weight) -> Result<(usize, i64)> {
        let idx = *self
            .root_index
            .get(&w.coords)
            .ok_or_else(|| Error::NotARoot(w.to_string()))?;
        let npos = self.positive_roots.len();
        Ok(if idx < npos {
            (idx, 1)
        } else {
            (idx - npos, -1)
        })
    }

    fn root_position(&self, w: &Weight) -> Result<usize> {
        Ok(self.root_lookup(w)?.0)
    }

    /// Simple-root coefficients of a root.
    pub fn root_coefficients(&self, alpha: &Weight) -> Result<Vec<i64>> {
        let (k, s) = self.root_lookup(alpha)?;
        Ok(self.pos_coeffs[k].iter().map(|c| c * s).collect())
    }

    /// Simple-coroot coefficients of α∨.
    pub fn coroot_coefficients(&self, alpha: &Weight) -> Result<Vec<i64>> {
        let (k, s) = self.root_lookup(alpha)?;
        Ok(self.pos_coroots[k].iter().map(|c| c * s).collect())
    }

    /// Height of a root.
    pub fn root_height(&self, alpha: &Weight) -> Result<i64> {
        Ok(self.root_coefficients(alpha)?.iter().sum())
    }

    /// (w, α∨) for a root α.
    pub fn pairing(&self, w: &Weight, alpha: &Weight) -> Result<i64> {
        let c = self.coroot_coefficients(alpha)?;
        Ok(c.iter().zip(&w.coords).map(|(a, b)| a * b).sum())
    }

    /// (w, α₀∨) for the highest short root α₀ (its coroot is the highest coroot).
    pub fn pairing_highest_coroot(&self, w: &Weight) -> i64 {
        let k = self.root_index[&self.highest_short.coords];
        self.pos_coroots[k]
            .iter()
            .zip(&w.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Linear simple reflection s_i (1-based) applied in place.
    pub fn apply_simple(&self, x: &mut Weight, i: usize) {
        let c = x.coords[i - 1];
        if c != 0 {
            x.add_scaled(&self.simple_roots[i - 1], -c);
        }
    }

    /// Linear action of a word on a weight.
    pub fn apply_word(&self, word: &[usize], x: &Weight) -> Weight {
        let mut y = x.clone();
        for &i in word.iter().rev() {
            self.apply_simple(&mut y, i);
        }
        y
    }

    /// Linear reflection s_α(x) = x − (x, α∨)α.
    pub fn reflect(&self, x: &Weight, alpha: &Weight) -> Result<Weight> {
        let c = self.pairing(x, alpha)?;
        let mut y = x.clone();
        y.add_scaled(alpha, -c);
        Ok(y)
    }

    /// Dot action of a simple reflection: s_i·λ = λ − (λ+ρ, α_i∨)α_i.
    pub fn dot_reflect(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        if i == 0 || i > self.rank {
            return Err(Error::Precondition(format!(
                "simple root label {i} outside 1..={}",
                self.rank
            )));
        }
        let mut y = lambda.clone();
        y.add_scaled(&self.simple_roots[i - 1], -(lambda.coords[i - 1] + 1));
        Ok(y)
    }

    /// Dot action of a word (rightmost first).
    pub fn dot_word(&self, word: &[usize], lambda: &Weight) -> Result<Weight> {
        let mut y = lambda.clone();
        for &i in word.iter().rev() {
            y = self.dot_reflect(i, &y)?;
        }
        Ok(y)
    }

    /// Dot action of the reflection in an arbitrary root.
    pub fn dot_reflect_root(&self, alpha: &Weight, lambda: &Weight) -> Result<Weight> {
        let shifted = lambda + &self.rho;
        let c = self.pairing(&shifted, alpha)?;
        let mut y = lambda.clone();
        y.add_scaled(alpha, -c);
        Ok(y)
    }

    /// s_{α,mp}·λ = s_α·λ + mpα.
    pub fn affine_dot_reflect(
        &self,
        alpha: &Weight,
        m: i64,
        p: i64,
        lambda: &Weight,
    ) -> Result<Weight> {
        let mut y = self.dot_reflect_root(alpha, lambda)?;
        y.add_scaled(alpha, m * p);
        Ok(y)
    }

    /// Dominant conjugate with the parity of the number of simple
    /// reflections used (true = odd).
    pub fn dominant_conjugate(&self, lambda: &Weight) -> (Weight, bool) {
        let (w, word) = self.dominant_conjugate_word(lambda);
        (w, word.len() % 2 == 1)
    }

    /// Dominant conjugate and a word `w` with `w(λ)` dominant.
    pub fn dominant_conjugate_word(&self, lambda: &Weight) -> (Weight, Word) {
        let mut x = lambda.clone();
        let mut applied: Vec<usize> = Vec::new();
        while let Some(i) = x.coords.iter().position(|&c| c < 0) {
            self.apply_simple(&mut x, i + 1);
            applied.push(i + 1);
        }
        applied.reverse();
        (x, applied)
    }

    /// λ* = −w₀λ for dominant λ.
    pub fn duality_star(&self, lambda: &Weight) -> Result<Weight> {
        if !lambda.is_dominant() {
            return Err(Error::Precondition(format!(
                "duality_star needs a dominant weight, got {lambda}"
            )));
        }
        Ok(self.dominant_conjugate(&-lambda).0)
    }

    /// Simple-root coordinates of a weight times det(cartan).
    fn scaled_root_coords(&self, w: &Weight) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|j| (0..n).map(|i| w.coords[i] * self.inv_num[i][j]).sum())
            .collect()
    }

    /// Exact simple-root coordinates of a weight.
    pub fn root_coords(&self, w: &Weight) -> Vec<Rational> {
        let det = self.fundamental_group_order;
        self.scaled_root_coords(w)
            .into_iter()
            .map(|c| Rational::new(c, det))
            .collect()
    }

    /// Integer simple-root coordinates when `w ∈ ℤΦ`.
    pub fn integral_root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let det = self.fundamental_group_order;
        self.scaled_root_coords(w)
            .into_iter()
            .map(|c| if c % det == 0 { Some(c / det) } else { None })
            .collect()
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.integral_root_coords(w).is_some()
    }

    /// Whether `w ∈ mℤΦ`.
    pub fn in_root_lattice_multiple(&self, w: &Weight, m: i64) -> bool {
        match self.integral_root_coords(w) {
            Some(c) => c.iter().all(|x| x % m == 0),
            None => false,
        }
    }

    /// σ with λ = mσ, when it exists in X(T).
    pub fn in_lattice_multiple(&self, w: &Weight, m: i64) -> Result<Option<Weight>> {
        if m < 1 {
            return Err(Error::Precondition(format!(
                "modulus must be >= 1, got {m}"
            )));
        }
        Ok(lattice_quotient(w, m))
    }

    /// μ ≤ λ in the dominance order.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        match self.integral_root_coords(&(lambda - mu)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// Height of λ − μ when it lies in ℤΦ.
    pub fn height_of(&self, w: &Weight) -> Option<i64> {
        self.integral_root_coords(w).map(|c| c.iter().sum())
    }

    /// All dominant μ ≤ λ, sorted.
    pub fn dominant_weights_leq(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        if !lambda.is_dominant() {
            return Err(Error::Precondition(format!(
                "dominant_weights_leq needs a dominant weight, got {lambda}"
            )));
        }
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for beta in &self.positive_roots {
                let nu = &mu - beta;
                if nu.is_dominant() && seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// The linear W-orbit of λ, sorted. Fails when it exceeds `cap`.
    pub fn orbit(&self, lambda: &Weight, cap: usize) -> Result<Vec<Weight>> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(x) = queue.pop_front() {
            for i in 1..=self.rank {
                if x.coords[i - 1] == 0 {
                    continue;
                }
                let mut y = x.clone();
                self.apply_simple(&mut y, i);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::IterationCap(format!(
                            "orbit of {lambda} exceeds {cap} elements"
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Saturated set {ν : dominant conjugate of ν ≤ λ}, the weights of H⁰(λ).
    pub fn weight_superset(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        let mut out = BTreeSet::new();
        for mu in self.dominant_weights_leq(lambda)? {
            out.extend(self.orbit(&mu, 50_000_000)?);
        }
        Ok(out)
    }

    /// Word for the reflection s_α of a root α.
    pub fn reflection_word(&self, alpha: &Weight) -> Result<Word> {
        let mut beta = alpha.clone();
        if self.root_height(&beta)? < 0 {
            beta = -&beta;
        }
        let mut path = Vec::new();
        loop {
            if let Some(i) = self.simple_roots.iter().position(|s| *s == beta) {
                // α = u(α_i) with u = s_{path[0]} ⋯ s_{path[k-1]}
                let mut word = path.clone();
                word.push(i + 1);
                word.extend(path.iter().rev());
                return Ok(word);
            }
            let i = (0..self.rank)
                .find(|&i| {
                    beta.coords[i] > 0 && {
                        let mut t = beta.clone();
                        self.apply_simple(&mut t, i + 1);
                        self.root_height(&t).map(|h| h > 0).unwrap_or(false)
                    }
                })
                .ok_or_else(|| Error::Inconsistent(format!("cannot reduce root {beta}")))?;
            self.apply_simple(&mut beta, i + 1);
            path.push(i + 1);
        }
    }

    /// Word for the reflection in the highest short root.
    pub fn s_alpha0_word(&self) -> &Word {
        &self.s_alpha0_word
    }

    /// Coset representatives of X(T)/ℤΦ, starting with 0.
    pub fn coset_representatives(&self) -> Vec<Weight> {
        let mut v = vec![self.zero()];
        v.extend(
            coset_representative_labels(self.family, self.rank)
                .into_iter()
                .map(|i| self.omega(i)),
        );
        v
    }

    /// Fundamental weights in the ε-basis.
    pub fn epsilon_fundamental_weights(&self) -> Vec<Vec<Rational>> {
        let n = self.rank;
        let det = self.fundamental_group_order;
        let dim = self.epsilon_realization[0].len();
        (0..n)
            .map(|i| {
                let mut v = vec![Rational::from_integer(0); dim];
                for j in 0..n {
                    let c = Rational::new(self.inv_num[i][j], det);
                    for (k, e) in self.epsilon_realization[j].iter().enumerate() {
                        v[k] += c * e;
                    }
                }
                v
            })
            .collect()
    }

    /// Weight → ε-basis vector.
    pub fn to_epsilon(&self, w: &Weight) -> RationalVector {
        let fw = self.epsilon_fundamental_weights();
        let dim = self.epsilon_realization[0].len();
        let mut v = vec![Rational::from_integer(0); dim];
        for (c, f) in w.coords.iter().zip(&fw) {
            for (k, e) in f.iter().enumerate() {
                v[k] += e * Rational::from_integer(*c);
            }
        }
        RationalVector { entries: v }
    }

    /// ε-basis vector → weight, via c_i = 2(v, α_i)/(α_i, α_i).
    pub fn from_epsilon(&self, v: &RationalVector) -> Result<Weight> {
        let dim = self.epsilon_realization[0].len();
        if v.entries.len() != dim {
            return Err(Error::MalformedWeight(format!(
                "ε-vector of length {} for {} (expected {dim})",
                v.entries.len(),
                self.name()
            )));
        }
        let coords = self
            .epsilon_realization
            .iter()
            .map(|a| {
                let c = Rational::from_integer(2) * dot(&v.entries, a) / dot(a, a);
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::MalformedWeight(format!(
                        "{v} is not in the weight lattice of {}",
                        self.name()
                    )))
                }
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(Weight::new(coords))
    }

    /// Half squared lengths of simple roots.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Checks a weight's length against the rank.
    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::MalformedWeight(format!(
                "{w} has {} coordinates, {} has rank {}",
                w.rank(),
                self.name(),
                self.rank
            )));
        }
        Ok(())
    }
}

/// σ with w = mσ coordinatewise, if it exists.
pub fn lattice_quotient(w: &Weight, m: i64) -> Option<Weight> {
    if w.coords.iter().all(|c| c % m == 0) {
        Some(Weight::new(w.coords.iter().map(|c| c / m).collect()))
    } else {
        None
    }
}

/// Half squared lengths d_i with d_j A_ij = d_i A_ji, smallest equal to 1.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::from_integer(1));
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i != j && a[i][j] != 0 {
                    if let (Some(di), None) = (d[i], d[j]) {
                        d[j] = Some(di * Rational::new(a[j][i], a[i][j]));
                        changed = true;
                    }
                }
            }
        }
    }
    let d: Vec<Rational> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let min = *d.iter().min().expect("nonempty");
    d.iter().map(|x| (x / min).to_integer()).collect()
}

/// Positive roots as simple-root coefficient vectors, by root strings.
fn positive_root_coefficients(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for v in &level {
        known.insert(v.clone());
    }
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                // ⟨β, α_i∨⟩ = Σ_j b_j A_ji
                let pair: i64 = (0..n).map(|j| beta[j] * a[j][i]).sum();
                let mut r = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                if r - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        level = next;
    }
    all
}

/// Returns (det A, det A · A⁻¹) with exact integer entries.
fn integer_inverse(a: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(i64::from(i == j)))
                .collect()
        })
        .collect();
    let mut det = Rational::from_integer(1);
    for c in 0..n {
        let piv = (c..n)
            .find(|&r| m[r][c] != Rational::from_integer(0))
            .expect("Cartan matrices are nonsingular");
        if piv != c {
            m.swap(piv, c);
            inv.swap(piv, c);
            det = -det;
        }
        let pv = m[c][c];
        det *= pv;
        for j in 0..n {
            m[c][j] /= pv;
            inv[c][j] /= pv;
        }
        for r in 0..n {
            if r != c && m[r][c] != Rational::from_integer(0) {
                let f = m[r][c];
                for j in 0..n {
                    let (mc, ic) = (m[c][j], inv[c][j]);
                    m[r][j] -= f * mc;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    let det_i = det.to_integer();
    let scaled = inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let y = x * Rational::from_integer(det_i);
                    debug_assert!(y.is_integer());
                    y.to_integer()
                })
                .collect()
        })
        .collect();
    (det_i, scaled)
}

#[cfg(test)]
mod tests;
