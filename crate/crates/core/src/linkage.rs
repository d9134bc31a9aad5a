//! Linkage under the dot action of the affine Weyl group `W ⋉ pℤΦ` and the
//! extended affine Weyl group `W ⋉ pX(T)`.
//!
//! Every W_p-orbit of ρ-shifted weights meets the closed fundamental
//! p-alcove `{x : (x, α∨) ≥ 0 for simple α, (x, α₀∨) ≤ p}` exactly once, so
//! two weights are linked iff their alcove representatives agree. The affine
//! wall uses the highest short root α₀, whose coroot is the highest coroot.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::require_prime;
use crate::rootsys::{Family, RootSystem, Weight, Word};

/// Upper bound on reduction steps before the normal form gives up.
pub const ALCOVE_ITERATION_CAP: usize = 1_000_000;

/// One reflection applied to the ρ-shifted point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    /// The simple reflection s_i (1-based).
    Simple(usize),
    /// The affine reflection x ↦ x − ((x, α₀∨) − p)α₀.
    Affine,
}

/// Closed-alcove representative of the W_p-orbit of λ + ρ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlcoveForm {
    pub point: Weight,
    pub p: i64,
    pub reduction_trace: Vec<Step>,
}

impl AlcoveForm {
    /// Re-applies the trace to λ + ρ; equals `point` for a valid form.
    pub fn replay(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        let mut x = lambda + &rs.rho;
        for step in &self.reduction_trace {
            apply_step(rs, self.p, *step, &mut x);
        }
        x
    }

    /// Whether `point` satisfies the alcove inequalities.
    pub fn in_closed_alcove(&self, rs: &RootSystem) -> bool {
        self.point.is_dominant() && rs.pairing_highest_coroot(&self.point) <= self.p
    }
}

/// Weyl element and translation with `w(λ+ρ) = μ + ρ + pν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Reduced word for w, 1-based labels, rightmost factor acting first.
    pub word: Word,
    pub nu: Weight,
}

impl Witness {
    /// Checks `w(λ+ρ) = μ + ρ + pν` exactly.
    pub fn verify(&self, rs: &RootSystem, lambda: &Weight, mu: &Weight, p: i64) -> bool {
        let lhs = rs.apply_word(&self.word, &(lambda + &rs.rho));
        let mut rhs = mu + &rs.rho;
        rhs.add_scaled(&self.nu, p);
        lhs == rhs
    }
}

/// Outcome of a linkage test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageVerdict {
    pub linked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn apply_step(rs: &RootSystem, p: i64, step: Step, x: &mut Weight) {
    match step {
        Step::Simple(i) => rs.apply_simple(x, i),
        Step::Affine => {
            let c = rs.pairing_highest_coroot(x);
            x.add_scaled(&rs.highest_short, p - c);
        }
    }
}

/// Reduces λ + ρ into the closed fundamental p-alcove.
pub fn canonical_alcove_form(rs: &RootSystem, lambda: &Weight, p: i64) -> Result<AlcoveForm> {
    require_prime(p)?;
    rs.check_weight(lambda)?;
    let mut x = lambda + &rs.rho;
    let mut trace = Vec::new();
    loop {
        if trace.len() > ALCOVE_ITERATION_CAP {
            return Err(Error::IterationCap(format!(
                "alcove reduction of {lambda} at p = {p} in {}",
                rs.name()
            )));
        }
        if let Some(i) = x.coords.iter().position(|&c| c < 0) {
            rs.apply_simple(&mut x, i + 1);
            trace.push(Step::Simple(i + 1));
            continue;
        }
        if rs.pairing_highest_coroot(&x) > p {
            apply_step(rs, p, Step::Affine, &mut x);
            trace.push(Step::Affine);
            continue;
        }
        break;
    }
    Ok(AlcoveForm {
        point: x,
        p,
        reduction_trace: trace,
    })
}

/// Affine map x ↦ w x + t, with w kept as a (possibly unreduced) word.
struct AffineMap {
    word: Word,
    translation: Weight,
}

impl AffineMap {
    fn identity(rank: usize) -> Self {
        AffineMap {
            word: Vec::new(),
            translation: Weight::zero(rank),
        }
    }

    /// Replaces self by `step ∘ self`.
    fn push(&mut self, rs: &RootSystem, p: i64, step: Step) {
        match step {
            Step::Simple(i) => {
                self.word.insert(0, i);
                rs.apply_simple(&mut self.translation, i);
            }
            Step::Affine => {
                let s0 = rs.s_alpha0_word();
                self.word.splice(0..0, s0.iter().copied());
                self.translation = rs.apply_word(s0, &self.translation);
                self.translation.add_scaled(&rs.highest_short, p);
            }
        }
    }
}

/// Reduced word of the linear part of a word, read off its action on ρ.
fn reduce_word(rs: &RootSystem, word: &[usize]) -> Word {
    let image = rs.apply_word(word, &rs.rho);
    let (_, u) = rs.dominant_conjugate_word(&image);
    // u w ρ = ρ forces u w = 1, so w = u⁻¹.
    u.into_iter().rev().collect()
}

fn witness_from_forms(
    rs: &RootSystem,
    p: i64,
    from: &AlcoveForm,
    to: &AlcoveForm,
) -> Result<Witness> {
    let mut map = AffineMap::identity(rs.rank);
    for step in &from.reduction_trace {
        map.push(rs, p, *step);
    }
    // Every step is an involution, so the inverse of `to` replays its trace
    // backwards.
    for step in to.reduction_trace.iter().rev() {
        map.push(rs, p, *step);
    }
    let neg = -&map.translation;
    let nu = crate::rootsys::lattice_quotient(&neg, p).ok_or_else(|| {
        Error::Inconsistent(format!(
            "translation {} is not divisible by {p}",
            map.translation
        ))
    })?;
    Ok(Witness {
        word: reduce_word(rs, &map.word),
        nu,
    })
}

/// Linkage under W_p = W ⋉ pℤΦ.
pub fn linked(rs: &RootSystem, lambda: &Weight, mu: &Weight, p: i64) -> Result<LinkageVerdict> {
    let a = canonical_alcove_form(rs, lambda, p)?;
    let b = canonical_alcove_form(rs, mu, p)?;
    if a.point != b.point {
        return Ok(LinkageVerdict {
            linked: false,
            witness: None,
        });
    }
    let witness = witness_from_forms(rs, p, &a, &b)?;
    debug_assert!(witness.verify(rs, lambda, mu, p));
    Ok(LinkageVerdict {
        linked: true,
        witness: Some(witness),
    })
}

/// Linkage under Ŵ_p = W ⋉ pX(T): `w(λ+ρ) = μ + ρ + pν` with ν ∈ X(T).
pub fn linked_extended(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: i64,
) -> Result<LinkageVerdict> {
    for c in rs.coset_representatives() {
        let mut shifted = mu.clone();
        shifted.add_scaled(&c, p);
        let v = linked(rs, lambda, &shifted, p)?;
        if let Some(mut w) = v.witness {
            w.nu = &w.nu + &c;
            debug_assert!(w.verify(rs, lambda, mu, p));
            return Ok(LinkageVerdict {
                linked: true,
                witness: Some(w),
            });
        }
    }
    Ok(LinkageVerdict {
        linked: false,
        witness: None,
    })
}

/// JSON verdict record for one lemma instance.
#[derive(Clone, Debug, Serialize)]
pub struct LinkageReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub p: i64,
    pub lhs: Weight,
    pub rhs: Weight,
    pub extended: bool,
    pub linked: bool,
    /// The value the lemma asserts, when it asserts one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl LinkageReport {
    fn new(
        rs: &RootSystem,
        p: i64,
        lhs: Weight,
        rhs: Weight,
        extended: bool,
        verdict: LinkageVerdict,
        expected: Option<bool>,
    ) -> Self {
        LinkageReport {
            type_name: rs.name(),
            rank: rs.rank,
            p,
            lhs,
            rhs,
            extended,
            linked: verdict.linked,
            expected,
            witness: verdict.witness,
        }
    }

    /// True unless the verdict contradicts the asserted value.
    pub fn passes(&self) -> bool {
        self.expected.map_or(true, |e| e == self.linked)
    }
}

/// Report for α₀ versus ᾱ in type B, with two independent cross-checks.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaBReport {
    #[serde(flatten)]
    pub record: LinkageReport,
    /// Signed-permutation matching of the doubled ε-vectors modulo 2p.
    pub epsilon_matching: bool,
    /// The closed-form criterion n ≡ 1 (mod p).
    pub congruence: bool,
}

impl LemmaBReport {
    pub fn passes(&self) -> bool {
        self.record.passes()
            && self.record.linked == self.epsilon_matching
            && self.record.linked == self.congruence
    }
}

/// Decides linkage of α₀ and ᾱ in B_n. Here α₀ = ω₁ is the highest short root,
/// and ᾱ = ω₂ (n ≥ 3) or 2ω₂ (B₂) the highest long root.
pub fn verify_lemma_b(n: usize, p: i64) -> Result<LemmaBReport> {
    if n < 2 {
        return Err(Error::Precondition(format!("type B needs n >= 2, got {n}")));
    }
    require_prime(p)?;
    if p <= 3 {
        return Err(Error::Precondition(format!("needs p > 3, got {p}")));
    }
    let rs = RootSystem::new(Family::B, n)?;
    let lhs = rs.highest_short.clone();
    let rhs = rs.highest_long.clone();
    let verdict = linked(&rs, &lhs, &rhs, p)?;
    let congruence = n >= 3 && (n as i64 - 1) % p == 0;
    let expected = if congruence { None } else { Some(false) };
    let epsilon_matching = {
        let x = doubled_epsilon(&rs, &(&lhs + &rs.rho))?;
        let y = doubled_epsilon(&rs, &(&rhs + &rs.rho))?;
        signed_permutation_congruent(&x, &y, 2 * p)
    };
    Ok(LemmaBReport {
        record: LinkageReport::new(&rs, p, lhs, rhs, false, verdict, expected),
        epsilon_matching,
        congruence,
    })
}

/// Twice the ε-coordinates of a weight, as integers.
pub fn doubled_epsilon(rs: &RootSystem, w: &Weight) -> Result<Vec<i64>> {
    rs.to_epsilon(w)
        .entries
        .iter()
        .map(|c| {
            let d = c * crate::rootsys::Rational::from_integer(2);
            if d.is_integer() {
                Ok(d.to_integer())
            } else {
                Err(Error::Inconsistent(format!(
                    "{w} has quarter-integral ε-coordinates"
                )))
            }
        })
        .collect()
}

/// Whether some signed permutation carries `x` onto `y` modulo `m`
/// componentwise. For B_n (W = signed permutations, ℤΦ = ℤⁿ) with doubled
/// coordinates and m = 2p this is exactly W_p-linkage.
pub fn signed_permutation_congruent(x: &[i64], y: &[i64], m: i64) -> bool {
    let n = x.len();
    if y.len() != n {
        return false;
    }
    let ok =
        |i: usize, j: usize| (x[i] - y[j]).rem_euclid(m) == 0 || (x[i] + y[j]).rem_euclid(m) == 0;
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(
        i: usize,
        n: usize,
        ok: &dyn Fn(usize, usize) -> bool,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..n {
            if ok(i, j) && !seen[j] {
                seen[j] = true;
                if owner[j].map_or(true, |k| augment(k, n, ok, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|i| {
        let mut seen = vec![false; n];
        augment(i, n, &ok, &mut seen, &mut owner)
    })
}

/// Decides extended linkage of α₀ = ω₂ and ᾱ = 2ω₁ in C_n (n ≥ 3); the
/// lemma asserts they are not linked.
pub fn verify_lemma_c(n: usize, p: i64) -> Result<LinkageReport> {
    if n < 3 {
        return Err(Error::Precondition(format!("needs n >= 3, got {n}")));
    }
    require_prime(p)?;
    let rs = RootSystem::new(Family::C, n)?;
    let lhs = rs.highest_short.clone();
    let rhs = rs.highest_long.clone();
    let verdict = linked_extended(&rs, &lhs, &rhs, p)?;
    Ok(LinkageReport::new(
        &rs,
        p,
        lhs,
        rhs,
        true,
        verdict,
        Some(false),
    ))
}

/// Decides linkage of ᾱ and α₀ in F4 and G2; expected unlinked for p > 3.
pub fn verify_f4_g2(p: i64) -> Result<Vec<LinkageReport>> {
    require_prime(p)?;
    if p <= 3 {
        return Err(Error::Precondition(format!("needs p > 3, got {p}")));
    }
    [(Family::F, 4), (Family::G, 2)]
        .into_iter()
        .map(|(f, n)| {
            let rs = RootSystem::new(f, n)?;
            let lhs = rs.highest_long.clone();
            let rhs = rs.highest_short.clone();
            let verdict = linked(&rs, &lhs, &rhs, p)?;
            Ok(LinkageReport::new(
                &rs,
                p,
                lhs,
                rhs,
                false,
                verdict,
                Some(false),
            ))
        })
        .collect()
}

/// Decides extended linkage of ω_j and 0 in C_n; asserted unlinked for p > n.
pub fn verify_lemma_typec_zero(n: usize, p: i64, j: usize) -> Result<LinkageReport> {
    if n < 3 || j < 2 || j > n || j % 2 != 0 {
        return Err(Error::Precondition(format!(
            "needs n >= 3 and even j in 2..=n, got n = {n}, j = {j}"
        )));
    }
    require_prime(p)?;
    let rs = RootSystem::new(Family::C, n)?;
    let lhs = rs.omega(j);
    let rhs = rs.zero();
    let verdict = linked_extended(&rs, &lhs, &rhs, p)?;
    let expected = if p > n as i64 { Some(false) } else { None };
    Ok(LinkageReport::new(
        &rs, p, lhs, rhs, true, verdict, expected,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn alcove_form_examples() {
        let e8 = rs(Family::E, 8);
        let f = canonical_alcove_form(&e8, &e8.zero(), 31).unwrap();
        assert_eq!(f.point, e8.rho);
        assert!(f.reduction_trace.is_empty());
        let a1 = rs(Family::A, 1);
        let f = canonical_alcove_form(&a1, &Weight::new(vec![8]), 5).unwrap();
        assert_eq!(f.point, Weight::new(vec![1]));
        assert_eq!(f.replay(&a1, &Weight::new(vec![8])), f.point);
        let lam = Weight::new(vec![0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(canonical_alcove_form(&e8, &lam, 31).unwrap().point, e8.rho);
        assert!(canonical_alcove_form(&a1, &a1.zero(), 1).is_err());
    }

    #[test]
    fn linked_examples_with_witnesses() {
        let b6 = rs(Family::B, 6);
        let (o1, o2) = (b6.omega(1), b6.omega(2));
        assert!(!linked(&b6, &o1, &o2, 7).unwrap().linked);
        let v = linked(&b6, &o1, &o2, 5).unwrap();
        assert!(v.linked);
        let w = v.witness.unwrap();
        assert!(w.verify(&b6, &o1, &o2, 5));
        assert!(b6.in_root_lattice(&w.nu));
        let refl = linked(&b6, &o2, &o2, 5).unwrap();
        assert!(refl.linked);
        assert!(refl.witness.unwrap().word.is_empty());
    }

    #[test]
    fn extended_examples() {
        let c3 = rs(Family::C, 3);
        assert!(
            !linked_extended(&c3, &c3.omega(2), &c3.omega(1).scaled(2), 5)
                .unwrap()
                .linked
        );
        let c4 = rs(Family::C, 4);
        assert!(
            !linked_extended(&c4, &c4.omega(4), &c4.zero(), 5)
                .unwrap()
                .linked
        );
        let c12 = rs(Family::C, 12);
        let v = linked_extended(&c12, &c12.omega(6), &c12.zero(), 3).unwrap();
        assert!(v.linked);
        assert!(v
            .witness
            .unwrap()
            .verify(&c12, &c12.omega(6), &c12.zero(), 3));
    }

    #[test]
    fn lemma_examples() {
        assert!(verify_lemma_b(3, 5).unwrap().passes());
        assert!(!verify_lemma_b(3, 5).unwrap().record.linked);
        assert!(!verify_lemma_b(2, 5).unwrap().record.linked);
        let r = verify_lemma_b(11, 5).unwrap();
        assert!(r.record.linked && r.passes());
        assert!(verify_lemma_b(4, 3).is_err());
        for r in verify_f4_g2(5)
            .unwrap()
            .into_iter()
            .chain(verify_f4_g2(7).unwrap())
        {
            assert!(!r.linked);
        }
        assert!(verify_f4_g2(2).is_err());
        assert!(!verify_lemma_typec_zero(4, 5, 4).unwrap().linked);
        assert!(!verify_lemma_typec_zero(10, 11, 6).unwrap().linked);
        assert!(verify_lemma_typec_zero(12, 3, 6).unwrap().linked);
        assert!(verify_lemma_typec_zero(12, 3, 5).is_err());
        assert!(verify_lemma_c(3, 5).unwrap().passes());
    }

    #[test]
    fn matching_helper() {
        assert!(signed_permutation_congruent(&[1, 3], &[-3, 1], 10));
        assert!(!signed_permutation_congruent(&[5, 1], &[5, 3], 10));
        assert!(signed_permutation_congruent(&[5, 1], &[5, 9], 10));
    }

    proptest! {
        #[test]
        fn alcove_form_invariant_under_affine_moves(
            seed in proptest::collection::vec(-8i64..=8, 4),
            moves in proptest::collection::vec((0usize..40, -3i64..=3), 100),
            p in proptest::sample::select(vec![5i64, 7]),
        ) {
            let r = rs(Family::C, 4);
            let lam = Weight::new(seed);
            let base = canonical_alcove_form(&r, &lam, p).unwrap();
            prop_assert!(base.in_closed_alcove(&r));
            prop_assert_eq!(base.replay(&r, &lam), base.point.clone());
            let roots = r.roots();
            let mut x = lam.clone();
            for (k, m) in moves {
                let a = &roots[k % roots.len()];
                x = if m == 0 {
                    r.dot_reflect_root(a, &x).unwrap()
                } else {
                    r.affine_dot_reflect(a, m, p, &x).unwrap()
                };
            }
            prop_assert_eq!(canonical_alcove_form(&r, &x, p).unwrap().point, base.point);
        }
    }
}
