//! Independent oracles shared by the integration tests.
//!
//! Everything here works from the Cartan matrix alone (or from ε-coordinates
//! for types B and C) and never calls the toolkit's own algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use liecheck::rootsys::{cartan_matrix, Family};

pub type V = Vec<i64>;

/// Orbit enumeration refuses Weyl groups larger than this.
pub const ORBIT_GATE: u128 = 10_000_000;

pub fn cartan(f: Family, n: usize) -> Vec<Vec<i64>> {
    cartan_matrix(f, n).unwrap()
}

/// s_i(x) = x − x_i α_i, with α_i the i-th Cartan row (0-based i).
pub fn reflect(a: &[Vec<i64>], x: &[i64], i: usize) -> V {
    let c = x[i];
    x.iter().zip(&a[i]).map(|(xj, aij)| xj - c * aij).collect()
}

/// s_i · x = x − (x_i + 1) α_i.
pub fn dot_simple(a: &[Vec<i64>], x: &[i64], i: usize) -> V {
    let c = x[i] + 1;
    x.iter().zip(&a[i]).map(|(xj, aij)| xj - c * aij).collect()
}

/// Dot action of a word of 1-based labels; the rightmost letter acts first.
pub fn dot_word(a: &[Vec<i64>], word: &[usize], x: &[i64]) -> V {
    word.iter()
        .rev()
        .fold(x.to_vec(), |acc, &i| dot_simple(a, &acc, i - 1))
}

pub fn add(x: &[i64], y: &[i64]) -> V {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[i64], y: &[i64]) -> V {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(k: i64, x: &[i64]) -> V {
    x.iter().map(|a| k * a).collect()
}

pub fn omega(n: usize, i: usize) -> V {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

pub fn rho(n: usize) -> V {
    vec![1; n]
}

/// Positive roots in ω-coordinates, from the W-orbit of the simple roots in
/// root coordinates (positive = all coefficients ≥ 0).
pub fn positive_roots(a: &[Vec<i64>]) -> Vec<V> {
    let n = a.len();
    let mut seen: HashSet<V> = HashSet::new();
    let mut queue: VecDeque<V> = (1..=n).map(|i| omega(n, i)).collect();
    while let Some(b) = queue.pop_front() {
        if !seen.insert(b.clone()) {
            continue;
        }
        for i in 0..n {
            // ⟨β, α_i∨⟩ = Σ_j b_j A[j][i]
            let pairing: i64 = (0..n).map(|j| b[j] * a[j][i]).sum();
            let mut c = b.clone();
            c[i] -= pairing;
            if !seen.contains(&c) {
                queue.push_back(c);
            }
        }
    }
    let mut out: Vec<V> = seen
        .into_iter()
        .filter(|b| b.iter().all(|&c| c >= 0))
        .map(|b| {
            (0..n)
                .map(|k| (0..n).map(|j| b[j] * a[j][k]).sum())
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// All roots in ω-coordinates.
pub fn all_roots(a: &[Vec<i64>]) -> Vec<V> {
    let pos = positive_roots(a);
    let mut out: Vec<V> = pos.iter().map(|b| scale(-1, b)).collect();
    out.extend(pos);
    out.sort();
    out
}

/// W-orbit of x under the linear action; None above `cap` elements.
pub fn orbit(a: &[Vec<i64>], x: &[i64], cap: usize) -> Option<HashSet<V>> {
    let mut seen: HashSet<V> = HashSet::new();
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(y) = queue.pop_front() {
        if !seen.insert(y.clone()) {
            continue;
        }
        if seen.len() > cap {
            return None;
        }
        for i in 0..a.len() {
            let z = reflect(a, &y, i);
            if !seen.contains(&z) {
                queue.push_back(z);
            }
        }
    }
    Some(seen)
}

/// Dominant weights ≤ λ, generated by subtracting positive roots while staying dominant.
pub fn dominant_below(a: &[Vec<i64>], lambda: &[i64]) -> BTreeSet<V> {
    let pos = positive_roots(a);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(x) = queue.pop_front() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for b in &pos {
            let y = sub(&x, b);
            if y.iter().all(|&c| c >= 0) && !seen.contains(&y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// λ* = −w₀λ from the diagram automorphism.
pub fn star(f: Family, x: &[i64]) -> V {
    let n = x.len();
    let mut y = x.to_vec();
    match f {
        Family::A => y.reverse(),
        Family::D if n % 2 == 1 => y.swap(n - 2, n - 1),
        Family::E if n == 6 => {
            y.swap(0, 5);
            y.swap(2, 4);
        }
        _ => {}
    }
    y
}

/// Type B_n: twice the ε-coordinates of a weight (ω_n = ½Σε).
pub fn b_doubled_eps(x: &[i64]) -> V {
    let n = x.len();
    (0..n)
        .map(|k| 2 * x[k..n - 1].iter().sum::<i64>() + x[n - 1])
        .collect()
}

/// Type C_n: ε-coordinates (ω_i = ε₁ + … + ε_i).
pub fn c_eps(x: &[i64]) -> V {
    let n = x.len();
    (0..n).map(|k| x[k..].iter().sum()).collect()
}

/// Is there a signed permutation σ with σ(x) ≡ y (mod m), coordinatewise?
/// Backtracking over target positions.
pub fn signed_perm_congruent(x: &[i64], y: &[i64], m: i64) -> bool {
    fn go(x: &[i64], y: &[i64], m: i64, pos: usize, used: &mut [bool]) -> bool {
        if pos == y.len() {
            return true;
        }
        for k in 0..x.len() {
            if used[k] {
                continue;
            }
            for s in [1, -1] {
                if (s * x[k] - y[pos]).rem_euclid(m) == 0 {
                    used[k] = true;
                    if go(x, y, m, pos + 1, used) {
                        return true;
                    }
                    used[k] = false;
                }
            }
        }
        false
    }
    let mut used = vec![false; x.len()];
    go(x, y, m, 0, &mut used)
}

/// Brute-force W_p-linkage in B_n: some signed permutation of 2(λ+ρ) is
/// congruent to 2(μ+ρ) modulo 2p (ZΦ = Z^n in ε-coordinates).
pub fn linked_b(lambda: &[i64], mu: &[i64], p: i64) -> bool {
    let r = rho(lambda.len());
    signed_perm_congruent(
        &b_doubled_eps(&add(lambda, &r)),
        &b_doubled_eps(&add(mu, &r)),
        2 * p,
    )
}

/// Brute-force Ŵ_p-linkage in C_n: pX(T) = pZ^n in ε-coordinates.
pub fn linked_extended_c(lambda: &[i64], mu: &[i64], p: i64) -> bool {
    let r = rho(lambda.len());
    signed_perm_congruent(&c_eps(&add(lambda, &r)), &c_eps(&add(mu, &r)), p)
}

/// Orbit-based W_p-linkage for types whose root lattice is the whole weight
/// lattice (E8, F4, G2): some w(λ+ρ) − (μ+ρ) lies in pX(T).
pub fn linked_orbit_trivial_group(
    a: &[Vec<i64>],
    lambda: &[i64],
    mu: &[i64],
    p: i64,
) -> Option<bool> {
    let n = a.len();
    let x = add(lambda, &rho(n));
    let y = add(mu, &rho(n));
    let orb = orbit(a, &x, ORBIT_GATE as usize)?;
    Some(
        orb.iter()
            .any(|z| sub(z, &y).iter().all(|c| c.rem_euclid(p) == 0)),
    )
}

/// Orbit-based W_p-linkage in B_n with the ε-lattice test; gated by orbit size.
pub fn linked_orbit_b(lambda: &[i64], mu: &[i64], p: i64) -> Option<bool> {
    let n = lambda.len();
    let a = cartan(Family::B, n);
    let x = add(lambda, &rho(n));
    let y = b_doubled_eps(&add(mu, &rho(n)));
    let orb = orbit(&a, &x, ORBIT_GATE as usize)?;
    Some(orb.iter().any(|z| {
        b_doubled_eps(z)
            .iter()
            .zip(&y)
            .all(|(u, v)| (u - v).rem_euclid(2 * p) == 0)
    }))
}

/// Small deterministic generator for test sweeps.
pub fn rng(seed: u64) -> rand::rngs::StdRng {
    use rand::SeedableRng;
    rand::rngs::StdRng::seed_from_u64(seed)
}
