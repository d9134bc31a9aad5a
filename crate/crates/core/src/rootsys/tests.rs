use super::*;
use proptest::prelude::*;

fn rs(f: Family, n: usize) -> RootSystem {
    build_root_system(f, n).unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

fn all_test_types() -> Vec<(Family, usize)> {
    vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 5),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 6),
        (Family::D, 4),
        (Family::D, 5),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ]
}

#[test]
fn positive_root_counts_match_classical_formulas() {
    for (f, n) in all_test_types() {
        let expect = match f {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        };
        assert_eq!(rs(f, n).positive_roots.len(), expect, "{f}{n}");
    }
}

#[test]
fn coxeter_numbers_and_group_orders() {
    let cases = [
        (Family::A, 4, 5, 5, 120u128),
        (Family::B, 4, 8, 2, 384),
        (Family::C, 3, 6, 2, 48),
        (Family::D, 5, 8, 4, 1920),
        (Family::E, 6, 12, 3, 51_840),
        (Family::E, 7, 18, 2, 2_903_040),
        (Family::E, 8, 30, 1, 696_729_600),
        (Family::F, 4, 12, 1, 1152),
        (Family::G, 2, 6, 1, 12),
    ];
    for (f, n, h, fg, wo) in cases {
        let r = rs(f, n);
        assert_eq!(r.coxeter_number, h, "{f}{n}");
        assert_eq!(r.fundamental_group_order, fg, "{f}{n}");
        assert_eq!(r.weyl_group_order(), wo, "{f}{n}");
        assert_eq!(
            r.pairing(&r.rho, &r.highest_short).unwrap(),
            h - 1,
            "{f}{n}"
        );
    }
}

#[test]
fn highest_roots_in_fundamental_weights() {
    let g2 = rs(Family::G, 2);
    assert_eq!(g2.positive_roots.len(), 6);
    assert_eq!(g2.highest_short, w(&[1, 0]));
    assert_eq!(g2.highest_long, w(&[0, 1]));
    let a1 = rs(Family::A, 1);
    assert_eq!(a1.positive_roots, vec![w(&[2])]);
    let e8 = rs(Family::E, 8);
    assert_eq!(e8.highest_long, Weight::omega(8, 8));
    assert_eq!(e8.pairing(&e8.rho, &e8.highest_short).unwrap(), 29);
}

#[test]
fn pairing_examples() {
    let b2 = rs(Family::B, 2);
    let om2 = b2.omega(2);
    assert_eq!(b2.pairing(&om2, b2.simple_root(1)).unwrap(), 0);
    assert_eq!(b2.pairing(&om2, b2.simple_root(2)).unwrap(), 1);
    assert!(b2.pairing(&om2, &w(&[1, 1])).is_err());
    for (f, n) in all_test_types() {
        let r = rs(f, n);
        for a in &r.simple_roots {
            assert_eq!(r.pairing(&r.rho, a).unwrap(), 1);
        }
    }
}

#[test]
fn dot_reflect_examples() {
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.dot_reflect(1, &a2.omega(1)).unwrap(), w(&[-3, 2]));
    // Wall of the dot action.
    let lam = w(&[-1, 4]);
    assert_eq!(a2.dot_reflect(1, &lam).unwrap(), lam);
    let b2 = rs(Family::B, 2);
    let x = b2.dot_word(&[1, 2], &b2.zero()).unwrap();
    let got = &(-&x) - b2.simple_root(2);
    assert_eq!(got, w(&[4, -4]));
    assert!(a2.dot_reflect(3, &lam).is_err());
}

#[test]
fn affine_dot_reflect_examples() {
    let a1 = rs(Family::A, 1);
    let alpha = a1.simple_root(1).clone();
    assert_eq!(
        a1.affine_dot_reflect(&alpha, 1, 5, &a1.zero()).unwrap(),
        w(&[8])
    );
    let e8 = rs(Family::E, 8);
    let a0 = e8.highest_short.clone();
    let s0 = |l: &Weight| e8.affine_dot_reflect(&a0, 1, 31, l).unwrap();
    let z = e8.zero();
    assert_eq!(s0(&z), w(&[0, 0, 0, 0, 0, 0, 0, 2]));
    let t = s0(&e8.dot_reflect(8, &z).unwrap());
    assert_eq!(t, w(&[0, 0, 0, 0, 0, 0, 1, 1]));
    let t = s0(&e8.dot_word(&[8, 7], &z).unwrap());
    assert_eq!(t, w(&[0, 0, 0, 0, 0, 1, 0, 1]));
}

#[test]
fn dominant_conjugate_examples() {
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.dominant_conjugate(&w(&[-1, 0])).0, w(&[0, 1]));
    let orbit = a2.orbit(&w(&[-1, 0]), 100).unwrap();
    assert!(orbit.contains(&w(&[0, 1])));
    let b2 = rs(Family::B, 2);
    assert_eq!(b2.dominant_conjugate(&w(&[-1, -1])).0, w(&[1, 1]));
    assert_eq!(b2.dominant_conjugate(&w(&[2, 3])), (w(&[2, 3]), false));
    let (d, word) = b2.dominant_conjugate_word(&w(&[-1, 3]));
    assert_eq!(b2.apply_word(&word, &w(&[-1, 3])), d);
}

#[test]
fn duality_star_examples() {
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.duality_star(&a2.omega(1)).unwrap(), a2.omega(2));
    let d4 = rs(Family::D, 4);
    assert_eq!(d4.duality_star(&d4.omega(3)).unwrap(), d4.omega(3));
    let d5 = rs(Family::D, 5);
    assert_eq!(d5.duality_star(&d5.omega(4)).unwrap(), d5.omega(5));
    let e6 = rs(Family::E, 6);
    assert_eq!(e6.duality_star(&e6.omega(2)).unwrap(), e6.omega(2));
    assert_eq!(e6.duality_star(&e6.omega(1)).unwrap(), e6.omega(6));
    assert_eq!(e6.duality_star(&e6.omega(3)).unwrap(), e6.omega(5));
    assert!(a2.duality_star(&w(&[-1, 0])).is_err());
    let e7 = rs(Family::E, 7);
    for i in 1..=7 {
        assert_eq!(e7.duality_star(&e7.omega(i)).unwrap(), e7.omega(i));
    }
}

#[test]
fn dominance_examples() {
    let a2 = rs(Family::A, 2);
    assert!(!a2.dominance_leq(&a2.omega(1), &a2.omega(2)));
    assert!(a2.dominance_leq(&a2.omega(1), &a2.omega(1)));
    let c12 = rs(Family::C, 12);
    let mut prev = c12.zero();
    for j in (2..=12).step_by(2) {
        let cur = c12.omega(j);
        assert!(c12.dominance_leq(&prev, &cur), "ω{j}");
        prev = cur;
    }
}

#[test]
fn dominant_weights_below_examples() {
    let c12 = rs(Family::C, 12);
    let mut expect: Vec<Weight> = (0..=6)
        .map(|i| if i == 0 { c12.zero() } else { c12.omega(2 * i) })
        .collect();
    expect.sort();
    assert_eq!(c12.dominant_weights_leq(&c12.omega(12)).unwrap(), expect);
    let d6 = rs(Family::D, 6);
    let mut expect = vec![d6.zero(), d6.omega(2), d6.omega(4)];
    expect.sort();
    assert_eq!(d6.dominant_weights_leq(&d6.omega(4)).unwrap(), expect);
    let e6 = rs(Family::E, 6);
    assert_eq!(
        e6.dominant_weights_leq(&e6.omega(1)).unwrap(),
        vec![e6.omega(1)]
    );
    assert!(e6.dominant_weights_leq(&w(&[-1, 0, 0, 0, 0, 0])).is_err());
}

#[test]
fn weight_superset_examples() {
    let b2 = rs(Family::B, 2);
    let s = b2.weight_superset(&b2.highest_long).unwrap();
    assert_eq!(s.len(), 9);
    for r in b2.roots() {
        assert!(s.contains(&r));
    }
    let a2 = rs(Family::A, 2);
    let s: Vec<Weight> = a2
        .weight_superset(&a2.omega(1))
        .unwrap()
        .into_iter()
        .collect();
    let mut expect = vec![w(&[1, 0]), w(&[-1, 1]), w(&[0, -1])];
    expect.sort();
    assert_eq!(s, expect);
    // Saturation oracle: closure of {λ} under μ ↦ μ − kα for k between 0
    // and (μ, α∨), the defining property of saturated sets.
    let c3 = rs(Family::C, 3);
    let lam = c3.omega(2);
    let mut closure: BTreeSet<Weight> = BTreeSet::new();
    let mut stack = vec![lam.clone()];
    while let Some(mu) = stack.pop() {
        if !closure.insert(mu.clone()) {
            continue;
        }
        for a in c3.roots() {
            let c = c3.pairing(&mu, &a).unwrap();
            for k in 1..=c.max(0) {
                let mut nu = mu.clone();
                nu.add_scaled(&a, -k);
                stack.push(nu);
            }
        }
    }
    let got = c3.weight_superset(&lam).unwrap();
    assert_eq!(got, closure);
    assert!(got.contains(&c3.zero()));
    assert_eq!(got.len(), c3.orbit(&lam, 1000).unwrap().len() + 1);
}

#[test]
fn lattice_membership_examples() {
    let a2 = rs(Family::A, 2);
    assert!(!a2.in_root_lattice(&a2.omega(1)));
    assert!(a2.in_root_lattice(&w(&[1, 1])));
    assert_eq!(
        a2.in_lattice_multiple(&a2.zero(), 7).unwrap(),
        Some(a2.zero())
    );
    let b2 = rs(Family::B, 2);
    assert_eq!(
        b2.in_lattice_multiple(&w(&[4, -4]), 4).unwrap(),
        Some(w(&[1, -1]))
    );
    assert_eq!(b2.in_lattice_multiple(&w(&[4, -3]), 4).unwrap(), None);
    assert!(b2.in_lattice_multiple(&w(&[4, -3]), 0).is_err());
}

#[test]
fn epsilon_round_trip_on_roots_and_fundamental_weights() {
    for (f, n) in all_test_types() {
        let r = rs(f, n);
        for i in 1..=n {
            let om = r.omega(i);
            assert_eq!(
                r.from_epsilon(&r.to_epsilon(&om)).unwrap(),
                om,
                "{f}{n} ω{i}"
            );
        }
        for a in r.roots() {
            assert_eq!(r.from_epsilon(&r.to_epsilon(&a)).unwrap(), a, "{f}{n} {a}");
        }
    }
    let b3 = rs(Family::B, 3);
    let rho = b3.to_epsilon(&b3.rho);
    assert_eq!(
        rho.entries,
        vec![
            Rational::new(5, 2),
            Rational::new(3, 2),
            Rational::new(1, 2)
        ]
    );
}

#[test]
fn reflection_words_realize_reflections() {
    for (f, n) in all_test_types() {
        let r = rs(f, n);
        for a in r.positive_roots.clone() {
            let word = r.reflection_word(&a).unwrap();
            for i in 1..=n {
                let x = r.omega(i);
                assert_eq!(r.apply_word(&word, &x), r.reflect(&x, &a).unwrap());
            }
        }
    }
}

#[test]
fn coset_representatives_cover_fundamental_group() {
    for (f, n) in all_test_types() {
        let r = rs(f, n);
        let reps = r.coset_representatives();
        assert_eq!(reps.len() as i64, r.fundamental_group_order, "{f}{n}");
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!r.in_root_lattice(&(a - b)), "{f}{n}: {a} ~ {b}");
            }
        }
    }
}

#[test]
fn rejects_invalid_types() {
    assert!(build_root_system(Family::D, 3).is_err());
    assert!(build_root_system(Family::F, 5).is_err());
}

fn type_strategy() -> impl Strategy<Value = (Family, usize)> {
    proptest::sample::select(all_test_types())
}

proptest! {
    #[test]
    fn dot_reflection_is_an_involution(
        (f, n) in type_strategy(),
        seed in proptest::collection::vec(-6i64..=6, 8),
        i in 1usize..=8,
    ) {
        let r = rs(f, n);
        let lam = Weight::new(seed[..n].to_vec());
        let i = 1 + (i - 1) % n;
        let once = r.dot_reflect(i, &lam).unwrap();
        prop_assert_eq!(r.dot_reflect(i, &once).unwrap(), lam.clone());
        let diff = &once - &lam;
        let c = diff.coords[i - 1] / 2;
        prop_assert_eq!(diff, r.simple_root(i).scaled(c));
    }

    #[test]
    fn dominant_conjugate_is_w_invariant(
        (f, n) in type_strategy(),
        seed in proptest::collection::vec(-6i64..=6, 8),
        word in proptest::collection::vec(1usize..=8, 0..12),
    ) {
        let r = rs(f, n);
        let lam = Weight::new(seed[..n].to_vec());
        let word: Vec<usize> = word.into_iter().map(|i| 1 + (i - 1) % n).collect();
        let moved = r.apply_word(&word, &lam);
        let d = r.dominant_conjugate(&lam).0;
        prop_assert!(d.is_dominant());
        prop_assert_eq!(r.dominant_conjugate(&moved).0, d.clone());
        prop_assert_eq!(r.dominant_conjugate(&d).0, d);
    }

    #[test]
    fn pairing_is_additive(
        (f, n) in type_strategy(),
        s1 in proptest::collection::vec(-6i64..=6, 8),
        s2 in proptest::collection::vec(-6i64..=6, 8),
        k in -3i64..=3,
        idx in 0usize..240,
    ) {
        let r = rs(f, n);
        let roots = r.roots();
        let a = &roots[idx % roots.len()];
        let x = Weight::new(s1[..n].to_vec());
        let y = Weight::new(s2[..n].to_vec());
        let mut z = x.clone();
        z.add_scaled(&y, k);
        prop_assert_eq!(
            r.pairing(&z, a).unwrap(),
            r.pairing(&x, a).unwrap() + k * r.pairing(&y, a).unwrap()
        );
    }

    #[test]
    fn epsilon_round_trip_random(
        (f, n) in type_strategy(),
        seed in proptest::collection::vec(-6i64..=6, 8),
    ) {
        let r = rs(f, n);
        let lam = Weight::new(seed[..n].to_vec());
        prop_assert_eq!(r.from_epsilon(&r.to_epsilon(&lam)).unwrap(), lam);
    }
}

#[test]
fn dominance_is_a_partial_order_on_sampled_triples() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for (f, n) in all_test_types() {
        let r = rs(f, n);
        // Sample within one root-lattice coset so comparisons are not vacuous.
        let base = r.omega(1);
        let sample = |rng: &mut rand::rngs::StdRng| {
            let mut x = base.clone();
            for i in 1..=n {
                x.add_scaled(r.simple_root(i), rng.gen_range(-2..=2));
            }
            x
        };
        for _ in 0..1000 {
            let (a, b, c) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            assert!(r.dominance_leq(&a, &a));
            if r.dominance_leq(&a, &b) && r.dominance_leq(&b, &a) {
                assert_eq!(a, b);
            }
            if r.dominance_leq(&a, &b) && r.dominance_leq(&b, &c) {
                assert!(r.dominance_leq(&a, &c));
            }
        }
    }
}
