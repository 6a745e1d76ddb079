use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prodcolor::sidon::{
    aux_graph_components, density, density_s, first_elements, generate_r, generate_s, generate_t,
    is_k_multiplicative, is_k_multiplicative_naive, max_sidon_subset, prime_product, SetKind,
    SmallPrimes,
};
use prodcolor::{Budget, Rational};

#[test]
fn generated_prefixes_are_multiplicative() {
    for k in 1..=30u64 {
        let r: Vec<u64> = generate_r(k, 200)
            .unwrap()
            .elements()
            .iter()
            .copied()
            .take_while(|&x| x <= 200)
            .collect();
        let s = generate_s(k, 200).unwrap();
        let t = generate_t(k, 200).unwrap();
        for set in [&r[..], s.elements(), t.elements()] {
            for end in 1..=set.len() {
                assert!(
                    is_k_multiplicative_naive(&set[..end], k),
                    "k={k} {:?}",
                    &set[..end]
                );
            }
        }
    }
}

#[test]
fn grouped_check_matches_naive_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut violations = 0;
    for _ in 0..1000 {
        let k = rng.gen_range(1..=10);
        let len = rng.gen_range(0..=12);
        let mut set: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=100)).collect();
        set.sort_unstable();
        set.dedup();
        let fast = is_k_multiplicative(&set, k);
        assert_eq!(fast, is_k_multiplicative_naive(&set, k), "k={k} {set:?}");
        violations += usize::from(!fast);
    }
    // both outcomes must actually occur
    assert!(violations > 100 && violations < 900, "{violations}");
}

#[test]
fn s_membership_is_periodic() {
    for k in 1..=13u64 {
        let period = prime_product(k).unwrap();
        if period > 100_000 {
            continue;
        }
        let small = SmallPrimes::new(k);
        for x in 1..=3 * period {
            assert_eq!(small.in_s(x), small.in_s(x + period), "k={k} x={x}");
        }
    }
}

#[test]
fn empirical_density_converges() {
    for k in [2u64, 3, 5] {
        let delta = density_s(k).unwrap();
        let period = Rational::from_integer(prime_product(k).unwrap() as i64);
        let small = SmallPrimes::new(k);
        let mut count = 0i64;
        for n in 1..=10_000i64 {
            if small.in_s(n as u64) {
                count += 1;
            }
            let n_r = Rational::from_integer(n);
            let freq = Rational::new(count, n);
            let gap = if freq.clone() >= delta.clone() {
                freq - delta.clone()
            } else {
                delta.clone() - freq
            };
            assert!(gap * n_r <= period.clone(), "k={k} n={n}");
        }
    }
}

#[test]
fn s_is_contained_in_t() {
    for k in 1..=15u64 {
        let small = SmallPrimes::new(k);
        for x in 1..=500 {
            if small.in_s(x) {
                assert!(small.in_t(x), "k={k} x={x}");
            }
        }
    }
}

#[test]
fn density_ordering() {
    for k in 2..=30u64 {
        let r = density(SetKind::R, k).unwrap();
        let s = density(SetKind::S, k).unwrap();
        let t = density(SetKind::T, k).unwrap();
        assert!(s <= t, "k={k}");
        assert!(r <= t, "k={k}");
    }
}

#[test]
fn max_subset_beats_constructions() {
    for k in 1..=5u64 {
        let small = SmallPrimes::new(k);
        for n in 1..=40u64 {
            let best = max_sidon_subset(n, k, Budget::default()).unwrap();
            assert!(is_k_multiplicative_naive(best.elements(), k));
            assert!(best.elements().iter().all(|&x| x <= n));
            let s = (1..=n).filter(|&x| small.in_s(x)).count();
            let t = (1..=n).filter(|&x| small.in_t(x)).count();
            let r = (1..=n).filter(|&x| x % k == 1 % k).count();
            assert!(best.len() >= s.max(t).max(r), "n={n} k={k}");
        }
    }
}

#[test]
fn max_subset_small_oracle_values() {
    // exhaustive over all subsets of [n]
    fn brute(n: u64, k: u64) -> usize {
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<u64> = (1..=n).filter(|x| mask >> (x - 1) & 1 == 1).collect();
                is_k_multiplicative_naive(&set, k)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }
    for k in 2..=4 {
        for n in 1..=14 {
            assert_eq!(
                max_sidon_subset(n, k, Budget::default()).unwrap().len(),
                brute(n, k),
                "n={n} k={k}"
            );
        }
    }
    assert_eq!(
        max_sidon_subset(20, 2, Budget::default()).unwrap().len(),
        14
    );
}

#[test]
fn components_start_with_a_clique() {
    for k in 1..=6u64 {
        for comp in aux_graph_components(120, k).unwrap() {
            let r = comp.members.len() as u64;
            let s = comp.seed;
            let expected: Vec<u64> = (1..=k.min(r)).map(|i| i * s).collect();
            assert_eq!(
                &comp.members[..expected.len()],
                &expected[..],
                "k={k} seed={s}"
            );
        }
    }
}

#[test]
fn t2_growth_envelope() {
    let t2 = first_elements(SetKind::T, 2, 10_000).unwrap();
    for (i, &t) in t2.elements().iter().enumerate() {
        let d = i as u64 + 1;
        let log = 64 - d.leading_zeros() as u64; // ceil(log2(d + 1))
        assert!(t <= (3 * d).div_ceil(2) + 8 * log, "d={d} t={t}");
    }
}

#[test]
fn table_densities_as_exact_fractions() {
    let expect = |kind, k, num: i64, den: i64| {
        let d = density(kind, k).unwrap();
        assert_eq!(d.numerator(), &BigInt::from(num));
        assert_eq!(d.denominator(), &BigInt::from(den));
    };
    expect(SetKind::S, 30, 442368, 2800733);
    expect(SetKind::T, 15, 11, 48);
    expect(SetKind::T, 2, 2, 3);
    expect(SetKind::R, 7, 1, 7);
}

proptest! {
    #[test]
    fn prop_grouped_equals_naive(
        k in 1u64..12,
        mut set in proptest::collection::vec(1u64..150, 0..10),
    ) {
        set.sort_unstable();
        set.dedup();
        prop_assert_eq!(is_k_multiplicative(&set, k), is_k_multiplicative_naive(&set, k));
    }

    #[test]
    fn prop_t_contains_s(k in 1u64..40, x in 1u64..100_000) {
        let small = SmallPrimes::new(k);
        prop_assert!(!small.in_s(x) || small.in_t(x));
    }
}
