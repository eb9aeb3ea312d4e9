//! Property suites: randomized contracts and the exhaustive invariants
//! that span modules.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use middiv::counting::{
    count_middle_divisors_factored, count_middle_divisors_u64, factorize_u64, is_middle_divisor,
    is_middle_divisor_u64, isqrt, list_middle_divisors_u64, Factorization,
};
use middiv::sieve::{sieve_counts, stream_counts, SieveConfig};
use middiv::witness::{
    build_witness, exact_witness_count, smax_brackets, verify_witness, WitnessVariant,
};

#[test]
fn isqrt_contract_on_random_256_bit_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for trial in 0..10_000 {
        let len = (trial % 32) + 1; // up to 256 bits
        let mut bytes = vec![0u8; len];
        rng.fill_bytes(&mut bytes);
        let x = BigUint::from_bytes_be(&bytes);
        let r = isqrt(&x);
        assert!(&r * &r <= x, "trial {trial}");
        let r1 = &r + 1u32;
        assert!(&r1 * &r1 > x, "trial {trial}");
    }
}

#[test]
fn predicate_matches_exact_rational_interval() {
    // √(n/2) < d ≤ √(2n) evaluated as exact fractions: d² > n/2 and d² ≤ 2n
    for n in 1u64..=200 {
        for d in 1u64..=200 {
            let integer_form = n % d == 0 && 2 * d * d > n && d * d <= 2 * n;
            let d_sq = Ratio::from_integer(BigUint::from(d * d));
            let half_n = Ratio::new(BigUint::from(n), BigUint::from(2u32));
            let twice_n = Ratio::from_integer(BigUint::from(2 * n));
            let rational_form = n % d == 0 && d_sq > half_n && d_sq <= twice_n;
            assert_eq!(integer_form, rational_form, "n={n}, d={d}");
            assert_eq!(
                is_middle_divisor_u64(n, d),
                rational_form,
                "n={n}, d={d}"
            );
            assert_eq!(
                is_middle_divisor(&BigUint::from(n), &BigUint::from(d)),
                rational_form,
                "n={n}, d={d}"
            );
        }
    }
}

#[test]
fn three_counting_routes_agree_to_ten_thousand() {
    for n in 1u64..=10_000 {
        let count = count_middle_divisors_u64(n).unwrap();
        let list = list_middle_divisors_u64(n).unwrap();
        let factored = count_middle_divisors_factored(&factorize_u64(n).unwrap());
        assert_eq!(count, list.len() as u64, "n={n}");
        assert_eq!(count, factored, "n={n}");
    }
}

#[test]
fn witness_suite_to_sixty() {
    for i in 1..=60u64 {
        let brackets = smax_brackets(i);
        let cert = build_witness(i, WitnessVariant::Squared);
        let report = verify_witness(&cert);
        assert!(report.overall_pass, "i={i}");
        assert_eq!(report.verified_lower_bound, brackets.floor_smax, "i={i}");

        // growth: ⌊s_max⌋ ≥ ⌊0.69·i⌋, checked as (i+1)^t ≤ 2·i^t at t = ⌊69i/100⌋
        let t = (69 * i / 100) as u32;
        let holds_at_t = BigUint::from(i + 1).pow(t) <= (BigUint::from(i).pow(t) << 1);
        assert!(holds_at_t, "i={i}, t={t}");
        assert!(brackets.floor_smax >= t, "i={i}");
    }
}

#[test]
fn exact_witness_counts_dominate_the_bound_to_sixty() {
    for i in 1..=60u64 {
        let cert = build_witness(i, WitnessVariant::Squared);
        let exact = exact_witness_count(&cert);
        assert!(
            exact >= u64::from(cert.brackets.floor_smax),
            "i={i}: exact {exact} < floor {}",
            cert.brackets.floor_smax
        );
    }
}

proptest! {
    // boundary law, constructed at the boundary: d = 2k divides n = 2k²
    // with d² = 2n (included); d divides n = 2d² with 2d² = n (excluded)
    #[test]
    fn upper_boundary_included(k in 1u64..=2_000_000) {
        let n = 2 * k * k;
        let d = 2 * k;
        prop_assert!(n % d == 0);
        prop_assert!(is_middle_divisor_u64(n, d));
    }

    #[test]
    fn lower_boundary_excluded(d in 1u64..=2_000_000) {
        let n = 2 * d * d;
        prop_assert!(n % d == 0);
        prop_assert!(!is_middle_divisor_u64(n, d));
    }

    #[test]
    fn factored_route_matches_trial_division(factors in proptest::collection::vec(
        (prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), 1u32..=5), 0..4)
    ) {
        // merge duplicates through mul_pow, keeping the value below 2^63
        let mut f = Factorization::one();
        for (p, e) in factors {
            f = f.mul_pow(&factorize_u64(p).unwrap(), e);
        }
        let value = f.value();
        prop_assume!(value.bits() <= 40);
        let as_u64 = u64::try_from(&value).unwrap();
        prop_assert_eq!(
            count_middle_divisors_factored(&f),
            count_middle_divisors_u64(as_u64).unwrap()
        );
    }

    #[test]
    fn sieve_matches_per_n_counts(limit in 1u64..=3000, segment in 1u64..=512) {
        let counts = sieve_counts(&SieveConfig::with_segment_size(limit, segment)).unwrap();
        prop_assert_eq!(counts.len() as u64, limit);
        for n in 1..=limit {
            prop_assert_eq!(
                u64::from(counts[(n - 1) as usize]),
                count_middle_divisors_u64(n).unwrap()
            );
        }
    }

    #[test]
    fn streaming_visits_every_n_once(limit in 1u64..=2000, threads in 1usize..=4) {
        let cfg = SieveConfig::with_segment_size(limit, 64);
        let mut seen = Vec::new();
        stream_counts(&cfg, threads, |n, _| {
            seen.push(n);
            ControlFlow::Continue(())
        }).unwrap();
        let expected: Vec<u64> = (1..=limit).collect();
        prop_assert_eq!(seen, expected);
    }
}
