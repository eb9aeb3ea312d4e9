//! Unboundedness witnesses.
//!
//! For an index `i ≥ 1` let `s_max = ln 2 / ln(1 + 1/i)`, the exponent at
//! which `((i+1)/i)^s` reaches 2. The witness integer
//!
//! ```text
//! n(i) = 2·(i+1)^E · i^(2·⌈s_max⌉)
//! ```
//!
//! carries the divisor family `d(s) = (i+1)^(⌈s_max⌉+s) · i^(⌈s_max⌉−s)`
//! for `s = 1..⌊s_max⌋`, every member of which is a middle divisor when
//! `E = 2·⌈s_max⌉` (the [`WitnessVariant::Squared`] form, for which
//! `√(n/2) = ((i+1)·i)^⌈s_max⌉` is itself a divisor). Since
//! `⌊s_max⌋ → ∞`, the middle-divisor count is unbounded.
//!
//! The [`WitnessVariant::Literal`] form takes `E = ⌈2·s_max⌉` instead.
//! Whenever `⌈2·s_max⌉` is odd — first at `i = 3` — that exponent is one
//! short, `n/2` stops being the square of the intended anchor, and `d(1)`
//! overshoots `√(2n)`. Both variants are constructible so the discrepancy
//! is reproducible; verification reports it rather than erroring.
//!
//! Everything here is decided by exact big-integer power comparisons. No
//! logarithm is ever evaluated: `⌊s_max⌋` is the largest `s` with
//! `(i+1)^s ≤ 2·i^s`, and `⌈2·s_max⌉` the smallest `t` with
//! `(i+1)^t ≥ 4·i^t`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::counting::{
    count_middle_divisors_factored, factorize_u64, is_middle_divisor, Factorization,
};
use crate::error::{Error, Result};

/// Default cap on witness indices accepted by the CLI; override with the
/// `MIDDIV_MAX_I` environment variable.
pub const DEFAULT_MAX_WITNESS_INDEX: u64 = 10_000;

/// Exact integer brackets of `s_max = ln 2 / ln(1 + 1/i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmaxBrackets {
    pub i: u64,
    /// Largest `s ≥ 1` with `(i+1)^s ≤ 2·i^s`.
    pub floor_smax: u32,
    /// `floor_smax` when `s_max` is an integer (only `i = 1`), else `floor_smax + 1`.
    pub ceil_smax: u32,
    /// Smallest `t ≥ 1` with `(i+1)^t ≥ 4·i^t`, i.e. `⌈2·s_max⌉`.
    pub ceil_2smax: u32,
    pub is_exact_integer: bool,
}

/// Which exponent Eq-form the witness uses on the `i+1` base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessVariant {
    /// `n = 2·(i+1)^(2⌈s_max⌉)·i^(2⌈s_max⌉)`; `n/2` is a perfect square and
    /// the whole divisor family lands in the interval.
    Squared,
    /// `n = 2·(i+1)^⌈2s_max⌉·i^(2⌈s_max⌉)` with the exponent printed as-is;
    /// fails verification whenever `⌈2·s_max⌉` is odd.
    Literal,
}

impl WitnessVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessVariant::Squared => "squared",
            WitnessVariant::Literal => "literal",
        }
    }
}

/// One claimed middle divisor `d(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessDivisor {
    pub s: u32,
    pub d: BigUint,
}

/// The constructed witness: `n(i)`, its symbolic factorization, the square
/// root of `n/2` when it exists, and the claimed divisor family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub i: u64,
    pub variant: WitnessVariant,
    pub brackets: SmaxBrackets,
    pub n: BigUint,
    pub n_factorization: Factorization,
    pub sqrt_half_n: Option<BigUint>,
    pub divisors: Vec<WitnessDivisor>,
}

/// Outcome of the two checks on one claimed divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DivisorCheck {
    pub s: u32,
    pub divides_n: bool,
    /// Interval membership via the full middle-divisor predicate.
    pub in_interval: bool,
}

/// Machine-checkable verification record. A failing certificate yields
/// `overall_pass = false`; verification itself never errors.
#[derive(Clone, Debug, serde::Serialize)]
pub struct VerificationReport {
    pub certificate: WitnessCertificate,
    pub per_divisor: Vec<DivisorCheck>,
    pub sqrt_half_is_divisor: bool,
    /// Number of claimed divisors passing both checks; at most `⌊s_max⌋`.
    pub verified_lower_bound: u32,
    pub overall_pass: bool,
}

/// Computes `⌊s_max⌋`, `⌈s_max⌉`, and `⌈2·s_max⌉` by upward scans of exact
/// big-integer powers.
pub fn smax_brackets(i: u64) -> SmaxBrackets {
    assert!(i >= 1, "witness index must be positive");
    assert!(i < u64::MAX, "witness index overflow");
    let base = BigUint::from(i);
    let base_up = BigUint::from(i + 1);

    // floor: advance while (i+1)^(s+1) ≤ 2·i^(s+1); start holds at s = 1
    let mut s = 1u32;
    let mut up = base_up.clone();
    let mut lo = base.clone();
    loop {
        let next_up = &up * &base_up;
        let next_lo = &lo * &base;
        if next_up > (&next_lo << 1) {
            up = next_up;
            lo = next_lo;
            break;
        }
        up = next_up;
        lo = next_lo;
        s += 1;
    }
    let floor_smax = s;
    // `up`/`lo` now hold powers at floor_smax + 1; recompute at floor_smax
    let up_floor = &up / &base_up;
    let lo_floor = &lo / &base;
    let is_exact_integer = up_floor == (&lo_floor << 1);
    let ceil_smax = if is_exact_integer { floor_smax } else { floor_smax + 1 };

    // ⌈2·s_max⌉: smallest t with (i+1)^t ≥ 4·i^t
    let mut t = 1u32;
    let mut up2 = base_up.clone();
    let mut lo2 = base.clone();
    while up2 < (&lo2 << 2) {
        t += 1;
        up2 *= &base_up;
        lo2 *= &base;
    }

    SmaxBrackets {
        i,
        floor_smax,
        ceil_smax,
        ceil_2smax: t,
        is_exact_integer,
    }
}

/// Builds the witness certificate for index `i` in the chosen variant.
///
/// The factorization of `n(i)` is assembled from the factorizations of 2,
/// `i`, and `i+1` with exponent arithmetic; `n(i)` itself is never factored.
pub fn build_witness(i: u64, variant: WitnessVariant) -> WitnessCertificate {
    let brackets = smax_brackets(i);
    let c = brackets.ceil_smax;
    let exp_up = match variant {
        WitnessVariant::Squared => 2 * c,
        WitnessVariant::Literal => brackets.ceil_2smax,
    };
    let exp_lo = 2 * c;

    let base = BigUint::from(i);
    let base_up = BigUint::from(i + 1);
    let n = base_up.pow(exp_up) * base.pow(exp_lo) * 2u32;

    let n_factorization = factorize_u64(2)
        .expect("2 factors")
        .mul_pow(&factorize_u64(i + 1).expect("small base"), exp_up)
        .mul_pow(&factorize_u64(i).expect("small base"), exp_lo);
    debug_assert_eq!(n_factorization.value(), n);

    let sqrt_half_n = sqrt_of_half(&n_factorization);

    // d(s) = (i+1)^(c+s)·i^(c−s); step from s to s+1 multiplies by (i+1)/i,
    // which is exact on this family
    let mut divisors = Vec::with_capacity(brackets.floor_smax as usize);
    if brackets.floor_smax >= 1 {
        let mut d = base_up.pow(c + 1) * base.pow(c - 1);
        divisors.push(WitnessDivisor { s: 1, d: d.clone() });
        for s in 2..=brackets.floor_smax {
            d *= i + 1;
            d /= i;
            divisors.push(WitnessDivisor { s, d: d.clone() });
        }
    }

    WitnessCertificate {
        i,
        variant,
        brackets,
        n,
        n_factorization,
        sqrt_half_n,
        divisors,
    }
}

/// `√(n/2)` recovered from exponents, if `n/2` is a perfect square.
fn sqrt_of_half(n_factorization: &Factorization) -> Option<BigUint> {
    let mut root = BigUint::one();
    for &(p, e) in n_factorization.factors() {
        // n is even by construction; drop one factor of 2 to form n/2
        let e = if p == 2 { e.checked_sub(1)? } else { e };
        if e % 2 != 0 {
            return None;
        }
        root *= BigUint::from(p).pow(e / 2);
    }
    Some(root)
}

/// Checks every claimed divisor of a certificate against `n` by exact
/// arithmetic. Failures are recorded, never raised.
pub fn verify_witness(cert: &WitnessCertificate) -> VerificationReport {
    let n = &cert.n;
    let per_divisor: Vec<DivisorCheck> = cert
        .divisors
        .iter()
        .map(|wd| DivisorCheck {
            s: wd.s,
            divides_n: (n % &wd.d).is_zero(),
            in_interval: is_middle_divisor(n, &wd.d),
        })
        .collect();
    let sqrt_half_is_divisor = cert
        .sqrt_half_n
        .as_ref()
        .map_or(false, |r| (n % r).is_zero());
    let verified_lower_bound = per_divisor
        .iter()
        .filter(|c| c.divides_n && c.in_interval)
        .count() as u32;
    let overall_pass = per_divisor.iter().all(|c| c.divides_n && c.in_interval)
        && verified_lower_bound >= cert.brackets.floor_smax;
    VerificationReport {
        certificate: cert.clone(),
        per_divisor,
        sqrt_half_is_divisor,
        verified_lower_bound,
        overall_pass,
    }
}

/// The true middle-divisor count of `n(i)`, via factored enumeration. For a
/// passing certificate this is at least `verified_lower_bound`, usually far
/// more.
pub fn exact_witness_count(cert: &WitnessCertificate) -> u64 {
    count_middle_divisors_factored(&cert.n_factorization)
}

/// Reads the witness-index cap: `MIDDIV_MAX_I` when set and parseable,
/// otherwise [`DEFAULT_MAX_WITNESS_INDEX`].
pub fn witness_index_cap() -> u64 {
    std::env::var("MIDDIV_MAX_I")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_WITNESS_INDEX)
}

/// Enforces the witness-index cap for interface-facing callers.
pub fn check_witness_index(i: u64, cap: u64) -> Result<()> {
    if i == 0 {
        return Err(Error::ZeroValue { what: "i" });
    }
    if i > cap {
        return Err(Error::WitnessIndexTooLarge { i, cap });
    }
    Ok(())
}

// Certificates serialize with every arbitrary-precision value as a decimal
// string: i, variant, floor_smax, ceil_smax, ceil_2smax, n, n_factorization
// (array of [prime, exponent]), sqrt_half_n (string or null), divisors
// (array of {s, d}).
impl Serialize for WitnessCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct FactorizationPairs<'a>(&'a Factorization);
        impl Serialize for FactorizationPairs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.factors().len()))?;
                for &(p, e) in self.0.factors() {
                    seq.serialize_element(&(p.to_string(), e))?;
                }
                seq.end()
            }
        }
        struct DivisorEntry<'a>(&'a WitnessDivisor);
        impl Serialize for DivisorEntry<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = serializer.serialize_struct("divisor", 2)?;
                st.serialize_field("s", &self.0.s)?;
                st.serialize_field("d", &self.0.d.to_string())?;
                st.end()
            }
        }

        let mut st = serializer.serialize_struct("certificate", 9)?;
        st.serialize_field("i", &self.i)?;
        st.serialize_field("variant", &self.variant)?;
        st.serialize_field("floor_smax", &self.brackets.floor_smax)?;
        st.serialize_field("ceil_smax", &self.brackets.ceil_smax)?;
        st.serialize_field("ceil_2smax", &self.brackets.ceil_2smax)?;
        st.serialize_field("n", &self.n.to_string())?;
        st.serialize_field("n_factorization", &FactorizationPairs(&self.n_factorization))?;
        st.serialize_field(
            "sqrt_half_n",
            &self.sqrt_half_n.as_ref().map(|r| r.to_string()),
        )?;
        let entries: Vec<DivisorEntry> = self.divisors.iter().map(DivisorEntry).collect();
        st.serialize_field("divisors", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn brackets_spot_values() {
        let b = smax_brackets(1);
        assert_eq!(
            (b.floor_smax, b.ceil_smax, b.ceil_2smax, b.is_exact_integer),
            (1, 1, 2, true)
        );
        let b = smax_brackets(2);
        assert_eq!(
            (b.floor_smax, b.ceil_smax, b.ceil_2smax, b.is_exact_integer),
            (1, 2, 4, false)
        );
        let b = smax_brackets(3);
        assert_eq!((b.floor_smax, b.ceil_smax, b.ceil_2smax), (2, 3, 5));
        let b = smax_brackets(10);
        assert_eq!((b.floor_smax, b.ceil_smax), (7, 8));
    }

    #[test]
    fn brackets_satisfy_power_inequalities() {
        for i in 1..=60u64 {
            let b = smax_brackets(i);
            let base = big(i);
            let up = big(i + 1);
            assert!(b.floor_smax <= b.ceil_smax && b.ceil_smax <= b.floor_smax + 1);
            assert_eq!(b.is_exact_integer, b.floor_smax == b.ceil_smax);
            assert_eq!(b.is_exact_integer, i == 1, "s_max integral only at i=1");
            // (i+1)^floor ≤ 2·i^floor < is strict one step above
            assert!(up.pow(b.floor_smax) <= (base.pow(b.floor_smax) << 1), "i={i}");
            assert!(
                up.pow(b.floor_smax + 1) > (base.pow(b.floor_smax + 1) << 1),
                "i={i}"
            );
            // (i+1)^ceil2 ≥ 4·i^ceil2, one step below is strict
            assert!(up.pow(b.ceil_2smax) >= (base.pow(b.ceil_2smax) << 2), "i={i}");
            assert!(
                up.pow(b.ceil_2smax - 1) < (base.pow(b.ceil_2smax - 1) << 2),
                "i={i}"
            );
        }
    }

    #[test]
    fn squared_witness_spot_values() {
        let w = build_witness(1, WitnessVariant::Squared);
        assert_eq!(w.n, big(8));
        assert_eq!(w.sqrt_half_n, Some(big(2)));
        assert_eq!(w.divisors.len(), 1);
        assert_eq!(w.divisors[0], WitnessDivisor { s: 1, d: big(4) });
        assert_eq!(w.n_factorization.factors(), [(2, 3)]);

        let w = build_witness(2, WitnessVariant::Squared);
        assert_eq!(w.n, big(2592));
        assert_eq!(w.sqrt_half_n, Some(big(36)));
        assert_eq!(w.divisors, [WitnessDivisor { s: 1, d: big(54) }]);
        assert_eq!(w.n_factorization.factors(), [(2, 5), (3, 4)]);

        let w = build_witness(3, WitnessVariant::Squared);
        assert_eq!(w.n, big(5_971_968));
        assert_eq!(w.n_factorization.factors(), [(2, 13), (3, 6)]);
    }

    #[test]
    fn literal_witness_spot_values() {
        let w = build_witness(3, WitnessVariant::Literal);
        assert_eq!(w.n, big(1_492_992)); // 2·4⁵·3⁶
        assert_eq!(w.n_factorization.factors(), [(2, 11), (3, 6)]);
        assert_eq!(
            w.divisors,
            [
                WitnessDivisor { s: 1, d: big(2304) },
                WitnessDivisor { s: 2, d: big(3072) },
            ]
        );
        // n/2 = 746496 = 864² happens to be square here even though the
        // family misses the interval
        assert_eq!(w.sqrt_half_n, Some(big(864)));

        // literal and squared agree while ⌈2s_max⌉ = 2⌈s_max⌉ (i = 1, 2)
        for i in [1u64, 2] {
            assert_eq!(
                build_witness(i, WitnessVariant::Literal).n,
                build_witness(i, WitnessVariant::Squared).n
            );
        }
    }

    #[test]
    fn squared_witnesses_verify() {
        let r = verify_witness(&build_witness(1, WitnessVariant::Squared));
        assert!(r.overall_pass);
        assert_eq!(r.verified_lower_bound, 1);
        assert!(r.sqrt_half_is_divisor);

        let r = verify_witness(&build_witness(3, WitnessVariant::Squared));
        assert!(r.overall_pass);
        assert_eq!(r.verified_lower_bound, 2);
        assert_eq!(r.certificate.divisors[0].d, big(2304));
        assert_eq!(r.certificate.divisors[1].d, big(3072));
        // √(2n) = 3456 for n = 5 971 968; both divisors stay below it
        assert_eq!(crate::counting::isqrt(&(&r.certificate.n << 1)), big(3456));
    }

    #[test]
    fn literal_witness_for_index_three_fails_the_interval() {
        let report = verify_witness(&build_witness(3, WitnessVariant::Literal));
        assert!(!report.overall_pass);
        let first = &report.per_divisor[0];
        assert_eq!(first.s, 1);
        assert!(first.divides_n);
        assert!(!first.in_interval);
        // d(1) = 2304 > √(2n) = 1728
        assert_eq!(
            crate::counting::isqrt(&(&report.certificate.n << 1)),
            big(1728)
        );
    }

    #[test]
    fn exact_counts_exceed_the_bound() {
        let spot: [(u64, u64); 5] = [(1, 1), (2, 3), (3, 7), (4, 7), (10, 85)];
        for (i, expected) in spot {
            let cert = build_witness(i, WitnessVariant::Squared);
            assert_eq!(exact_witness_count(&cert), expected, "i={i}");
            assert!(expected >= u64::from(cert.brackets.floor_smax));
        }
    }

    #[test]
    fn divisor_family_matches_closed_form() {
        for i in 1..=25u64 {
            let w = build_witness(i, WitnessVariant::Squared);
            let c = w.brackets.ceil_smax;
            for wd in &w.divisors {
                let expected = big(i + 1).pow(c + wd.s) * big(i).pow(c - wd.s);
                assert_eq!(wd.d, expected, "i={i}, s={}", wd.s);
            }
            assert_eq!(w.divisors.len() as u32, w.brackets.floor_smax);
        }
    }

    #[test]
    fn divisibility_agrees_with_exponent_comparison() {
        for i in 1..=40u64 {
            for variant in [WitnessVariant::Squared, WitnessVariant::Literal] {
                let w = build_witness(i, variant);
                let exp_up = match variant {
                    WitnessVariant::Squared => 2 * w.brackets.ceil_smax,
                    WitnessVariant::Literal => w.brackets.ceil_2smax,
                };
                let c = w.brackets.ceil_smax;
                let report = verify_witness(&w);
                for check in &report.per_divisor {
                    // d(s) | n  ⇔  c+s ≤ exp_up (the i-side c−s ≥ 0 holds by
                    // construction since s ≤ ⌊s_max⌋ ≤ c)
                    let by_exponents = c + check.s <= exp_up && check.s <= c;
                    assert_eq!(check.divides_n, by_exponents, "i={i}, s={}", check.s);
                }
            }
        }
    }

    #[test]
    fn verification_never_exceeds_floor() {
        for i in 1..=30u64 {
            for variant in [WitnessVariant::Squared, WitnessVariant::Literal] {
                let r = verify_witness(&build_witness(i, variant));
                assert!(r.verified_lower_bound <= r.certificate.brackets.floor_smax);
            }
        }
    }

    #[test]
    fn tampered_certificate_fails_without_erroring() {
        let mut cert = build_witness(5, WitnessVariant::Squared);
        cert.divisors[0].d += 1u32; // no longer a divisor
        let r = verify_witness(&cert);
        assert!(!r.overall_pass);
        assert!(!r.per_divisor[0].divides_n);
    }

    #[test]
    fn cap_checks() {
        assert!(check_witness_index(1, 10_000).is_ok());
        assert!(matches!(
            check_witness_index(10_001, 10_000),
            Err(Error::WitnessIndexTooLarge { .. })
        ));
        assert!(matches!(
            check_witness_index(0, 10_000),
            Err(Error::ZeroValue { .. })
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let cert = build_witness(2, WitnessVariant::Squared);
        let v: serde_json::Value = serde_json::to_value(&cert).unwrap();
        assert_eq!(v["i"], 2);
        assert_eq!(v["variant"], "squared");
        assert_eq!(v["floor_smax"], 1);
        assert_eq!(v["ceil_smax"], 2);
        assert_eq!(v["ceil_2smax"], 4);
        assert_eq!(v["n"], "2592");
        assert_eq!(v["n_factorization"][0][0], "2");
        assert_eq!(v["n_factorization"][0][1], 5);
        assert_eq!(v["sqrt_half_n"], "36");
        assert_eq!(v["divisors"][0]["s"], 1);
        assert_eq!(v["divisors"][0]["d"], "54");

        let report = verify_witness(&cert);
        let v: serde_json::Value = serde_json::to_value(&report).unwrap();
        assert_eq!(v["certificate"]["n"], "2592");
        assert_eq!(v["per_divisor"][0]["divides_n"], true);
        assert_eq!(v["per_divisor"][0]["in_interval"], true);
        assert_eq!(v["overall_pass"], true);
        assert_eq!(v["verified_lower_bound"], 1);
        assert_eq!(v["sqrt_half_is_divisor"], true);
    }

    #[test]
    fn sqrt_half_detection() {
        // squared variants always carry the anchor
        for i in 1..=20u64 {
            let w = build_witness(i, WitnessVariant::Squared);
            let r = w.sqrt_half_n.expect("squared witness anchor");
            assert_eq!((&r * &r) << 1, w.n);
            assert!((&w.n % &r).is_zero());
        }
        // literal: present exactly when every exponent of n/2 is even
        let w = build_witness(4, WitnessVariant::Literal); // ⌈2s⌉ = 7 on base 5
        assert_eq!(w.sqrt_half_n, None);
    }
}
