//! Exact middle-divisor arithmetic.
//!
//! A divisor `d` of `n` is a *middle divisor* when `√(n/2) < d ≤ √(2n)`.
//! No radical is ever evaluated here: the interval test is the integer
//! predicate `2d² > n && d² ≤ 2n`, which makes both boundaries exact —
//! `d² = 2n` is included, `2d² = n` is excluded.
//!
//! Three independent counting routes are provided:
//!
//! 1. [`count_middle_divisors`] — trial division over divisor pairs, for
//!    `n` below the 2^63 budget;
//! 2. [`list_middle_divisors`] — same enumeration, returning the divisors;
//! 3. [`count_middle_divisors_factored`] — depth-first divisor generation
//!    from a prime factorization, for numbers of any size whose factored
//!    form is known.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Trial division is refused at or above this bound (2^63).
pub const TRIAL_DIVISION_BUDGET: u64 = 1 << 63;

/// `⌊√x⌋` for arbitrary-precision `x`.
pub fn isqrt(x: &BigUint) -> BigUint {
    x.sqrt()
}

/// `⌊√x⌋` in machine words. Exact for all `u64` inputs.
pub fn isqrt_u64(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    // float guess, then fix up the off-by-one cases near perfect squares
    let mut r = (x as f64).sqrt() as u64;
    while r > 1 && r.checked_mul(r).map_or(true, |sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |sq| sq <= x) {
        r += 1;
    }
    r
}

/// Smallest `r` with `r² ≥ x`.
pub(crate) fn ceil_sqrt_u64(x: u64) -> u64 {
    let r = isqrt_u64(x);
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Whether `d` is a middle divisor of `n`: `d | n`, `2d² > n`, `d² ≤ 2n`.
///
/// Total for all inputs; zero arguments are outside the domain and yield
/// `false`.
pub fn is_middle_divisor(n: &BigUint, d: &BigUint) -> bool {
    if n.is_zero() || d.is_zero() {
        return false;
    }
    if !(n % d).is_zero() {
        return false;
    }
    let d_sq = d * d;
    let twice_d_sq = &d_sq << 1;
    twice_d_sq > *n && d_sq <= (n << 1)
}

/// [`is_middle_divisor`] for machine-word inputs (exact via 128-bit
/// intermediates).
pub fn is_middle_divisor_u64(n: u64, d: u64) -> bool {
    if n == 0 || d == 0 || n % d != 0 {
        return false;
    }
    let d_sq = (d as u128) * (d as u128);
    2 * d_sq > n as u128 && d_sq <= 2 * (n as u128)
}

fn budget_check(n: &BigUint) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroValue { what: "n" });
    }
    if n.bits() > 63 {
        return Err(Error::InputTooLarge { bits: n.bits() });
    }
    // bits() ≤ 63 ⇒ n < 2^63
    let digits = n.to_u64_digits();
    Ok(digits.first().copied().unwrap_or(0))
}

/// Number of middle divisors of `n` (sequence A067742).
///
/// Enumerates divisor pairs `(e, n/e)` for `e ≤ √n` and tests each side
/// once. Requires `1 ≤ n < 2^63`; larger inputs must use
/// [`count_middle_divisors_factored`].
pub fn count_middle_divisors(n: &BigUint) -> Result<u64> {
    count_middle_divisors_u64(budget_check(n)?)
}

/// [`count_middle_divisors`] on a machine word.
pub fn count_middle_divisors_u64(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroValue { what: "n" });
    }
    if n >= TRIAL_DIVISION_BUDGET {
        return Err(Error::InputTooLarge { bits: 64 });
    }
    let mut count = 0;
    let mut e = 1u64;
    while e * e <= n {
        if n % e == 0 {
            if is_middle_divisor_u64(n, e) {
                count += 1;
            }
            let f = n / e;
            if f != e && is_middle_divisor_u64(n, f) {
                count += 1;
            }
        }
        e += 1;
    }
    Ok(count)
}

/// The middle divisors of `n` in increasing order.
pub fn list_middle_divisors(n: &BigUint) -> Result<Vec<BigUint>> {
    Ok(list_middle_divisors_u64(budget_check(n)?)?
        .into_iter()
        .map(BigUint::from)
        .collect())
}

/// [`list_middle_divisors`] on a machine word.
pub fn list_middle_divisors_u64(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroValue { what: "n" });
    }
    if n >= TRIAL_DIVISION_BUDGET {
        return Err(Error::InputTooLarge { bits: 64 });
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut e = 1u64;
    while e * e <= n {
        if n % e == 0 {
            if is_middle_divisor_u64(n, e) {
                small.push(e);
            }
            let f = n / e;
            if f != e && is_middle_divisor_u64(n, f) {
                large.push(f);
            }
        }
        e += 1;
    }
    // e ≤ √n ≤ n/e, so `small` ascending followed by `large` reversed is sorted
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// A positive integer in factored form: strictly increasing primes with
/// positive exponents. The empty factorization represents 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Factorization { factors: Vec::new() }
    }

    /// Builds a factorization from `(prime, exponent)` pairs, validating
    /// ordering, positivity, and primality of every base.
    pub fn new(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut prev: Option<u64> = None;
        for &(p, e) in &factors {
            if e == 0 {
                return Err(Error::InvalidFactorization {
                    reason: format!("exponent of {p} is zero"),
                });
            }
            if let Some(q) = prev {
                if p <= q {
                    return Err(Error::InvalidFactorization {
                        reason: format!("primes not strictly increasing at {p}"),
                    });
                }
            }
            if !is_prime_u64(p) {
                return Err(Error::InvalidFactorization {
                    reason: format!("{p} is not prime"),
                });
            }
            prev = Some(p);
        }
        Ok(Factorization { factors })
    }

    /// The `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The represented integer, `∏ pᵉ`.
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &(p, e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// This factorization times `other^k`, merged exactly on exponents.
    pub fn mul_pow(mut self, other: &Factorization, k: u32) -> Factorization {
        if k == 0 {
            return self;
        }
        let mut merged: Vec<(u64, u32)> = Vec::with_capacity(self.factors.len() + other.factors.len());
        let mut a = self.factors.drain(..).peekable();
        let mut b = other.factors.iter().copied().peekable();
        loop {
            match (a.peek().copied(), b.peek().copied()) {
                (Some((pa, ea)), Some((pb, eb))) => {
                    if pa < pb {
                        merged.push((pa, ea));
                        a.next();
                    } else if pb < pa {
                        merged.push((pb, eb * k));
                        b.next();
                    } else {
                        merged.push((pa, ea + eb * k));
                        a.next();
                        b.next();
                    }
                }
                (Some(pair), None) => {
                    merged.push(pair);
                    a.next();
                }
                (None, Some((pb, eb))) => {
                    merged.push((pb, eb * k));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Factorization { factors: merged }
    }
}

/// Deterministic Miller–Rabin, exact for all `u64`.
fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let trailing = (n - 1).trailing_zeros();
    let odd_part = (n - 1) >> trailing;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod_u64(a, odd_part, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..trailing {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Canonical factorization of `m` by deterministic trial division.
///
/// Requires `1 ≤ m < 2^63`. The witness bases this feeds on are tiny, so
/// no general-purpose factoring is attempted.
pub fn factorize(m: &BigUint) -> Result<Factorization> {
    factorize_u64(budget_check(m)?)
}

/// [`factorize`] on a machine word.
pub fn factorize_u64(m: u64) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::ZeroValue { what: "m" });
    }
    if m >= TRIAL_DIVISION_BUDGET {
        return Err(Error::InputTooLarge { bits: 64 });
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0u32;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut p = 3u64;
    while p * p <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Number of middle divisors of the integer represented by `f`, for inputs
/// of any size.
///
/// Divisors are generated depth-first over the prime powers, primes in
/// decreasing order so a partial product only grows; any partial product
/// exceeding `⌊√(2n)⌋` is pruned, as is any partial product that cannot
/// reach `⌊√(n/2)⌋ + 1` even when multiplied by every remaining prime
/// power. For the final (smallest) prime the qualifying exponent range is
/// counted directly against a precomputed power table. Agrees with
/// [`count_middle_divisors`] wherever both are defined.
pub fn count_middle_divisors_factored(f: &Factorization) -> u64 {
    let n = f.value();
    // d qualifies  ⇔  low ≤ d ≤ high, with
    //   high = ⌊√(2n)⌋          (largest d with d² ≤ 2n)
    //   low  = ⌊√(⌊n/2⌋)⌋ + 1   (smallest d with 2d² > n)
    let high = isqrt(&(&n << 1));
    let low = isqrt(&(&n >> 1)) + 1u32;

    if f.factors.is_empty() {
        // n = 1: its only divisor is 1
        return u64::from(low.is_one());
    }

    // Decreasing prime order; the smallest prime is split off for direct
    // range counting.
    let descending: Vec<(u64, u32)> = f.factors.iter().rev().copied().collect();
    let (stems, last) = descending.split_at(descending.len() - 1);
    let (last_prime, last_exp) = last[0];

    let mut last_powers = Vec::with_capacity(last_exp as usize + 1);
    let mut pw = BigUint::one();
    for _ in 0..=last_exp {
        last_powers.push(pw.clone());
        pw *= last_prime;
    }

    // thresh[k]: smallest partial product at depth k that can still reach
    // `low` using every remaining prime power (suffix max product).
    let mut suffix = last_powers.last().expect("nonempty").clone();
    let mut thresh = vec![BigUint::zero(); stems.len() + 1];
    thresh[stems.len()] = ceil_div(&low, &suffix);
    for k in (0..stems.len()).rev() {
        let (p, e) = stems[k];
        suffix *= BigUint::from(p).pow(e);
        thresh[k] = ceil_div(&low, &suffix);
    }

    let mut walk = Walk {
        stems,
        thresh: &thresh,
        low: &low,
        high: &high,
        last_powers: &last_powers,
        count: 0,
    };
    if BigUint::one() >= thresh[0] {
        walk.visit(0, BigUint::one());
    }
    walk.count
}

struct Walk<'a> {
    stems: &'a [(u64, u32)],
    thresh: &'a [BigUint],
    low: &'a BigUint,
    high: &'a BigUint,
    last_powers: &'a [BigUint],
    count: u64,
}

impl Walk<'_> {
    // pre: cur ≤ high and cur·(max remaining product) ≥ low
    fn visit(&mut self, depth: usize, cur: BigUint) {
        if depth == self.stems.len() {
            // count exponents j of the last prime with low ≤ cur·pʲ ≤ high
            let min_pow = ceil_div(self.low, &cur);
            let max_pow = self.high / &cur;
            let from = self.last_powers.partition_point(|x| *x < min_pow);
            let to = self.last_powers.partition_point(|x| *x <= max_pow);
            self.count += to.saturating_sub(from) as u64;
            return;
        }
        let (p, e) = self.stems[depth];
        let mut v = cur;
        for step in 0..=e {
            if v > *self.high {
                break;
            }
            if v >= self.thresh[depth + 1] {
                self.visit(depth + 1, v.clone());
            }
            if step < e {
                v *= p;
            }
        }
    }
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    (a + b - 1u32) / b
}
