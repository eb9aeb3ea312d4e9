//! Witness verification stays exact far beyond machine words. Builds and
//! verifies n(500), an integer of a few thousand digits, without ever
//! factoring it — the certificate carries the factorization symbolically.
//!
//! ```bash
//! cargo run -p middiv --example huge_witness
//! ```

use std::time::Instant;

use middiv::witness::{build_witness, smax_brackets, verify_witness, WitnessVariant};

fn main() {
    let i = 500u64;
    let start = Instant::now();
    let brackets = smax_brackets(i);
    let cert = build_witness(i, WitnessVariant::Squared);
    let built = start.elapsed();

    let n_digits = cert.n.to_string().len();
    println!("i = {i}");
    println!("⌊s_max⌋ = {}, ⌈s_max⌉ = {}, ⌈2s_max⌉ = {}", brackets.floor_smax, brackets.ceil_smax, brackets.ceil_2smax);
    println!("n(i) has {n_digits} digits; factorization:");
    for &(p, e) in cert.n_factorization.factors() {
        println!("    {p}^{e}");
    }
    println!("claimed middle divisors: {} (s = 1..⌊s_max⌋)", cert.divisors.len());

    let start = Instant::now();
    let report = verify_witness(&cert);
    let verified = start.elapsed();

    assert!(report.overall_pass);
    println!("\nverification: overall_pass = {}", report.overall_pass);
    println!("verified lower bound a(n(i)) ≥ {}", report.verified_lower_bound);
    println!("√(n/2) divides n: {}", report.sqrt_half_is_divisor);
    println!("built in {built:?}, verified in {verified:?}");
}
