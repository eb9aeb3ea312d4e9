//! The two witness exponent variants disagree first at i = 3, where
//! ⌈2·s_max⌉ = 5 is odd but the divisor family needs the exponent 2·⌈s_max⌉ = 6.
//! The literal form's d(1) then overshoots √(2n). Verification reports the
//! failure instead of erroring, and the CLI turns it into exit code 3.
//!
//! ```bash
//! cargo run -p middiv --example literal_vs_squared
//! ```

use middiv::counting::isqrt;
use middiv::witness::{build_witness, verify_witness, WitnessVariant};

fn main() {
    for variant in [WitnessVariant::Squared, WitnessVariant::Literal] {
        let cert = build_witness(3, variant);
        let report = verify_witness(&cert);
        println!(
            "variant {:<8} n = {:>8}   √(2n) = {:>4}   overall_pass = {}",
            cert.variant.as_str(),
            cert.n,
            isqrt(&(&cert.n << 1)),
            report.overall_pass,
        );
        for (check, wd) in report.per_divisor.iter().zip(&cert.divisors) {
            println!(
                "    d({}) = {:>6}  divides n: {:<5}  in interval: {}",
                check.s, wd.d, check.divides_n, check.in_interval
            );
        }
        println!();
    }

    println!("full report for the failing literal variant:\n");
    let report = verify_witness(&build_witness(3, WitnessVariant::Literal));
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
