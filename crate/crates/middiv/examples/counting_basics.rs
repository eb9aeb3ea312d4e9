//! The middle-divisor predicate and the three counting routes.
//!
//! ```bash
//! cargo run -p middiv --example counting_basics
//! ```

use middiv::counting::{
    count_middle_divisors_factored, count_middle_divisors_u64, factorize_u64,
    is_middle_divisor_u64, list_middle_divisors_u64,
};

fn main() {
    println!("A divisor d of n is a middle divisor when √(n/2) < d ≤ √(2n),");
    println!("tested exactly as integers: 2d² > n and d² ≤ 2n.\n");

    // boundary behaviour at n = 8: divisors 1, 2, 4, 8
    for d in [1u64, 2, 4, 8] {
        println!(
            "  n=8, d={d}: {}",
            if is_middle_divisor_u64(8, d) { "middle divisor" } else { "not middle" }
        );
    }
    println!("  (d=2 sits exactly on the excluded lower boundary 2d² = n,");
    println!("   d=4 exactly on the included upper boundary d² = 2n)\n");

    for n in [1u64, 6, 360, 2592, 720_720] {
        let count = count_middle_divisors_u64(n).unwrap();
        let list = list_middle_divisors_u64(n).unwrap();
        let factored = count_middle_divisors_factored(&factorize_u64(n).unwrap());
        assert_eq!(count, list.len() as u64);
        assert_eq!(count, factored);
        println!("  a({n}) = {count}  middle divisors {list:?}");
    }

    println!("\nTrial division, listing, and factored enumeration all agree.");
}
