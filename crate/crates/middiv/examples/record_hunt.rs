//! Record (champion) search: the least n attaining each new maximum count,
//! found in one linear sieve pass. Pass a limit as the first argument
//! (default 1 000 000).
//!
//! ```bash
//! cargo run --release -p middiv --example record_hunt -- 10000000
//! ```

use std::time::Instant;

use middiv::counting::count_middle_divisors_u64;
use middiv::sieve::{find_records, SieveConfig};

fn main() {
    let limit: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("limit must be a positive integer"))
        .unwrap_or(1_000_000);

    let start = Instant::now();
    let table = find_records(&SieveConfig::new(limit), 1).expect("limit within cap");
    let elapsed = start.elapsed();

    println!("records of the middle-divisor count up to {limit} ({elapsed:?}):\n");
    println!("{:>12} {:>7}", "n", "count");
    for entry in &table.entries {
        // every record re-validates against independent per-n counting
        assert_eq!(
            u64::from(entry.count),
            count_middle_divisors_u64(entry.n).unwrap()
        );
        println!("{:>12} {:>7}", entry.n, entry.count);
    }
    println!("\nall {} records re-validated by trial division", table.entries.len());
}
