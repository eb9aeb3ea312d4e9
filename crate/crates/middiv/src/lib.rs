//! Middle divisors in exact integer arithmetic.
//!
//! A divisor `d` of `n` is a *middle divisor* when `√(n/2) < d ≤ √(2n)`;
//! the number of them is OEIS sequence [A067742]. This crate implements
//! the boundary-exact integer predicate (`2d² > n && d² ≤ 2n` — no radical
//! or float is ever evaluated), several independent counting routes, a
//! linear-time segmented sieve over ranges of `n`, record (champion)
//! search, and the explicit arbitrary-precision witnesses `n(i)` whose
//! middle-divisor count grows without bound, together with machine-checkable
//! verification certificates for them.
//!
//! [A067742]: https://oeis.org/A067742
//!
//! # Modules
//!
//! - [`counting`] — the predicate, trial-division counting/listing, exact
//!   integer square roots, factorizations, and factored enumeration for
//!   numbers far beyond 2^63.
//! - [`sieve`] — bulk counts for all `n ≤ N` in Θ(N), segmented for
//!   bounded memory, with optional parallel segment computation; record
//!   tables and first-occurrence queries.
//! - [`witness`] — exact `⌊s_max⌋`/`⌈s_max⌉` brackets, witness
//!   construction in both exponent variants, verification reports, and
//!   true witness counts.
//! - [`oeis`] — b-file parsing/emission and cross-checks against the
//!   vendored A067742 fixture in `data/`.
//! - [`cli`] — the `middiv` binary: `count`, `list`, `witness`, `sieve`,
//!   `records`, `first`, `crosscheck`, `emit-bfile`.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p middiv --example counting_basics
//! cargo run -p middiv --example witness_tour
//! cargo run -p middiv --example literal_vs_squared
//! cargo run -p middiv --example record_hunt
//! cargo run -p middiv --example bfile_roundtrip
//! cargo run -p middiv --example huge_witness
//! ```
//!
//! Or from code:
//!
//! ```
//! use middiv::counting::{count_middle_divisors_u64, list_middle_divisors_u64};
//! use middiv::witness::{build_witness, verify_witness, WitnessVariant};
//!
//! assert_eq!(count_middle_divisors_u64(6).unwrap(), 2);
//! assert_eq!(list_middle_divisors_u64(2592).unwrap(), vec![48, 54, 72]);
//!
//! let report = verify_witness(&build_witness(10, WitnessVariant::Squared));
//! assert!(report.overall_pass);
//! assert_eq!(report.verified_lower_bound, 7); // ⌊s_max(10)⌋
//! ```

pub mod cli;
pub mod counting;
pub mod error;
pub mod oeis;
pub mod sieve;
pub mod witness;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
