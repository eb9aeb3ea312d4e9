//! OEIS b-file interchange: emit computed terms in b-file format, parse
//! them back, and cross-check against the vendored A067742 fixture.
//!
//! ```bash
//! cargo run -p middiv --example bfile_roundtrip
//! ```

use middiv::oeis::{crosscheck, emit_bfile, parse_bfile};

fn main() {
    // emit the first 20 terms and read them back
    let mut buf = Vec::new();
    emit_bfile(1, 20, &mut buf).unwrap();
    print!("{}", String::from_utf8_lossy(&buf));

    let entries = parse_bfile(buf.as_slice()).unwrap();
    let report = crosscheck(&entries, 20).unwrap();
    println!("\nround trip: compared {} terms, pass = {}", report.compared, report.pass);

    // the vendored fixture carries the first 10^4 terms
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/data/a067742_bfile.txt");
    let text = std::fs::read(fixture).unwrap();
    let entries = parse_bfile(text.as_slice()).unwrap();
    let report = crosscheck(&entries, 10_000).unwrap();
    println!(
        "fixture {}: compared {} terms, {} mismatches, pass = {}",
        fixture,
        report.compared,
        report.mismatches.len(),
        report.pass
    );
}
