//! OEIS b-file ingestion and cross-checking.
//!
//! A b-file is plain text with one `index value` pair per line; `#` starts
//! a comment line and blank lines are ignored. The crate vendors a fixture
//! prefix of A067742 under `data/` so cross-checks run hermetically.

use std::io::{BufRead, Write};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::sieve::{stream_counts_in_range, DEFAULT_SEGMENT_SIZE};

/// One data line of a b-file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: u64,
    pub value: u64,
}

/// A disagreement between the file and the computed sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Mismatch {
    pub index: u64,
    pub expected: u64,
    pub computed: u64,
}

/// Result of comparing b-file entries against computed counts.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CrosscheckReport {
    pub compared: u64,
    pub mismatches: Vec<Mismatch>,
    pub pass: bool,
}

/// Parses b-file text: `#` comments and blank lines are skipped, every
/// other line must be exactly two integer tokens, and indices must be
/// strictly increasing (they need not start at 1). LF and CRLF are
/// accepted alike.
pub fn parse_bfile(reader: impl BufRead) -> Result<Vec<BFileEntry>> {
    let mut entries = Vec::new();
    let mut prev: Option<u64> = None;
    for (line_no, line) in reader.lines().enumerate() {
        let line_no = line_no + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: line_no,
            content: line.clone(),
        };
        let mut tokens = trimmed.split_whitespace();
        let index: u64 = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(malformed)?;
        let value: u64 = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(malformed)?;
        if tokens.next().is_some() || index == 0 {
            return Err(malformed());
        }
        if let Some(p) = prev {
            if index <= p {
                return Err(Error::NonMonotoneIndex {
                    line: line_no,
                    prev: p,
                    found: index,
                });
            }
        }
        prev = Some(index);
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

/// Compares file entries against sieved counts for every file index up to
/// `min(limit, max index)`. All mismatches are collected; nothing aborts.
pub fn crosscheck(entries: &[BFileEntry], limit: u64) -> Result<CrosscheckReport> {
    if limit == 0 {
        return Err(Error::ZeroValue { what: "limit" });
    }
    let mut report = CrosscheckReport {
        compared: 0,
        mismatches: Vec::new(),
        pass: true,
    };
    let Some(last) = entries.last() else {
        return Ok(report);
    };
    let bound = limit.min(last.index);
    let mut pending = entries.iter().take_while(|e| e.index <= bound).peekable();
    stream_counts_in_range(1, bound, DEFAULT_SEGMENT_SIZE, 1, |n, count| {
        while let Some(entry) = pending.peek() {
            if entry.index != n {
                break;
            }
            report.compared += 1;
            if entry.value != u64::from(count) {
                report.mismatches.push(Mismatch {
                    index: n,
                    expected: entry.value,
                    computed: u64::from(count),
                });
            }
            pending.next();
        }
        ControlFlow::Continue(())
    })?;
    report.pass = report.mismatches.is_empty();
    Ok(report)
}

/// Writes b-file lines `n a(n)` for `n = start..=end`, one space, one line
/// per term. Output round-trips through [`parse_bfile`].
pub fn emit_bfile(start: u64, end: u64, mut out: impl Write) -> Result<()> {
    if start == 0 {
        return Err(Error::ZeroValue { what: "start" });
    }
    if start > end {
        return Ok(());
    }
    let mut io_err: Option<std::io::Error> = None;
    stream_counts_in_range(start, end, DEFAULT_SEGMENT_SIZE, 1, |n, count| {
        match writeln!(out, "{n} {count}") {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => {
                io_err = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    match io_err {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}
