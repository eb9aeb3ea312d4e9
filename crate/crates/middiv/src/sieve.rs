//! Bulk middle-divisor counting in O(N).
//!
//! Fix a divisor `d`. Among the multiples of `d`, exactly those `n` with
//! `⌈d²/2⌉ ≤ n ≤ 2d²−1` have `d` as a middle divisor (that window is the
//! integer form of `2d² > n ∧ d² ≤ 2n`). Sweeping `d = 1..⌊√(2N)⌋` and
//! incrementing a counter at every multiple of `d` inside the window costs
//! about `1.5·d/d · d = 1.5·d` touches per divisor, so the whole run is
//! Θ(N).
//!
//! Evaluation is segmented: each block of `segment_size` values of `n` is
//! counted independently (recomputing the contributing `d` range), so
//! memory stays bounded at any limit and distinct segments can be computed
//! on worker threads. Output order is always increasing `n`, and results
//! are bit-identical no matter how many threads run.

use std::io::Write;
use std::ops::ControlFlow;

use crate::counting::{ceil_sqrt_u64, isqrt_u64};
use crate::error::{Error, Result};

/// Hard cap on sieve limits; keeps every intermediate in a 64-bit word.
pub const SIEVE_LIMIT_CAP: u64 = 1 << 40;

/// Default segment length (entries, 4 bytes each — 16 MiB per segment).
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 22;

/// Sieve parameters.
#[derive(Clone, Copy, Debug)]
pub struct SieveConfig {
    pub limit: u64,
    pub segment_size: u64,
}

impl SieveConfig {
    pub fn new(limit: u64) -> Self {
        SieveConfig {
            limit,
            segment_size: DEFAULT_SEGMENT_SIZE,
        }
    }

    pub fn with_segment_size(limit: u64, segment_size: u64) -> Self {
        SieveConfig {
            limit,
            segment_size,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.limit == 0 {
            return Err(Error::ZeroValue { what: "limit" });
        }
        if self.segment_size == 0 {
            return Err(Error::ZeroValue { what: "segment_size" });
        }
        if self.limit > SIEVE_LIMIT_CAP {
            return Err(Error::LimitExceedsCap { limit: self.limit });
        }
        Ok(())
    }
}

/// One record (champion): the least `n` attaining a new maximum count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecordEntry {
    pub n: u64,
    pub count: u32,
}

/// Increasing sequence of records; strictly increasing in both `n` and
/// `count` by construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecordTable {
    pub entries: Vec<RecordEntry>,
}

/// Counts for one segment `[lo, hi]`, indexed by `n - lo`.
fn compute_segment(lo: u64, hi: u64) -> Vec<u32> {
    debug_assert!(1 <= lo && lo <= hi && hi <= SIEVE_LIMIT_CAP);
    let mut counts = vec![0u32; (hi - lo + 1) as usize];
    // d contributes only if its window [⌈d²/2⌉, 2d²−1] meets the segment:
    // smallest d with 2d²−1 ≥ lo, largest d with ⌈d²/2⌉ ≤ hi
    let d_first = ceil_sqrt_u64((lo + 1).div_ceil(2));
    let d_last = isqrt_u64(2 * hi);
    for d in d_first..=d_last {
        let from = ((d * d + 1) / 2).max(lo);
        let to = (2 * d * d - 1).min(hi);
        if from > to {
            continue;
        }
        let mut m = from.next_multiple_of(d);
        while m <= to {
            counts[(m - lo) as usize] += 1;
            m += d;
        }
    }
    counts
}

/// Streams segments covering `[start, end]` in increasing order to `visit`,
/// computing up to `threads` segments concurrently. `visit` receives the
/// first `n` of the segment and the counts for the segment; returning
/// `ControlFlow::Break` stops the sweep.
fn stream_segments(
    start: u64,
    end: u64,
    segment_size: u64,
    threads: usize,
    mut visit: impl FnMut(u64, &[u32]) -> ControlFlow<()>,
) -> Result<()> {
    debug_assert!(start >= 1 && start <= end);
    let threads = threads.max(1);
    let mut next = start;
    while next <= end {
        let mut batch: Vec<(u64, u64)> = Vec::with_capacity(threads);
        for _ in 0..threads {
            if next > end {
                break;
            }
            let hi = next.saturating_add(segment_size - 1).min(end);
            batch.push((next, hi));
            next = hi + 1;
        }
        let results: Vec<Vec<u32>> = if batch.len() == 1 {
            vec![compute_segment(batch[0].0, batch[0].1)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = batch
                    .iter()
                    .map(|&(lo, hi)| scope.spawn(move || compute_segment(lo, hi)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("sieve segment worker panicked"))
                    .collect()
            })
        };
        for (&(lo, _), counts) in batch.iter().zip(&results) {
            if let ControlFlow::Break(()) = visit(lo, counts) {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Calls `visit` once per segment of `[1, limit]` in increasing order.
pub fn for_each_segment(
    cfg: &SieveConfig,
    threads: usize,
    visit: impl FnMut(u64, &[u32]) -> ControlFlow<()>,
) -> Result<()> {
    cfg.validate()?;
    stream_segments(1, cfg.limit, cfg.segment_size, threads, visit)
}

/// Streams `(n, count)` pairs for `n = start..=end` in increasing order.
/// Requires `1 ≤ start ≤ end ≤ 2^40`.
pub fn stream_counts_in_range(
    start: u64,
    end: u64,
    segment_size: u64,
    threads: usize,
    mut emit: impl FnMut(u64, u32) -> ControlFlow<()>,
) -> Result<()> {
    if start == 0 {
        return Err(Error::ZeroValue { what: "start" });
    }
    if segment_size == 0 {
        return Err(Error::ZeroValue { what: "segment_size" });
    }
    if end > SIEVE_LIMIT_CAP {
        return Err(Error::LimitExceedsCap { limit: end });
    }
    if start > end {
        return Ok(());
    }
    stream_segments(start, end, segment_size, threads, |lo, counts| {
        for (k, &c) in counts.iter().enumerate() {
            if let ControlFlow::Break(()) = emit(lo + k as u64, c) {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })
}

/// Streams `(n, count)` for `n = 1..=limit`.
pub fn stream_counts(
    cfg: &SieveConfig,
    threads: usize,
    emit: impl FnMut(u64, u32) -> ControlFlow<()>,
) -> Result<()> {
    cfg.validate()?;
    stream_counts_in_range(1, cfg.limit, cfg.segment_size, threads, emit)
}

/// All counts for `n = 1..=limit`, materialized (index `n-1`). Convenient
/// for moderate limits; allocates `4·limit` bytes.
pub fn sieve_counts(cfg: &SieveConfig) -> Result<Vec<u32>> {
    cfg.validate()?;
    let mut all = Vec::with_capacity(cfg.limit as usize);
    for_each_segment(cfg, 1, |_, counts| {
        all.extend_from_slice(counts);
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

/// The record table for `n ≤ limit` in one sieve pass.
pub fn find_records(cfg: &SieveConfig, threads: usize) -> Result<RecordTable> {
    let mut table = RecordTable::default();
    let mut best = 0u32;
    stream_counts(cfg, threads, |n, count| {
        if count > best {
            best = count;
            table.entries.push(RecordEntry { n, count });
        }
        ControlFlow::Continue(())
    })?;
    Ok(table)
}

/// Least `n ≤ limit` with at least `k` middle divisors, if any.
pub fn first_with_count_at_least(k: u64, cfg: &SieveConfig, threads: usize) -> Result<Option<u64>> {
    if k == 0 {
        return Err(Error::ZeroValue { what: "k" });
    }
    let mut hit = None;
    stream_counts(cfg, threads, |n, count| {
        if u64::from(count) >= k {
            hit = Some(n);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(hit)
}

/// Writes the count stream as CSV (`n,count` header, one row per `n`;
/// `nonzero` drops the zero-count rows).
pub fn write_counts_csv(
    cfg: &SieveConfig,
    threads: usize,
    nonzero: bool,
    mut out: impl Write,
) -> Result<()> {
    writeln!(out, "n,count")?;
    let mut io_err: Option<std::io::Error> = None;
    stream_counts(cfg, threads, |n, count| {
        if nonzero && count == 0 {
            return ControlFlow::Continue(());
        }
        match writeln!(out, "{n},{count}") {
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

/// Writes the record table as CSV (`n,count` header).
pub fn write_records_csv(table: &RecordTable, mut out: impl Write) -> Result<()> {
    writeln!(out, "n,count")?;
    for entry in &table.entries {
        writeln!(out, "{},{}", entry.n, entry.count)?;
    }
    Ok(())
}
