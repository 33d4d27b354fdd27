//! Deterministic batch scheduling for the Monte Carlo drivers.
//!
//! Work over `n` items is cut into fixed-size batches; each batch is
//! processed independently (items derive their own RNG stream from the
//! item index) and batch results are collected in batch order. The
//! partitioning is a pure function of `n`, so the output is identical
//! whether batches run on a worker pool (`parallel` feature, default)
//! or one after another (`--no-default-features`).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Items per batch. Fixed: changing this would reshuffle reduction
/// order and break byte-reproducibility across versions, not threads.
pub const BATCH_SIZE: usize = 1024;

/// Splits `0..n` into [`BATCH_SIZE`] chunks and maps each through `f`,
/// returning batch results in order. Scheduled on the rayon pool when
/// the `parallel` feature is on.
pub fn batched_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(std::ops::Range<usize>) -> T + Sync + Send,
{
    let ranges = batch_ranges(n);
    #[cfg(feature = "parallel")]
    {
        ranges.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ranges.into_iter().map(f).collect()
    }
}

/// Sequential twin of [`batched_map`] with the identical partitioning;
/// kept unconditionally so benchmarks can compare the two schedules.
pub fn batched_map_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(std::ops::Range<usize>) -> T,
{
    batch_ranges(n).into_iter().map(f).collect()
}

fn batch_ranges(n: usize) -> Vec<std::ops::Range<usize>> {
    (0..n.div_ceil(BATCH_SIZE))
        .map(|b| {
            let lo = b * BATCH_SIZE;
            lo..((lo + BATCH_SIZE).min(n))
        })
        .collect()
}
