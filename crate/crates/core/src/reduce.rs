//! Deterministic parallel reductions.
//!
//! Partial results are combined along a fixed binary tree determined only by
//! the index range, so floating-point output is identical for any thread
//! count (the sequential path walks the same tree).

use num_complex::Complex64;

/// Ranges at least this long are split across rayon.
const PAR_THRESHOLD: u64 = 1 << 14;

/// Sums `leaf(i)` for `i` in `[lo, hi)` over a fixed halving tree.
pub fn tree_sum_complex<F>(lo: u64, hi: u64, leaf: &F) -> Complex64
where
    F: Fn(u64) -> Complex64 + Sync,
{
    let len = hi - lo;
    if len <= PAR_THRESHOLD {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in lo..hi {
            acc += leaf(i);
        }
        return acc;
    }
    let mid = lo + len / 2;
    let (a, b) = rayon::join(|| tree_sum_complex(lo, mid, leaf), || tree_sum_complex(mid, hi, leaf));
    a + b
}

/// Sums integer counts; associative, so any tree shape is exact.
pub fn tree_sum_u64<F>(lo: u64, hi: u64, leaf: &F) -> u64
where
    F: Fn(u64) -> u64 + Sync,
{
    let len = hi - lo;
    if len <= PAR_THRESHOLD {
        return (lo..hi).map(leaf).sum();
    }
    let mid = lo + len / 2;
    let (a, b) = rayon::join(|| tree_sum_u64(lo, mid, leaf), || tree_sum_u64(mid, hi, leaf));
    a + b
}
