//! Execution policy for the data-parallel loops.
//!
//! Every parallel path in the crate collects results in index order and
//! reduces floating-point sums with a fixed block tree, so the output does
//! not depend on the thread count or on whether rayon is compiled in.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Block length of the fixed-shape reduction tree.
pub const REDUCTION_BLOCK: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `range`, returning results in index order.
pub fn map_range<T, F>(exec: Execution, range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

/// Maps `f` over a slice, returning results in element order.
pub fn map_slice<S, T, F>(exec: Execution, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Sums `f(item)` over `items` with a reduction order fixed by the data
/// length alone: sequential sums inside blocks of [`REDUCTION_BLOCK`] items,
/// then a pairwise tree over block sums.
pub fn deterministic_sum<S, F>(exec: Execution, items: &[S], f: F) -> f64
where
    S: Sync,
    F: Fn(&S) -> f64 + Sync + Send,
{
    let blocks: Vec<&[S]> = items.chunks(REDUCTION_BLOCK).collect();
    let partials = map_slice(exec, &blocks, |block| block.iter().map(&f).sum::<f64>());
    pairwise_sum(&partials)
}

/// Pairwise (cascade) summation; deterministic for a given slice.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n if n <= 8 => values.iter().sum(),
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}
