//! Map-reduce helpers with a rayon backend and a sequential fallback.
//!
//! Every reduction in this crate is an exact, associative and commutative
//! operation (big-integer addition, count vectors, minima), so results do not
//! depend on the schedule.

use std::ops::Range;

#[cfg(feature = "rayon")]
use rayon::prelude::*;

/// How the data-parallel inner loops run.
///
/// Without the `rayon` feature, `Parallel` silently behaves like `Sequential`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "rayon") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// True if this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "rayon")
    }

    pub(crate) fn map_reduce<T, R, M, Z, F>(self, items: &[T], identity: Z, map: M, reduce: F) -> R
    where
        T: Sync,
        R: Send,
        M: Fn(&T) -> R + Sync + Send,
        Z: Fn() -> R + Sync + Send,
        F: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "rayon")]
            Execution::Parallel => items.par_iter().map(map).reduce(identity, reduce),
            _ => items.iter().map(map).fold(identity(), reduce),
        }
    }

    #[cfg_attr(not(feature = "rayon"), allow(unused_variables))]
    pub(crate) fn fold_range<R, Z, G, F>(self, range: Range<u64>, identity: Z, fold: G, reduce: F) -> R
    where
        R: Send,
        Z: Fn() -> R + Sync + Send,
        G: Fn(R, u64) -> R + Sync + Send,
        F: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "rayon")]
            Execution::Parallel => range.into_par_iter().fold(&identity, &fold).reduce(&identity, &reduce),
            _ => range.fold(identity(), fold),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u64> = (1..=1000).collect();
        let seq = Execution::Sequential.map_reduce(&xs, || 0u64, |x| x * x, |a, b| a + b);
        let par = Execution::Parallel.map_reduce(&xs, || 0u64, |x| x * x, |a, b| a + b);
        assert_eq!(seq, par);

        let seq = Execution::Sequential.fold_range(0..5000, || 0u64, |a, x| a + x, |a, b| a + b);
        let par = Execution::Parallel.fold_range(0..5000, || 0u64, |a, x| a + x, |a, b| a + b);
        assert_eq!(seq, 5000 * 4999 / 2);
        assert_eq!(seq, par);
    }
}
