//! Execution strategy for the data-parallel kernels.
//!
//! The hot loops (the per-`x` scan in point counting, the `j` scan behind the
//! supersingular polynomial, the per-prime checks of the certifier) are written
//! once against the helpers below. With the `parallel` feature (on by default)
//! they fan out over rayon; without it, or when [`Execution::Sequential`] is
//! requested explicitly, they run on the calling thread. Results are always
//! collected in input order, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Order-preserving map over `0..n`.
    pub fn map_range<R, F>(self, n: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        }
    }

    /// Sum of `f(i)` over `0..n`.
    pub fn sum_range<F>(self, n: u64, f: F) -> i64
    where
        F: Fn(u64) -> i64 + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..n).map(f).sum(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n).into_par_iter().map(f).sum(),
        }
    }

    /// Indices in `0..n` accepted by `pred`, in increasing order.
    pub fn filter_range<F>(self, n: u64, pred: F) -> Vec<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..n).filter(|&i| pred(i)).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n).into_par_iter().filter(|&i| pred(i)).collect(),
        }
    }
}
