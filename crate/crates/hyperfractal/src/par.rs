//! Thin switch between rayon and plain iterators.
//!
//! With the default `parallel` feature the helpers fan work out over the
//! rayon pool; without it they degrade to sequential loops with identical
//! results. Output order always matches input order, so seeded pipelines
//! stay byte-reproducible regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over a slice, collecting results in input order.
#[cfg(feature = "parallel")]
pub fn map_slice<T: Sync, R: Send, F: Fn(&T) -> R + Sync>(items: &[T], f: F) -> Vec<R> {
    items.par_iter().map(f).collect()
}

/// Maps `f` over a slice, collecting results in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, R, F: Fn(&T) -> R>(items: &[T], f: F) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Maps `f` over `0..count`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indices<R: Send, F: Fn(usize) -> R + Sync + Send>(count: usize, f: F) -> Vec<R> {
    (0..count).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..count`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indices<R, F: Fn(usize) -> R>(count: usize, f: F) -> Vec<R> {
    (0..count).map(f).collect()
}
