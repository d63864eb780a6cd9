//! Data-parallel execution helpers.
//!
//! With the `parallel` feature (default) these fan out over a rayon pool;
//! without it they run sequentially with the same signatures. Results are
//! always collected in index order, so outputs do not depend on scheduling.

/// True when the crate was built with the rayon-backed `parallel` feature.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Maps `f` over `0..n` and collects the results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n` and collects the results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Sequential version of [`map_indexed`], always available.
///
/// Benchmarks use it as the baseline when comparing the parallel and
/// sequential paths within a single build.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_index_order() {
        let out = map_indexed(100, |i| i * i);
        let seq = map_indexed_seq(100, |i| i * i);
        assert_eq!(out, seq);
    }
}
