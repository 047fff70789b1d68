//! Execution-mode switch for data-parallel loops.
//!
//! Per-scan and per-eye work is embarrassingly parallel and pure, so the
//! only requirement is that results come back in input order. `map_indexed`
//! guarantees that: the parallel arm collects into a pre-sized vector by
//! index, so output bytes match the sequential arm exactly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to run a batch of independent work items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    /// Plain sequential loop.
    Sequential,
    /// Rayon work-stealing pool. Falls back to sequential when the crate is
    /// built without the `parallel` feature.
    #[default]
    Parallel,
}

/// Apply `f` to `0..n`, returning results in index order.
pub fn map_indexed<T, F>(mode: ExecMode, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..n).map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                (0..n).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..n).map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let seq = map_indexed(ExecMode::Sequential, 100, |i| i * i);
        let par = map_indexed(ExecMode::Parallel, 100, |i| i * i);
        assert_eq!(seq, par);
    }

    #[test]
    fn preserves_order() {
        let out = map_indexed(ExecMode::Parallel, 1000, |i| i);
        assert!(out.iter().enumerate().all(|(i, &v)| i == v));
    }
}
