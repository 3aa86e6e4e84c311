//! Job dispatch: data-parallel map over a slice when the `parallel` feature
//! is enabled, sequential otherwise. Output order always matches input
//! order, so results are identical for every worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item. `jobs == 1` forces the sequential path;
/// `jobs == 0` uses one worker per core; any other value sizes the pool
/// explicitly. Without the `parallel` feature every call is sequential.
pub(crate) fn run_jobs<I, T, F>(items: &[I], jobs: usize, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    if jobs != 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build();
        if let Ok(pool) = pool {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
    }
    let _ = jobs;
    items.iter().map(f).collect()
}
