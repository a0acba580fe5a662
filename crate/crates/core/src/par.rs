//! Data-parallel sweeps over index ranges, with a sequential fallback.
//!
//! With the `parallel` feature (default) sweeps run on the rayon pool when
//! asked to; without it every sweep is a plain loop.

use crate::Result;

/// Counts the indices in `0..count` for which `f` returns `true`.
///
/// Stops at the first error; with a parallel sweep, which error is reported
/// among several is unspecified.
pub fn count_where<F>(count: u64, parallel: bool, f: F) -> Result<u64>
where
    F: Fn(u64) -> Result<bool> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..count)
            .into_par_iter()
            .map(|i| f(i).map(u64::from))
            .try_reduce(|| 0, |a, b| Ok(a + b));
    }
    let _ = parallel;
    let mut hits = 0;
    for i in 0..count {
        hits += u64::from(f(i)?);
    }
    Ok(hits)
}

/// Maps `f` over `0..count`, keeping index order in the output.
pub fn map_indices<T, F>(count: u64, parallel: bool, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..count).map(f).collect()
}

/// Whether sweeps can run in parallel in this build.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Runs `f` with sweeps limited to `jobs` worker threads (`None`: the default pool).
pub fn run_with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool");
        return pool.install(f);
    }
    let _ = jobs;
    f()
}
