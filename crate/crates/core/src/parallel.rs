use rayon::prelude::*;
use rayon::ThreadPoolBuilder;

/// Maps `f` over `tasks` on `workers` threads (0 = one per core), keeping
/// task order in the output. One worker runs inline on the caller's thread.
pub(crate) fn ordered_map<T, R, F>(tasks: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if workers == 1 || tasks.len() < 2 {
        return tasks.iter().map(f).collect();
    }
    match ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| tasks.par_iter().map(&f).collect()),
        Err(_) => tasks.iter().map(f).collect(),
    }
}
