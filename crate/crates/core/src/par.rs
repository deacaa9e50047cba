//! Order-preserving map over independent work items, on the rayon pool when
//! the `parallel` feature is enabled and requested, sequentially otherwise.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel && items.len() > 1 {
        return items.par_iter().map(f).collect();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = parallel;
    items.iter().map(f).collect()
}

/// First `Some` in index order; all items may be evaluated in parallel but the
/// answer never depends on scheduling.
pub(crate) fn find_map_first<T, R, F>(items: &[T], parallel: bool, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel && items.len() > 1 {
        return items.par_iter().find_map_first(f);
    }
    #[cfg(not(feature = "parallel"))]
    let _ = parallel;
    items.iter().find_map(f)
}
