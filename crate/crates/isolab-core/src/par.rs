//! A thin facade over the data-parallel inner loops.  With the `parallel`
//! feature (default) the maps run on rayon's current thread pool; without it
//! they run sequentially.  Both paths preserve input order, so results are
//! identical regardless of the feature or the pool size.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, keeping only `Some` results, in input order.
pub fn map_filter<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> Option<U> + Sync + Send,
) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().filter_map(f).collect()
    }
}

/// Map `f` over `items` in input order.
pub fn map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Cap the global thread pool.  Call once at process start; later calls are
/// ignored (rayon's global pool can only be configured once).  A no-op
/// without the `parallel` feature.
pub fn configure_threads(threads: Option<usize>) {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_filter_preserves_order() {
        let items: Vec<u32> = (0..1000).collect();
        let got = map_filter(&items, |&x| if x % 3 == 0 { Some(x * 2) } else { None });
        let want: Vec<u32> = (0..1000).filter(|x| x % 3 == 0).map(|x| x * 2).collect();
        assert_eq!(got, want);
    }
}
