//! Execution strategy for the data-parallel loops (minor scans and corpus
//! sweeps).
//!
//! Every helper returns results in input order, and searches return the
//! first match in index order, so output never depends on the strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Rayon work stealing. Without the `parallel` feature this runs
    /// sequentially.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

/// Smallest index in `0..len` satisfying `pred`, mapped through it.
pub fn find_first<T, F>(strategy: Strategy, len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => (0..len).into_par_iter().find_map_first(f),
        _ => (0..len).find_map(f),
    }
}

/// Maps `f` over `items` and collects in input order.
pub fn map_collect<I, T, F>(strategy: Strategy, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_match_is_strategy_independent() {
        let pick = |i: usize| (i % 7 == 3 && i > 100).then_some(i * 2);
        let seq = find_first(Strategy::Sequential, 10_000, pick);
        let par = find_first(Strategy::Parallel, 10_000, pick);
        assert_eq!(seq, Some(2 * 101));
        assert_eq!(seq, par);
        assert_eq!(find_first(Strategy::Parallel, 0, pick), None);
    }

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let sq = map_collect(Strategy::Parallel, &xs, |x| x * x);
        assert_eq!(sq, xs.iter().map(|x| x * x).collect::<Vec<_>>());
    }
}
