//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper preserves enumeration order in its result, so callers get the
//! same output whichever strategy runs. Without the `parallel` feature the
//! [`Execution::Parallel`] variant silently runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How independent cases are scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Evaluates `f(0..n)` and collects the results in index order.
    pub fn map_range<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Returns the smallest index `i < n` for which `f(i)` is `Some`, together
    /// with that value.
    pub fn find_first<T, F>(self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().find_map_first(|i| f(i).map(|v| (i, v)));
        }
        (0..n).find_map(|i| f(i).map(|v| (i, v)))
    }

    /// Keeps the items of `items` accepted by `pred`, in their original order.
    pub fn filter<T, F>(self, items: Vec<T>, pred: F) -> Vec<T>
    where
        T: Send + Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.into_par_iter().filter(|x| pred(x)).collect();
        }
        items.into_iter().filter(|x| pred(x)).collect()
    }
}
