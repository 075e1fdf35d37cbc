//! Batch execution: independent jobs (trials, minors, per-index checks) run
//! through [`Execution::map`], which keeps output in input order.
//!
//! With the `parallel` feature the jobs go to the rayon pool; without it, or
//! with [`Execution::Sequential`], they run in a plain loop.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `true` when jobs actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    pub fn map<I, T, R, F>(self, items: I, f: F) -> Vec<R>
    where
        I: IntoIterator<Item = T>,
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            let items: Vec<T> = items.into_iter().collect();
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Like [`Execution::map`], stopping at the first error in input order.
    pub fn try_map<I, T, R, E, F>(self, items: I, f: F) -> Result<Vec<R>, E>
    where
        I: IntoIterator<Item = T>,
        T: Send,
        R: Send,
        E: Send,
        F: Fn(T) -> Result<R, E> + Sync + Send,
    {
        self.map(items, f).into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let seq = Execution::Sequential.map(0..1000u64, |i| i * i);
        let par = Execution::Parallel.map(0..1000u64, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }

    #[test]
    fn first_error_wins() {
        let r: Result<Vec<u32>, u32> =
            Execution::Parallel.try_map(0..100u32, |i| if i % 7 == 6 { Err(i) } else { Ok(i) });
        assert_eq!(r, Err(6));
    }
}
