//! Sequential or rayon-backed ordered map.
//!
//! Results always come back in input order, so anything reduced from them is
//! independent of the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How independent jobs are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon pool with `workers` threads; `0` uses rayon's default.
    #[cfg(feature = "parallel")]
    Parallel { workers: usize },
    /// Parallel on rayon's global pool when the feature is enabled.
    #[default]
    Auto,
}

impl Execution {
    /// `1` means sequential, `0` means the default pool size.
    pub fn with_workers(workers: usize) -> Self {
        match workers {
            1 => Execution::Sequential,
            #[cfg(feature = "parallel")]
            w => Execution::Parallel { workers: w },
            #[cfg(not(feature = "parallel"))]
            _ => Execution::Sequential,
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Auto => items.par_iter().map(f).collect(),
            #[cfg(not(feature = "parallel"))]
            Execution::Auto => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel { workers } => {
                match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                    Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
                    // pool creation only fails when threads cannot be spawned
                    Err(_) => items.iter().map(f).collect(),
                }
            }
        }
    }
}
