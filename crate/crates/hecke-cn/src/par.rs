//! Execution-mode helper for the grid sweeps: data-parallel via rayon when
//! the `parallel` feature is enabled, plain sequential otherwise. Results
//! keep input order, so both modes are byte-identical downstream.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep should execute. `Parallel` silently degrades to sequential
/// when the crate is built without the `parallel` feature.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Order-preserving map over a case list.
pub fn map_mode<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let items: Vec<i64> = (0..100).collect();
        let seq = map_mode(ExecMode::Sequential, &items, |x| x * x);
        let par = map_mode(ExecMode::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
