//! Parallel-or-sequential execution of independent jobs.
//!
//! With the `parallel` feature the maps below run on the rayon pool;
//! without it they run on the calling thread. Results always come back in
//! input order, and every job is self-contained (own seed, no shared
//! state), so the two modes produce bit-identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Apply `f` to every index in `0..count`, collecting results in order.
pub fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

/// Apply `f` to each item of a slice, collecting results in order.
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// True when this build dispatches onto the rayon pool.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let out = map_indexed(1000, |i| i * i);
        assert_eq!(out, (0..1000).map(|i| i * i).collect::<Vec<_>>());
    }

    #[test]
    fn slice_map_preserves_order() {
        let items: Vec<u32> = (0..257).collect();
        let out = map_slice(&items, |&x| x + 1);
        assert_eq!(out, (1..258).collect::<Vec<_>>());
    }
}
