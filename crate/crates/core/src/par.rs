//! Data-parallel fold over an index range. With the `std` feature the range
//! is split across the rayon pool; otherwise it runs sequentially. Every
//! caller merges with an associative, commutative exact reduction, so the
//! result does not depend on the split.

use core::ops::Range;

#[cfg(feature = "std")]
pub fn fold_range<A, I, F, M>(range: Range<u64>, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().fold(&init, &fold).reduce(&init, &merge)
}

#[cfg(not(feature = "std"))]
pub fn fold_range<A, I, F, M>(range: Range<u64>, init: I, fold: F, _merge: M) -> A
where
    I: Fn() -> A,
    F: Fn(A, u64) -> A,
    M: Fn(A, A) -> A,
{
    range.fold(init(), fold)
}

/// Like [`fold_range`] but short-circuits on the first error.
pub fn try_fold_range<A, E, I, F, M>(range: Range<u64>, init: I, fold: F, merge: M) -> Result<A, E>
where
    A: Send,
    E: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> Result<A, E> + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    fold_range(
        range,
        || Ok(init()),
        |acc: Result<A, E>, i| acc.and_then(|a| fold(a, i)),
        |a, b| match (a, b) {
            (Ok(a), Ok(b)) => Ok(merge(a, b)),
            (Err(e), _) | (_, Err(e)) => Err(e),
        },
    )
}

/// `range.map(f).collect()`, split across the pool under `std`. Output order
/// follows the range.
#[cfg(feature = "std")]
pub fn map_range<T, F>(range: Range<u64>, f: F) -> alloc::vec::Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "std"))]
pub fn map_range<T, F>(range: Range<u64>, f: F) -> alloc::vec::Vec<T>
where
    F: Fn(u64) -> T,
{
    range.map(f).collect()
}
