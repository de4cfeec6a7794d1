//! Thin switch between rayon and plain iterators.
//!
//! Every data-parallel loop in the crate goes through [`par_iter!`] /
//! [`par_into_iter!`], so building without the `parallel` feature yields the
//! sequential fallback with identical results.

#[cfg(feature = "parallel")]
pub(crate) use rayon::iter::{IntoParallelIterator, IntoParallelRefIterator};

/// Iterator adapters used inside data-parallel loops.
pub(crate) mod prelude {
    #[cfg(feature = "parallel")]
    pub(crate) use rayon::prelude::*;

    /// Sequential stand-ins for rayon-only adapters.
    #[cfg(not(feature = "parallel"))]
    pub(crate) trait SeqIterExt: Iterator + Sized {
        fn flat_map_iter<U, F>(self, f: F) -> std::iter::FlatMap<Self, U, F>
        where
            U: IntoIterator,
            F: FnMut(Self::Item) -> U,
        {
            self.flat_map(f)
        }

        fn find_first<P>(mut self, predicate: P) -> Option<Self::Item>
        where
            P: FnMut(&Self::Item) -> bool,
        {
            self.find(predicate)
        }
    }

    #[cfg(not(feature = "parallel"))]
    impl<I: Iterator> SeqIterExt for I {}
}

/// Iterate a slice or collection by reference, in parallel when enabled.
macro_rules! par_iter {
    ($e:expr) => {{
        #[cfg(feature = "parallel")]
        let it = $crate::par::IntoParallelRefIterator::par_iter($e);
        #[cfg(not(feature = "parallel"))]
        let it = ($e).iter();
        it
    }};
}

/// Consume a collection or range, in parallel when enabled.
macro_rules! par_into_iter {
    ($e:expr) => {{
        #[cfg(feature = "parallel")]
        let it = $crate::par::IntoParallelIterator::into_par_iter($e);
        #[cfg(not(feature = "parallel"))]
        let it = ($e).into_iter();
        it
    }};
}

pub(crate) use par_into_iter;
pub(crate) use par_iter;

/// Whether this build evaluates data-parallel loops on the rayon pool.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Run `f` on a dedicated pool of `threads` workers.
///
/// Without the `parallel` feature this just calls `f`.
pub fn with_threads<R, F>(threads: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

/// Number of worker threads available to data-parallel loops.
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
