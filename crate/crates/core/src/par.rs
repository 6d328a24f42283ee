//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper returns results in input order and combines partial sums in
//! a fixed order, so output is identical with or without the `parallel`
//! feature and for any thread count.

/// Fixed chunk length for [`chunked_sum`]. Changing it changes rounding.
pub const SUM_CHUNK: usize = 4096;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_par<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Σ_{i<len} f(i), summed in chunks of [`SUM_CHUNK`] whose partial sums are
/// then added left to right.
pub fn chunked_sum<F>(len: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        chunked_sum_par(len, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        chunked_sum_seq(len, f)
    }
}

fn chunk_partial<F: Fn(usize) -> f64>(len: usize, chunk: usize, f: &F) -> f64 {
    let start = chunk * SUM_CHUNK;
    let end = (start + SUM_CHUNK).min(len);
    (start..end).map(f).sum()
}

pub fn chunked_sum_seq<F>(len: usize, f: F) -> f64
where
    F: Fn(usize) -> f64,
{
    let chunks = len.div_ceil(SUM_CHUNK);
    (0..chunks).map(|c| chunk_partial(len, c, &f)).sum()
}

#[cfg(feature = "parallel")]
pub fn chunked_sum_par<F>(len: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    use rayon::prelude::*;
    let chunks = len.div_ceil(SUM_CHUNK);
    let partials: Vec<f64> = (0..chunks)
        .into_par_iter()
        .map(|c| chunk_partial(len, c, &f))
        .collect();
    partials.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let ys = map(&xs, |x| x * x);
        assert_eq!(ys, map_seq(&xs, |x| x * x));
        assert_eq!(ys[999], 999 * 999);
    }

    #[test]
    fn chunked_sum_is_bitwise_reproducible() {
        let f = |i: usize| 1.0 / ((i + 1) as f64).powf(1.5);
        let a = chunked_sum(100_000, f);
        let b = chunked_sum_seq(100_000, f);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn chunked_sum_empty() {
        assert_eq!(chunked_sum(0, |_| 1.0), 0.0);
    }
}
