//! Rank-partitioned reductions over `S_n` and `Z_r wr S_n`.
//!
//! Enumeration streams are split into contiguous rank ranges; each range is
//! folded independently and the partial results merged. Merging must be
//! commutative and associative over exact values so the outcome is
//! schedule-independent. With the `parallel` feature (default) ranges run on
//! the rayon pool; without it the same code runs on one range.

use crate::colored::ColoredPermutation;
use crate::perm::{factorial, Permutation};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const MIN_CHUNK: u64 = 2048;

fn chunk_bounds(total: u64) -> Vec<(u64, u64)> {
    if total == 0 {
        return Vec::new();
    }
    let workers = if cfg!(feature = "parallel") {
        std::thread::available_parallelism().map_or(4, |p| p.get() as u64)
    } else {
        1
    };
    let chunks = ((total / MIN_CHUNK).max(1)).min(workers * 8);
    let size = total.div_ceil(chunks);
    (0..chunks)
        .map(|c| (c * size, ((c + 1) * size).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn fold_sn_range<T>(n: usize, lo: u64, hi: u64, init: impl Fn() -> T, f: &(impl Fn(T, &Permutation) -> T + Sync)) -> T {
    let mut acc = init();
    let mut p = Permutation::unrank(n, lo);
    for _ in lo..hi {
        acc = f(acc, &p);
        if !p.next_lex() {
            break;
        }
    }
    acc
}

/// Folds `f` over all of `S_n` in lexicographic rank order and merges the
/// per-range partial results.
pub fn reduce_sn<T, I, F, M>(n: usize, init: I, f: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(T, &Permutation) -> T + Sync,
    M: Fn(T, T) -> T + Send + Sync,
{
    let total = factorial(n);
    let bounds = chunk_bounds(total);
    if bounds.is_empty() {
        return init();
    }
    #[cfg(feature = "parallel")]
    {
        bounds
            .par_iter()
            .map(|&(lo, hi)| fold_sn_range(n, lo, hi, &init, &f))
            .reduce_with(&merge)
            .unwrap_or_else(init)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut acc = init();
        let mut first = true;
        for &(lo, hi) in &bounds {
            let part = fold_sn_range(n, lo, hi, &init, &f);
            acc = if first { part } else { merge(acc, part) };
            first = false;
        }
        acc
    }
}

/// Always-sequential variant of [`reduce_sn`], kept for benchmarking the
/// parallel speedup and for bitwise determinism checks.
pub fn reduce_sn_seq<T>(
    n: usize,
    init: impl Fn() -> T,
    f: impl Fn(T, &Permutation) -> T + Sync,
) -> T {
    fold_sn_range(n, 0, factorial(n), &init, &f)
}

fn fold_wreath_range<T>(
    n: usize,
    r: u32,
    lo: u64,
    hi: u64,
    init: impl Fn() -> T,
    f: &(impl Fn(T, &ColoredPermutation) -> T + Sync),
) -> T {
    // rank = perm_rank * r^n + color_rank, colors ascending as a base-r counter
    let rn = (r as u64).pow(n as u32);
    let mut acc = init();
    let mut rank = lo;
    let mut pi = Permutation::unrank(n, rank / rn);
    while rank < hi {
        let mut colors = vec![0u32; n];
        let mut c = rank % rn;
        for k in (0..n).rev() {
            colors[k] = (c % r as u64) as u32;
            c /= r as u64;
        }
        loop {
            let s = ColoredPermutation::new(pi.clone(), colors.clone(), r).expect("in range");
            acc = f(acc, &s);
            rank += 1;
            if rank >= hi {
                return acc;
            }
            if rank.is_multiple_of(rn) {
                if !pi.next_lex() {
                    return acc;
                }
                break;
            }
            let mut k = n;
            while k > 0 {
                k -= 1;
                colors[k] += 1;
                if colors[k] < r {
                    break;
                }
                colors[k] = 0;
            }
        }
    }
    acc
}

/// Folds `f` over all of `Z_r wr S_n` in rank order (permutation major,
/// color word minor) and merges the per-range partial results.
pub fn reduce_wreath<T, I, F, M>(n: usize, r: u32, init: I, f: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(T, &ColoredPermutation) -> T + Sync,
    M: Fn(T, T) -> T + Send + Sync,
{
    let total = factorial(n) * (r as u64).pow(n as u32);
    let bounds = chunk_bounds(total);
    if bounds.is_empty() {
        return init();
    }
    #[cfg(feature = "parallel")]
    {
        bounds
            .par_iter()
            .map(|&(lo, hi)| fold_wreath_range(n, r, lo, hi, &init, &f))
            .reduce_with(&merge)
            .unwrap_or_else(init)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut acc = init();
        let mut first = true;
        for &(lo, hi) in &bounds {
            let part = fold_wreath_range(n, r, lo, hi, &init, &f);
            acc = if first { part } else { merge(acc, part) };
            first = false;
        }
        acc
    }
}

/// Always-sequential variant of [`reduce_wreath`].
pub fn reduce_wreath_seq<T>(
    n: usize,
    r: u32,
    init: impl Fn() -> T,
    f: impl Fn(T, &ColoredPermutation) -> T + Sync,
) -> T {
    fold_wreath_range(n, r, 0, factorial(n) * (r as u64).pow(n as u32), &init, &f)
}

/// Merge for vectors of counters, elementwise.
pub fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::colored_permutations;
    use crate::perm::{linear_stats, permutations};

    #[test]
    fn parallel_and_sequential_agree() {
        let n = 6;
        let des_hist = |mut acc: Vec<u64>, p: &Permutation| {
            acc[linear_stats(p).des] += 1;
            acc
        };
        let par = reduce_sn(n, || vec![0u64; n], des_hist, merge_counts);
        let seq = reduce_sn_seq(n, || vec![0u64; n], des_hist);
        assert_eq!(par, seq);
        assert_eq!(par.iter().sum::<u64>(), factorial(n));
    }

    #[test]
    fn wreath_reduction_visits_every_element() {
        let (n, r) = (4usize, 3u32);
        let count = reduce_wreath(n, r, || 0u64, |acc, _| acc + 1, |a, b| a + b);
        assert_eq!(count, factorial(n) * (r as u64).pow(n as u32));

        // same multiset as the plain iterator
        let via_iter: u64 = colored_permutations(n, r).count() as u64;
        assert_eq!(count, via_iter);

        let fexc_sum = reduce_wreath(
            n,
            r,
            || 0u64,
            |acc, s| acc + crate::colored::colored_stats(s).fexc as u64,
            |a, b| a + b,
        );
        let fexc_seq: u64 = colored_permutations(n, r)
            .map(|s| crate::colored::colored_stats(&s).fexc as u64)
            .sum();
        assert_eq!(fexc_sum, fexc_seq);
    }

    #[test]
    fn sn_reduction_matches_iterator() {
        let n = 5;
        let inv_sum = reduce_sn(n, || 0u64, |acc, p| acc + linear_stats(p).inv as u64, |a, b| a + b);
        let want: u64 = permutations(n).map(|p| linear_stats(&p).inv as u64).sum();
        assert_eq!(inv_sum, want);
    }
}
