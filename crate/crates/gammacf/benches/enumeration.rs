//! Parallel vs sequential enumeration reductions.
//!
//! Run with `cargo bench -p gammacf`. The parallel variants go through the
//! rayon pool (feature `parallel`, on by default); the `_seq` variants run
//! the same fold on a single range, so the comparison isolates the
//! partitioning overhead and speedup.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use gammacf::colored::colored_stats;
use gammacf::enumerate::{merge_counts, reduce_sn, reduce_sn_seq, reduce_wreath, reduce_wreath_seq};
use gammacf::laguerre::{history_weight_exponents, phi, sigma_weight_exponents};
use gammacf::perm::linear_stats;

fn eulerian_histogram(c: &mut Criterion) {
    let mut group = c.benchmark_group("eulerian_histogram");
    group.sample_size(10);
    for n in [8usize, 9] {
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| {
                let hist = reduce_sn(
                    n,
                    || vec![0u64; n],
                    |mut acc, p| {
                        acc[linear_stats(p).des] += 1;
                        acc
                    },
                    merge_counts,
                );
                black_box(hist)
            })
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| {
                let hist = reduce_sn_seq(
                    n,
                    || vec![0u64; n],
                    |mut acc, p| {
                        acc[linear_stats(p).des] += 1;
                        acc
                    },
                );
                black_box(hist)
            })
        });
    }
    group.finish();
}

fn flag_excedance_distribution(c: &mut Criterion) {
    let mut group = c.benchmark_group("flag_excedance_distribution");
    group.sample_size(10);
    let (n, r) = (6usize, 3u32);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let counts = reduce_wreath(
                n,
                r,
                || vec![0u64; r as usize * n + 1],
                |mut acc, s| {
                    acc[colored_stats(s).fexc] += 1;
                    acc
                },
                merge_counts,
            );
            black_box(counts)
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let counts = reduce_wreath_seq(
                n,
                r,
                || vec![0u64; r as usize * n + 1],
                |mut acc, s| {
                    acc[colored_stats(s).fexc] += 1;
                    acc
                },
            );
            black_box(counts)
        })
    });
    group.finish();
}

fn bijection_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("bijection_weight_sweep");
    group.sample_size(10);
    let (n, r) = (5usize, 3u32);
    let check = |acc: bool, s: &gammacf::colored::ColoredPermutation| {
        acc && sigma_weight_exponents(s) == history_weight_exponents(&phi(s))
    };
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(reduce_wreath(n, r, || true, check, |a, b| a && b)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(reduce_wreath_seq(n, r, || true, check)))
    });
    group.finish();
}

criterion_group!(benches, eulerian_histogram, flag_excedance_distribution, bijection_sweep);
criterion_main!(benches);
