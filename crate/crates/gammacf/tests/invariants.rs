#![allow(clippy::needless_range_loop)]

//! Module-level invariants at their stated exhaustive ranges, beyond what
//! the named identity verifiers already sweep.

use num_bigint::BigInt;

use gammacf::cfrac::{family_derange_big_d, jf_moments};
use gammacf::colored::{colored_stats, cros_colored, ColoredPermutation};
use gammacf::enumerate::{merge_counts, reduce_sn, reduce_wreath};
use gammacf::laguerre::{count_histories, enumerate_histories};
use gammacf::perm::{
    class_dd, crossing_stats, factorial, linear_stats, permutations, Permutation,
};
use gammacf::poly::{gamma_expand, is_strictly_unimodal_symmetric, IntPoly};
use gammacf::verify::{self, Budget};

/// The descent, excedance, and drop generating polynomials coincide.
#[test]
fn eulerian_three_ways_agree() {
    for n in 0..=8usize {
        let hists = reduce_sn(
            n,
            || (vec![0u64; n + 1], vec![0u64; n + 1], vec![0u64; n + 1]),
            |mut acc, p| {
                let ls = linear_stats(p);
                acc.0[ls.des] += 1;
                acc.1[ls.exc] += 1;
                acc.2[ls.drop] += 1;
                acc
            },
            |a, b| (merge_counts(a.0, b.0), merge_counts(a.1, b.1), merge_counts(a.2, b.2)),
        );
        assert_eq!(hists.0, hists.1, "des vs exc at n={n}");
        assert_eq!(hists.0, hists.2, "des vs drop at n={n}");
    }
}

/// The Eulerian polynomial peels to the `|DD_{n,k}|` class sizes.
#[test]
fn eulerian_gamma_vector_counts_dd_classes() {
    for n in 1..=8usize {
        let des_hist = reduce_sn(
            n,
            || vec![0u64; n + 1],
            |mut acc, p| {
                acc[linear_stats(p).des] += 1;
                acc
            },
            merge_counts,
        );
        let a_n = IntPoly::from_coeffs(des_hist.iter().map(|&c| BigInt::from(c)).collect());
        let gv = gamma_expand(&a_n, n - 1).expect("Eulerian polynomials are symmetric");
        for (k, gamma) in gv.gammas.iter().enumerate() {
            assert_eq!(gamma, &BigInt::from(class_dd(n, k).len()), "n={n} k={k}");
        }
    }
}

#[test]
fn inverse_statistics_exhaustive() {
    for n in 0..=8usize {
        let ok = reduce_sn(
            n,
            || true,
            |acc, p| {
                let inv = p.inverse();
                acc && linear_stats(p).inv == linear_stats(&inv).inv
                    && linear_stats(&inv).exc == linear_stats(p).drop
            },
            |a, b| a && b,
        );
        assert!(ok, "inverse statistics fail at n={n}");
    }
}

/// Statistic decompositions over the full stated range r <= 4, n <= 6.
#[test]
fn colored_statistic_decompositions() {
    for r in 1..=4u32 {
        for n in 0..=6usize {
            let ok = reduce_wreath(
                n,
                r,
                || true,
                |acc, s| {
                    let st = colored_stats(s);
                    acc && st.exc_friends == st.wexa - st.fixa + st.wexc
                        && st.fexc == r as usize * (st.wexa - st.fixa) + st.csum
                        && st.csum == st.csumw + st.csumd
                        && st.dropa + st.dropc + st.wexa + st.wexc == n
                },
                |a, b| a && b,
            );
            assert!(ok, "decompositions fail at r={r}, n={n}");
        }
    }
}

#[test]
fn colored_crossings_restrict_exhaustively() {
    for n in 0..=8usize {
        let ok = reduce_sn(
            n,
            || true,
            |acc, p| {
                let e = ColoredPermutation::from_plain(p.clone(), 1);
                acc && cros_colored(&e) == crossing_stats(p).cros
            },
            |a, b| a && b,
        );
        assert!(ok, "r=1 crossing restriction fails at n={n}");
    }
}

/// Symmetry about `rn/2` and strict unimodality of `D_n^(r)` for r <= 3.
#[test]
fn flag_derangement_polynomials_are_symmetric_unimodal() {
    for r in 1..=3u32 {
        let moments = jf_moments(&family_derange_big_d(r, 4), 6).unwrap();
        for n in 1..=6usize {
            assert!(
                is_strictly_unimodal_symmetric(&moments[n], r as usize * n),
                "D_{n}^({r}) = {:?}",
                moments[n]
            );
        }
    }
}

#[test]
fn history_counts_match_wreath_orders_to_n6() {
    for r in 1..=3u32 {
        for n in 0..=6usize {
            let want = factorial(n) * (r as u64).pow(n as u32);
            assert_eq!(count_histories(n, r), want, "count at n={n}, r={r}");
            if n <= 4 {
                assert_eq!(enumerate_histories(n, r).len() as u64, want);
            }
        }
    }
}

/// Same inputs give byte-identical reports, including any witness.
#[test]
fn verifier_reports_are_deterministic() {
    let budget = Budget::default();
    let strip = |rs: &[verify::VerificationReport]| -> Vec<(String, String, bool, Option<String>)> {
        rs.iter()
            .map(|r| (r.identity.clone(), r.range.clone(), r.passed(), r.witness.clone()))
            .collect()
    };
    let a = verify::run_all(&budget, 7).unwrap();
    let b = verify::run_all(&budget, 7).unwrap();
    assert_eq!(strip(&a), strip(&b));

    let one_a = verify::run_one("colored-expansion", Some(5), Some(2), &budget, 7).unwrap();
    let one_b = verify::run_one("colored-expansion", Some(5), Some(2), &budget, 7).unwrap();
    assert_eq!(one_a.witness, one_b.witness);
    assert_eq!(one_a.passed(), one_b.passed());
}

/// Enumeration streams are rank-partitionable without changing results.
#[test]
fn partitioned_reduction_is_schedule_independent() {
    let n = 7;
    let via_iter: usize = permutations(n).map(|p| linear_stats(&p).inv).sum();
    let via_reduce =
        reduce_sn(n, || 0usize, |acc, p| acc + linear_stats(p).inv, |a, b| a + b);
    assert_eq!(via_iter, via_reduce);

    let first = reduce_sn(
        n,
        || None::<Permutation>,
        |acc, p| acc.or_else(|| Some(p.clone())),
        |a, b| a.or(b),
    );
    assert_eq!(first, Some(Permutation::identity(n)));
}
