//! The identity verifiers.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::data;
use super::{
    eval_dist, merge_dist, run_check, seeded_points, sn_tuple_dist, wreath_tuple_dist, Budget,
    VerificationReport, VerifyError,
};
use crate::cfrac::{
    family_cyclic_eulerian, family_derange_big_d, family_derange_small_d, family_r_euler, family_linear_eulerian,
    family_wreath, jacobi_rogers, jf_moments, wreath_triple, JFraction, WreathParams,
};
use crate::colored::{colored_stats, ColoredPermutation};
use crate::enumerate::{merge_counts, reduce_sn, reduce_wreath};
use crate::laguerre::{
    enumerate_histories, history_weight_exponents, phi, phi_inverse, sigma_weight_exponents,
    weight_sum_triple, LaguerreHistory, MotzkinPath, Step,
};
use crate::perm::{
    boundary_stats, crossing_stats, cyclic_stats, dd_sigma0, fmax, linear_stats, pattern_stats,
    BoundaryConvention, Permutation,
};
use crate::poly::{
    egf_from_polys, eval_as_form, expand_sz_basis, int_to_qpoly, is_spiral,
    is_strictly_unimodal_symmetric, q_int, BiPoly, IntPoly, QPoly, Ring, TruncSeries,
};

fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `[outer_exp, inner_exp] -> count` into a bivariate polynomial.
fn dist2_to_bipoly(dist: &HashMap<[u64; 2], u64>) -> BiPoly {
    let outer_max = dist.keys().map(|k| k[0]).max().unwrap_or(0) as usize;
    let inner_max = dist.keys().map(|k| k[1]).max().unwrap_or(0) as usize;
    let mut grid = vec![vec![BigInt::zero(); inner_max + 1]; outer_max + 1];
    for (k, &c) in dist {
        grid[k[0] as usize][k[1] as usize] += bi(c as i64);
    }
    BiPoly::from_coeffs(grid.into_iter().map(IntPoly::from_coeffs).collect())
}

/// `inner(q) * outer(t)` as a bivariate polynomial.
fn lift(inner: &IntPoly, outer: &IntPoly) -> BiPoly {
    BiPoly::from_coeffs(outer.coeffs().iter().map(|c| inner.scale(c)).collect())
}

fn counts_to_poly(counts: &[u64]) -> IntPoly {
    IntPoly::from_coeffs(counts.iter().map(|&c| bi(c as i64)).collect())
}

/// First-failure merge that respects enumeration order.
fn first_witness(a: Option<String>, b: Option<String>) -> Option<String> {
    a.or(b)
}

/// Smallest key satisfying a predicate, independent of map iteration order.
fn min_key_where<const K: usize>(
    dist: &HashMap<[u64; K], u64>,
    pred: impl Fn(&[u64; K]) -> bool,
) -> Option<[u64; K]> {
    dist.keys().filter(|k| pred(k)).min().copied()
}

/// `gamma_{n,i,j}` counts: permutations with `fix = i`, `exc = j`, `cda = 0`,
/// keyed `[i, j]`.
fn gamma_nij(n: usize) -> HashMap<[u64; 2], u64> {
    reduce_sn(
        n,
        HashMap::new,
        |mut acc: HashMap<[u64; 2], u64>, p| {
            let cs = cyclic_stats(p);
            if cs.cda == 0 {
                let ls = linear_stats(p);
                *acc.entry([ls.fix as u64, ls.exc as u64]).or_insert(0) += 1;
            }
            acc
        },
        merge_dist,
    )
}

/// Enumerated `(D_n^(r), d_n^(r), sum t^ceil(fexc/r))` over colored
/// derangements.
fn derangement_polys_all(n: usize, r: u32) -> (IntPoly, IntPoly, IntPoly) {
    let width = r as usize * n + 1;
    let (fexc_counts, exc_counts, ceil_counts) = reduce_wreath(
        n,
        r,
        || (vec![0u64; width], vec![0u64; n + 1], vec![0u64; n + 1]),
        |mut acc, s| {
            if crate::colored::is_derangement(s) {
                let st = colored_stats(s);
                acc.0[st.fexc] += 1;
                acc.1[st.exc_friends] += 1;
                acc.2[st.fexc.div_ceil(r as usize)] += 1;
            }
            acc
        },
        |a, b| (merge_counts(a.0, b.0), merge_counts(a.1, b.1), merge_counts(a.2, b.2)),
    );
    (counts_to_poly(&fexc_counts), counts_to_poly(&exc_counts), counts_to_poly(&ceil_counts))
}

/// Reference values of `gamma_{n,k}(q) = sum_{DD_{n,k}} q^(2 res + les)`.
pub fn verify_gamma_q_values(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    let n_max = n_max.min(5);
    budget.check_sn(n_max)?;
    Ok(run_check("gamma-q-values", format!("1 <= n <= {n_max}"), || {
        let expected = data::gamma_q_reference();
        for n in 1..=n_max {
            let got = gamma_q_row(n);
            let want = &expected[n - 1];
            if got.len() != want.len() {
                return Err(format!("n={n}: {} entries, table has {}", got.len(), want.len()));
            }
            for (k, (g, w)) in got.iter().zip(want).enumerate() {
                if g != w {
                    return Err(format!("n={n} k={k}: computed {g:?}, table {w:?}"));
                }
            }
        }
        Ok(())
    }))
}

/// `gamma_{n,k}(q)` for `k = 0..floor((n-1)/2)` by enumeration.
fn gamma_q_row(n: usize) -> Vec<IntPoly> {
    let dist = sn_tuple_dist(n, |p| {
        if dd_sigma0(p) == 0 {
            let ls = linear_stats(p);
            let ps = pattern_stats(p);
            [ls.des as u64, (2 * ps.res + ps.les) as u64]
        } else {
            [u64::MAX, 0]
        }
    });
    let kmax = if n == 0 { 0 } else { (n - 1) / 2 };
    (0..=kmax)
        .map(|k| {
            let mut counts = Vec::new();
            for (key, &c) in &dist {
                if key[0] == k as u64 {
                    let e = key[1] as usize;
                    if counts.len() <= e {
                        counts.resize(e + 1, 0u64);
                    }
                    counts[e] += c;
                }
            }
            counts_to_poly(&counts)
        })
        .collect()
}

/// Reference values of `sum q^inv` over the `DE_{n,k}` classes.
pub fn verify_inv_de_values(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    let n_max = n_max.min(4);
    budget.check_sn(n_max)?;
    Ok(run_check("inv-de-values", format!("0 <= n <= {n_max}"), || {
        let expected = data::inv_de_reference();
        for n in 0..=n_max {
            let got = inv_de_row(n);
            let want = &expected[n];
            if got.len() != want.len() {
                return Err(format!("n={n}: {} entries, table has {}", got.len(), want.len()));
            }
            for (k, (g, w)) in got.iter().zip(want).enumerate() {
                if g != w {
                    return Err(format!("n={n} k={k}: computed {g:?}, table {w:?}"));
                }
            }
        }
        Ok(())
    }))
}

/// `sum_{DE_{n,k}} q^inv` for `k = 0..floor(n/2)`.
fn inv_de_row(n: usize) -> Vec<IntPoly> {
    let dist = sn_tuple_dist(n, |p| {
        let ls = linear_stats(p);
        if ls.fix == 0 && cyclic_stats(p).cda == 0 {
            [ls.exc as u64, ls.inv as u64]
        } else {
            [u64::MAX, 0]
        }
    });
    (0..=n / 2)
        .map(|k| {
            let mut counts = Vec::new();
            for (key, &c) in &dist {
                if key[0] == k as u64 {
                    let e = key[1] as usize;
                    if counts.len() <= e {
                        counts.resize(e + 1, 0u64);
                    }
                    counts[e] += c;
                }
            }
            counts_to_poly(&counts)
        })
        .collect()
}

/// The listed `D_n^(2)` and `d_n^(2)` polynomials match enumeration.
pub fn verify_derange_values(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    let n_max = n_max.min(4);
    budget.check_wreath(n_max, 2)?;
    Ok(run_check("derange-values", format!("r=2, 0 <= n <= {n_max}"), || {
        let big = data::d_big_r2_list();
        let small = data::d_small_r2_list();
        for n in 0..=n_max {
            let (d_big, d_small, _) = derangement_polys_all(n, 2);
            if d_big != big[n] {
                return Err(format!("D_{n}^(2): computed {d_big:?}, listed {:?}", big[n]));
            }
            if d_small != small[n] {
                return Err(format!("d_{n}^(2): computed {d_small:?}, listed {:?}", small[n]));
            }
        }
        Ok(())
    }))
}

/// Continued-fraction moments of the two derangement families equal the
/// enumerated polynomials.
pub fn verify_cf_enumeration(
    n_max: usize,
    r_max: u32,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    for r in 1..=r_max {
        budget.check_wreath(n_max, r)?;
    }
    Ok(run_check("cf-derange", format!("r <= {r_max}, n <= {n_max}"), move || {
        for r in 1..=r_max {
            let big = jf_moments(&family_derange_big_d(r, n_max / 2 + 1), n_max)
                .map_err(|e| e.to_string())?;
            let small = jf_moments(&family_derange_small_d(r, n_max / 2 + 1), n_max)
                .map_err(|e| e.to_string())?;
            for n in 0..=n_max {
                let (d_big, d_small, _) = derangement_polys_all(n, r);
                if big[n] != d_big {
                    return Err(format!(
                        "cfD r={r} n={n}: moment {:?}, enumeration {:?}",
                        big[n], d_big
                    ));
                }
                if small[n] != d_small {
                    return Err(format!(
                        "cfd r={r} n={n}: moment {:?}, enumeration {:?}",
                        small[n], d_small
                    ));
                }
            }
        }
        Ok(())
    }))
}

/// Shape checks on CF-computed polynomials alone: symmetry plus strict
/// unimodality of `D_n^(2)` and the spiral property of `d_n^(2)`.
pub fn verify_cf_shapes(n_max: usize) -> Result<VerificationReport, VerifyError> {
    Ok(run_check("cf-shapes", format!("r=2, n <= {n_max} via CF"), move || {
        let big =
            jf_moments(&family_derange_big_d(2, n_max / 2 + 1), n_max).map_err(|e| e.to_string())?;
        let small = jf_moments(&family_derange_small_d(2, n_max / 2 + 1), n_max)
            .map_err(|e| e.to_string())?;
        for n in 1..=n_max {
            if !is_strictly_unimodal_symmetric(&big[n], 2 * n) {
                return Err(format!("D_{n}^(2) not strictly unimodal symmetric: {:?}", big[n]));
            }
            let coeffs: Vec<BigInt> = (0..=n).map(|k| small[n].coeff(k)).collect();
            if !is_spiral(&coeffs, n) {
                return Err(format!("d_{n}^(2) not spiral: {:?}", small[n]));
            }
        }
        Ok(())
    }))
}

/// Frozen `gamma^(2)` and `hat-gamma^(2)` tables, plus the binomial
/// identity relating them.
pub fn verify_gamma2_tables(
    n_table: usize,
    n_bb: usize,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    let n_table = n_table.min(6);
    budget.check_sn(n_table.max(n_bb))?;
    Ok(run_check("gamma-tables", format!("tables n <= {n_table}, binomial identity n <= {n_bb}"), move || {
        let gamma2_want = data::bigint_rows(&data::GAMMA2_TABLE);
        let hat_want = data::bigint_rows(&data::HATGAMMA2_TABLE);
        for n in 0..=n_bb {
            let gamma2 = gamma2_row(n);
            let hat = hatgamma2_row(n);
            if n <= n_table {
                if gamma2 != gamma2_want[n] {
                    return Err(format!("gamma2 row {n}: computed {gamma2:?}"));
                }
                if hat != hat_want[n] {
                    return Err(format!("hatgamma2 row {n}: computed {hat:?}"));
                }
            }
            for k in 0..=n {
                let mut acc = BigInt::zero();
                for i in 0..=k {
                    acc += &gamma2[i]
                        * bi(1 << (k - i))
                        * binomial(bi((n - i) as i64), bi((k - i) as i64));
                }
                if acc != hat[k] {
                    return Err(format!(
                        "binomial identity n={n} k={k}: sum {acc}, combinatorial {}",
                        hat[k]
                    ));
                }
            }
        }
        Ok(())
    }))
}

/// `gamma^(2)_{n,k}`: permutations with `wex = k` and no double excedance.
pub fn gamma2_row(n: usize) -> Vec<BigInt> {
    let counts = reduce_sn(
        n,
        || vec![0u64; n + 1],
        |mut acc, p| {
            if cyclic_stats(p).cda == 0 {
                acc[linear_stats(p).wex] += 1;
            }
            acc
        },
        merge_counts,
    );
    counts.iter().map(|&c| bi(c as i64)).collect()
}

/// `hat-gamma^(2)_{n,k}`: drop-colored permutations without double
/// excedance whose weak excedances plus colored drops total `k`; each of
/// the `c` chosen drops takes one of two colors.
pub fn hatgamma2_row(n: usize) -> Vec<BigInt> {
    reduce_sn(
        n,
        || vec![BigInt::zero(); n + 1],
        |mut acc, p| {
            if cyclic_stats(p).cda == 0 {
                let ls = linear_stats(p);
                for c in 0..=ls.drop {
                    let k = ls.wex + c;
                    let ways = binomial(bi(ls.drop as i64), bi(c as i64)) * bi(1 << c);
                    acc[k] += ways;
                }
            }
            acc
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

/// The inv q-analogue of the Eulerian gamma expansion, fully symbolic
/// in `(q, t)`, with the `q^k (1+q)^k` divisibility clause.
pub fn verify_inv_gamma(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    Ok(run_check("inv-gamma", format!("symbolic (q,t), 1 <= n <= {n_max}"), move || {
        for n in 1..=n_max {
            let (lhs_dist, gamma_dist) = reduce_sn(
                n,
                || (HashMap::new(), HashMap::new()),
                |mut acc: (HashMap<[u64; 2], u64>, HashMap<[u64; 2], u64>), p| {
                    let ls = linear_stats(p);
                    *acc.0.entry([ls.exc as u64, (ls.inv - ls.exc) as u64]).or_insert(0) += 1;
                    if dd_sigma0(p) == 0 {
                        let ps = pattern_stats(p);
                        *acc.1.entry([ls.des as u64, (2 * ps.res + ps.les) as u64]).or_insert(0) += 1;
                    }
                    acc
                },
                |a, b| (merge_dist(a.0, b.0), merge_dist(a.1, b.1)),
            );
            let lhs = dist2_to_bipoly(&lhs_dist);
            let kmax = (n - 1) / 2;
            if let Some(bad) = min_key_where(&gamma_dist, |key| key[0] as usize > kmax) {
                return Err(format!("n={n}: DD class has descent count {} > {kmax}", bad[0]));
            }
            let one_plus_t = IntPoly::one_plus_x();
            let mut rhs = BiPoly::zero();
            for k in 0..=kmax {
                let mut counts = Vec::new();
                for (key, &c) in &gamma_dist {
                    if key[0] == k as u64 {
                        let e = key[1] as usize;
                        if counts.len() <= e {
                            counts.resize(e + 1, 0);
                        }
                        counts[e] += c;
                    }
                }
                let gamma_k = counts_to_poly(&counts);
                let outer = one_plus_t.pow((n - 1 - 2 * k) as u32).shift_up(k);
                rhs = rhs.add_ref(&lift(&gamma_k, &outer));
                // divisibility by q^k (1+q)^k
                let divisor = IntPoly::one_plus_x().pow(k as u32).shift_up(k);
                if gamma_k.div_exact(&divisor).is_none() {
                    return Err(format!(
                        "n={n} k={k}: gamma ({gamma_k:?}) not divisible by q^{k}(1+q)^{k}"
                    ));
                }
            }
            if lhs != rhs {
                return Err(format!("n={n}: expansion mismatch, lhs {lhs:?} rhs {rhs:?}"));
            }
        }
        Ok(())
    }))
}

/// The derangement analogue: `sum_{D_n} q^inv t^exc` expands over the
/// `DE_{n,k}` classes, fully symbolically in `(q, t)`.
pub fn verify_inv_derange(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    Ok(run_check("inv-derange", format!("symbolic (q,t), 1 <= n <= {n_max}"), move || {
        for n in 1..=n_max {
            let (lhs_dist, de_dist) = reduce_sn(
                n,
                || (HashMap::new(), HashMap::new()),
                |mut acc: (HashMap<[u64; 2], u64>, HashMap<[u64; 2], u64>), p| {
                    let ls = linear_stats(p);
                    if ls.fix == 0 {
                        *acc.0.entry([ls.exc as u64, ls.inv as u64]).or_insert(0) += 1;
                        if cyclic_stats(p).cda == 0 {
                            *acc.1.entry([ls.exc as u64, ls.inv as u64]).or_insert(0) += 1;
                        }
                    }
                    acc
                },
                |a, b| (merge_dist(a.0, b.0), merge_dist(a.1, b.1)),
            );
            let lhs = dist2_to_bipoly(&lhs_dist);
            let kmax = n / 2;
            if let Some(bad) = min_key_where(&de_dist, |key| key[0] as usize > kmax) {
                return Err(format!("n={n}: DE class has excedance count {} > {kmax}", bad[0]));
            }
            let one_plus_t = IntPoly::one_plus_x();
            let mut rhs = BiPoly::zero();
            for k in 0..=kmax {
                let mut counts = Vec::new();
                for (key, &c) in &de_dist {
                    if key[0] == k as u64 {
                        let e = key[1] as usize;
                        if counts.len() <= e {
                            counts.resize(e + 1, 0);
                        }
                        counts[e] += c;
                    }
                }
                let inner = counts_to_poly(&counts);
                let outer = one_plus_t.pow((n - 2 * k) as u32).shift_up(k);
                rhs = rhs.add_ref(&lift(&inner, &outer));
            }
            if lhs != rhs {
                return Err(format!("n={n}: expansion mismatch, lhs {lhs:?} rhs {rhs:?}"));
            }
        }
        Ok(())
    }))
}

/// The `r`-colored expansions of `D_n^(r)` and `d_n^(r)` over the
/// `gamma_{n,i,j}` counts, with the positivity clause.
pub fn verify_colored_expansion(
    n_max: usize,
    r_max: u32,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    for r in 1..=r_max {
        budget.check_wreath(n_max, r)?;
    }
    Ok(run_check("colored-expansion", format!("r <= {r_max}, n <= {n_max}"), move || {
        let one_plus_t = IntPoly::one_plus_x();
        let t = IntPoly::monomial(BigInt::one(), 1);
        for n in 1..=n_max {
            let gamma = gamma_nij(n);
            // sharp support: gamma_(n,i,j) > 0 exactly for j >= 1 with
            // i + 2j <= n, together with the identity cell (i,j) = (n,0);
            // the printed range also names (i,0) for 1 <= i < n, but zero
            // excedances force the identity, so those counts vanish
            for i in 0..=n {
                for j in 1..=(n - i) / 2 {
                    if gamma.get(&[i as u64, j as u64]).copied().unwrap_or(0) == 0 {
                        return Err(format!("gamma_({n},{i},{j}) = 0 with j >= 1, i+2j <= n"));
                    }
                }
            }
            if gamma.get(&[n as u64, 0]).copied().unwrap_or(0) != 1 {
                return Err(format!("gamma_({n},{n},0) != 1"));
            }
            for i in 1..n {
                if gamma.get(&[i as u64, 0]).copied().unwrap_or(0) != 0 {
                    return Err(format!("gamma_({n},{i},0) unexpectedly nonzero"));
                }
            }
            if let Some(bad) = min_key_where(&gamma, |k| k[0] as usize + 2 * k[1] as usize > n) {
                return Err(format!("gamma_({n},{},{}) outside i+2j <= n", bad[0], bad[1]));
            }
            for r in 1..=r_max {
                let (d_big, d_small, _) = derangement_polys_all(n, r);
                let r_t = q_int(r);
                let rm1_t = q_int(r - 1);
                let mut rhs_big = IntPoly::zero();
                let mut rhs_small = IntPoly::zero();
                for (key, &count) in &gamma {
                    let (i, j) = (key[0] as usize, key[1] as usize);
                    if i + 2 * j < 1 || i + 2 * j > n {
                        continue;
                    }
                    let shape = t.pow((i + j) as u32).mul_ref(&one_plus_t.pow((n - i - 2 * j) as u32));
                    let term_big = shape
                        .mul_ref(&rm1_t.pow(i as u32))
                        .mul_ref(&r_t.pow((n - i) as u32))
                        .scale(&bi(count as i64));
                    rhs_big = rhs_big.add_ref(&term_big);
                    let scalar = bi((r as i64 - 1).pow(i as u32)) * bi(r as i64).pow((n - i) as u32);
                    rhs_small = rhs_small.add_ref(&shape.scale(&(scalar * bi(count as i64))));
                }
                if d_big != rhs_big {
                    return Err(format!("D expansion r={r} n={n}: {d_big:?} vs {rhs_big:?}"));
                }
                if d_small != rhs_small {
                    return Err(format!("d expansion r={r} n={n}: {d_small:?} vs {rhs_small:?}"));
                }
            }
        }
        Ok(())
    }))
}

/// The `r = 2` reduction: gamma-positivity of `D_n^(2)` through the
/// `gamma^(2)_{n,k}` counts and the matching `d_n^(2)` expansion.
pub fn verify_gamma2_expansion(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    budget.check_wreath(n_max, 2)?;
    Ok(run_check("gamma2-expansion", format!("r=2, n <= {n_max}"), move || {
        let one_plus_t = IntPoly::one_plus_x();
        let t = IntPoly::monomial(BigInt::one(), 1);
        for n in 1..=n_max {
            let (d_big, d_small, _) = derangement_polys_all(n, 2);
            let gamma2 = gamma2_row(n);
            for (k, g) in gamma2.iter().enumerate().skip(1) {
                if g <= &BigInt::zero() {
                    return Err(format!("gamma2_({n},{k}) = {g} not positive"));
                }
            }
            let mut rhs = IntPoly::zero();
            for (k, g) in gamma2.iter().enumerate().skip(1) {
                rhs = rhs.add_ref(&t.pow(k as u32).mul_ref(&one_plus_t.pow((2 * n - 2 * k) as u32)).scale(g));
            }
            if d_big != rhs {
                return Err(format!("D_{n}^(2) gamma expansion: {d_big:?} vs {rhs:?}"));
            }
            let gamma = gamma_nij(n);
            let mut rhs_small = IntPoly::zero();
            for (key, &count) in &gamma {
                let (i, j) = (key[0] as usize, key[1] as usize);
                if i + 2 * j < 1 || i + 2 * j > n {
                    continue;
                }
                let term = t
                    .pow((i + j) as u32)
                    .mul_ref(&one_plus_t.pow((n - i - 2 * j) as u32))
                    .scale(&(bi(1 << (n - i)) * bi(count as i64)));
                rhs_small = rhs_small.add_ref(&term);
            }
            if d_small != rhs_small {
                return Err(format!("d_{n}^(2) expansion: {d_small:?} vs {rhs_small:?}"));
            }
        }
        Ok(())
    }))
}

/// Coefficient bridging between `d_n^(r)` and `D_n^(r)`, plus the ceiling
/// reformulation of `d_n^(r)`.
pub fn verify_coefficient_bridge(
    n_max: usize,
    r_max: u32,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    for r in 1..=r_max {
        budget.check_wreath(n_max, r)?;
    }
    Ok(run_check("coeff-bridge", format!("r <= {r_max}, n <= {n_max}"), move || {
        for r in 1..=r_max {
            for n in 0..=n_max {
                let (d_big, d_small, ceil_dist) = derangement_polys_all(n, r);
                if d_small.coeff(0) != d_big.coeff(0) {
                    return Err(format!("r={r} n={n}: d_0 != D_0"));
                }
                for k in 1..=n {
                    let mut acc = BigInt::zero();
                    for j in 0..r as usize {
                        acc += d_big.coeff(r as usize * k - j);
                    }
                    if acc != d_small.coeff(k) {
                        return Err(format!(
                            "r={r} n={n} k={k}: sum of D coefficients {acc} != d coefficient {}",
                            d_small.coeff(k)
                        ));
                    }
                }
                if ceil_dist != d_small {
                    return Err(format!(
                        "r={r} n={n}: ceil(fexc/r) distribution {ceil_dist:?} != d {d_small:?}"
                    ));
                }
                if r == 2 && n == 4 {
                    // the worked instance 144 = 57 + 87
                    if d_small.coeff(2) != bi(144)
                        || d_big.coeff(3) != bi(57)
                        || d_big.coeff(4) != bi(87)
                    {
                        return Err("instance 144 = 57 + 87 does not hold".into());
                    }
                }
            }
        }
        Ok(())
    }))
}

/// Spiral ordering of the `d_n^(r)` coefficients for `r >= 2`.
pub fn verify_spiral(
    n_max: usize,
    r_max: u32,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    for r in 2..=r_max {
        budget.check_wreath(n_max, r)?;
    }
    Ok(run_check("spiral", format!("2 <= r <= {r_max}, n <= {n_max}"), move || {
        for r in 2..=r_max {
            for n in 0..=n_max {
                let (_, d_small, _) = derangement_polys_all(n, r);
                let coeffs: Vec<BigInt> = (0..=n).map(|k| d_small.coeff(k)).collect();
                if !is_spiral(&coeffs, n) {
                    return Err(format!("r={r} n={n}: {d_small:?} is not spiral"));
                }
            }
        }
        Ok(())
    }))
}

/// The shared-coefficient expansions: the binomial identity, the
/// `t^k (1+t^2)^(n-k)` expansion of `D_n^(2)`, and the
/// `t^ceil(k/2) (1+t)^(n-k)` evaluation giving `d_n^(2)`.
pub fn verify_shared_coefficients(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    budget.check_wreath(n_max, 2)?;
    Ok(run_check("shared-coeffs", format!("n <= {n_max}"), move || {
        for n in 0..=n_max {
            let hat = hatgamma2_row(n);
            let gamma2 = gamma2_row(n);
            for k in 0..=n {
                let mut acc = BigInt::zero();
                for i in 0..=k {
                    acc += &gamma2[i]
                        * bi(1 << (k - i))
                        * binomial(bi((n - i) as i64), bi((k - i) as i64));
                }
                if acc != hat[k] {
                    return Err(format!("binomial identity n={n} k={k}: {acc} vs {}", hat[k]));
                }
            }
            let (d_big, d_small, _) = derangement_polys_all(n, 2);
            let sz = expand_sz_basis(&d_big, n).map_err(|e| format!("n={n}: {e}"))?;
            if sz != hat {
                return Err(format!("SZ expansion n={n}: {sz:?} vs combinatorial {hat:?}"));
            }
            if eval_as_form(&hat, n) != d_small {
                return Err(format!("AS evaluation n={n} does not give d_{n}^(2)"));
            }
        }
        Ok(())
    }))
}

/// `inv = drop + cros + 2 nest` on all of `S_n`, and the worked
/// ten-element example.
pub fn verify_inv_decomposition(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    Ok(run_check("inv-decomposition", format!("n <= {n_max}"), move || {
        let sigma: Permutation = "9 3 7 4 6 10 5 8 1 2".parse().expect("valid word");
        let cs = crossing_stats(&sigma);
        if cs.cros != 5 || cs.nest != 10 {
            return Err(format!("worked example: cros={}, nest={}", cs.cros, cs.nest));
        }
        for n in 0..=n_max {
            let witness = reduce_sn(
                n,
                || None,
                |acc: Option<String>, p| {
                    acc.or_else(|| {
                        let ls = linear_stats(p);
                        let cs = crossing_stats(p);
                        if ls.inv != ls.drop + cs.cros + 2 * cs.nest {
                            Some(format!(
                                "{p}: inv={} drop={} cros={} nest={}",
                                ls.inv, ls.drop, cs.cros, cs.nest
                            ))
                        } else {
                            None
                        }
                    })
                },
                first_witness,
            );
            if let Some(w) = witness {
                return Err(w);
            }
        }
        Ok(())
    }))
}

/// The closed Jacobi-Rogers sum agrees with the path DP on seeded random
/// families, and the r-dilated Laguerre family counts `n! r^n`.
pub fn verify_jacobi_rogers(
    n_max: usize,
    trials: usize,
    r_max: u32,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    Ok(run_check("jacobi-rogers", format!("{trials} families, n <= {n_max}, r <= {r_max}"), move || {
        let h_max = n_max / 2 + 1;
        let points = seeded_points(seed, "jacobi-rogers", trials, 2 * h_max + 1);
        for (trial, point) in points.iter().enumerate() {
            let b: Vec<BigInt> = (0..=h_max).map(|h| point[h].clone() - bi(1)).collect();
            let lam: Vec<BigInt> = (1..=h_max).map(|h| point[h_max + h].clone()).collect();
            let jf = JFraction::new(b, lam);
            let mu = jf_moments(&jf, n_max).map_err(|e| e.to_string())?;
            for (n, m) in mu.iter().enumerate() {
                let closed = jacobi_rogers(&jf, n);
                if &closed != m {
                    return Err(format!("trial {trial} n={n}: DP {m}, closed sum {closed}"));
                }
            }
        }
        for r in 1..=r_max {
            let jf = family_r_euler(r, n_max / 2 + 1);
            let mu = jf_moments(&jf, n_max).map_err(|e| e.to_string())?;
            for (n, m) in mu.iter().enumerate() {
                let mut want = BigInt::one();
                for i in 1..=n {
                    want *= bi(i as i64);
                }
                want *= bi(r as i64).pow(n as u32);
                if m != &want {
                    return Err(format!("r-euler r={r} n={n}: moment {m}, expected {want}"));
                }
            }
        }
        Ok(())
    }))
}

/// Bijection checks: image validity, bijectivity onto the enumerated
/// histories, round-trip identity, weight preservation as monomials, the
/// per-height weight sums against the coefficient triple, and the worked
/// seven-letter example.
pub fn verify_bijection(
    n_max: usize,
    r_max: u32,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    for r in 1..=r_max {
        budget.check_wreath(n_max, r)?;
    }
    Ok(run_check("bijection", format!("r <= {r_max}, n <= {n_max}, weight sums h <= 4"), move || {
        // worked seven-letter example
        let sigma = ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3).expect("valid");
        let hist = phi(&sigma);
        let want_steps = vec![Step::NE, Step::NE, Step::E, Step::E, Step::SE, Step::E, Step::SE];
        let want_labels = vec![(0, -2), (-1, 0), (1, 0), (-1, 1), (2, 2), (0, 1), (1, 1)];
        if hist.path.steps() != want_steps.as_slice() || hist.labels != want_labels {
            return Err(format!("worked example produced {hist}"));
        }
        if phi_inverse(&hist).map_err(|e| e.to_string())? != sigma {
            return Err("worked example does not invert".into());
        }
        let len11 = LaguerreHistory::new(
            MotzkinPath::new(vec![
                Step::E,
                Step::NE,
                Step::NE,
                Step::E,
                Step::NE,
                Step::SE,
                Step::SE,
                Step::E,
                Step::NE,
                Step::SE,
                Step::SE,
            ])
            .expect("valid path"),
            vec![
                (-1, 1),
                (0, -2),
                (-2, 0),
                (-2, 3),
                (0, -1),
                (3, 1),
                (1, 1),
                (1, 0),
                (0, 0),
                (1, 2),
                (1, 1),
            ],
            3,
        );
        if let Err(e) = len11 {
            return Err(format!("length-11 example rejected: {e}"));
        }

        for r in 1..=r_max {
            for n in 0..=n_max {
                let (witness, images) = reduce_wreath(
                    n,
                    r,
                    || (None, HashSet::new()),
                    |mut acc: (Option<String>, HashSet<String>), s| {
                        if acc.0.is_none() {
                            let h = phi(s);
                            if let Err(e) = h.validate() {
                                acc.0 = Some(format!("phi({s}) invalid: {e}"));
                            } else if phi_inverse(&h).ok().as_ref() != Some(s) {
                                acc.0 = Some(format!("round-trip failed for {s}"));
                            } else if sigma_weight_exponents(s) != history_weight_exponents(&h) {
                                acc.0 = Some(format!("weight mismatch for {s}"));
                            } else {
                                acc.1.insert(h.to_json());
                            }
                        }
                        acc
                    },
                    |a, mut b| {
                        let witness = first_witness(a.0, b.0);
                        let mut set = a.1;
                        if set.len() < b.1.len() {
                            std::mem::swap(&mut set, &mut b.1);
                        }
                        set.extend(b.1);
                        (witness, set)
                    },
                );
                if let Some(w) = witness {
                    return Err(w);
                }
                let all: HashSet<String> =
                    enumerate_histories(n, r).iter().map(|h| h.to_json()).collect();
                if images != all {
                    return Err(format!(
                        "r={r} n={n}: image has {} histories, enumeration {}",
                        images.len(),
                        all.len()
                    ));
                }
            }
        }

        // per-height label weight sums equal the coefficient triple,
        // symbolically in all nine parameters
        let wp = WreathParams {
            q: crate::poly::MPoly::<9>::var(0),
            t: crate::poly::MPoly::var(1),
            tt: crate::poly::MPoly::var(2),
            w: crate::poly::MPoly::var(3),
            ww: crate::poly::MPoly::var(4),
            x: crate::poly::MPoly::var(5),
            xx: crate::poly::MPoly::var(6),
            y: crate::poly::MPoly::var(7),
            yy: crate::poly::MPoly::var(8),
        };
        for r in 1..=r_max {
            for h in 0..=4i32 {
                let (a, b, c) = weight_sum_triple(r, h);
                let (aa, bb, cc) = wreath_triple(r, &wp, h as u32);
                if a != aa || b != bb || c != cc {
                    return Err(format!("weight sums differ from coefficients at r={r}, h={h}"));
                }
            }
        }
        Ok(())
    }))
}

/// Weight statistics of a colored permutation in family parameter order.
fn wreath_stat_tuple(s: &ColoredPermutation) -> [u64; 9] {
    sigma_weight_exponents(s)
}

/// The nine-parameter moment identity: CF moments equal enumerated weight
/// sums at seeded integer points and symbolically in `(q, t)`.
pub fn verify_cf_wreath(
    n_max: usize,
    r_max: u32,
    points: usize,
    seed: u64,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    for r in 1..=r_max {
        budget.check_wreath(n_max, r)?;
    }
    Ok(run_check("cf-wreath", format!("r <= {r_max}, n <= {n_max}, {points} points + (q,t) pass"), move || {
        for r in 1..=r_max {
            let dists: Vec<HashMap<[u64; 9], u64>> =
                (0..=n_max).map(|n| wreath_tuple_dist(n, r, wreath_stat_tuple)).collect();
            for (idx, point) in seeded_points(seed, "cf-wreath", points, 9).iter().enumerate() {
                let wp = WreathParams::from_slice(point);
                let jf = family_wreath(r, &wp, n_max / 2 + 1);
                let mu = jf_moments(&jf, n_max).map_err(|e| e.to_string())?;
                for n in 0..=n_max {
                    let want = eval_dist(&dists[n], point);
                    if mu[n] != want {
                        return Err(format!(
                            "r={r} n={n} point {idx}: moment {} vs enumeration {}",
                            mu[n], want
                        ));
                    }
                }
            }
            // symbolic pass: weight q^cros t^wexa, everything else 1
            let q = BiPoly::inner_outer_monomial(1, 0);
            let t = BiPoly::inner_outer_monomial(0, 1);
            let one = BiPoly::one();
            let sym = [
                q,
                t,
                one.clone(),
                one.clone(),
                one.clone(),
                one.clone(),
                one.clone(),
                one.clone(),
                one.clone(),
            ];
            let wp = WreathParams::from_slice(&sym);
            let jf = family_wreath(r, &wp, n_max / 2 + 1);
            let mu = jf_moments(&jf, n_max).map_err(|e| e.to_string())?;
            for n in 0..=n_max {
                let want: BiPoly = eval_dist(&dists[n], &sym);
                if mu[n] != want {
                    return Err(format!("r={r} n={n}: symbolic (q,t) moment mismatch"));
                }
            }
        }
        Ok(())
    }))
}

fn cyclic_stat_tuple(p: &Permutation) -> [u64; 7] {
    let ls = linear_stats(p);
    let cs = cyclic_stats(p);
    let cr = crossing_stats(p);
    [
        cr.nest as u64,
        cr.cros as u64,
        ls.drop as u64,
        cs.cda as u64,
        cs.cdd as u64,
        cs.cvalley as u64,
        cs.fix as u64,
    ]
}

/// The seven-parameter cyclic-statistic moment identity at seeded points
/// and symbolically in `(q, t)`.
pub fn verify_cf_cyclic(
    n_max: usize,
    points: usize,
    seed: u64,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    Ok(run_check("cf-cyclic", format!("n <= {n_max}, {points} points + (q,t) pass"), move || {
        let dists: Vec<HashMap<[u64; 7], u64>> =
            (0..=n_max).map(|n| sn_tuple_dist(n, cyclic_stat_tuple)).collect();
        for (idx, point) in seeded_points(seed, "cf-cyclic", points, 7).iter().enumerate() {
            let params: [BigInt; 7] = point.clone().try_into().expect("arity 7");
            let jf = family_cyclic_eulerian(&params, n_max / 2 + 1);
            let mu = jf_moments(&jf, n_max).map_err(|e| e.to_string())?;
            for n in 0..=n_max {
                let want = eval_dist(&dists[n], point);
                if mu[n] != want {
                    return Err(format!("n={n} point {idx}: moment {} vs enumeration {}", mu[n], want));
                }
            }
        }
        // symbolic pass: p=u=v=w=y=1 leaves q^cros t^drop
        let q = BiPoly::inner_outer_monomial(1, 0);
        let t = BiPoly::inner_outer_monomial(0, 1);
        let one = BiPoly::one();
        let sym = [one.clone(), q, t, one.clone(), one.clone(), one.clone(), one.clone()];
        let jf = family_cyclic_eulerian(&sym, n_max / 2 + 1);
        let mu = jf_moments(&jf, n_max).map_err(|e| e.to_string())?;
        for n in 0..=n_max {
            let want: BiPoly = eval_dist(&dists[n], &sym);
            if mu[n] != want {
                return Err(format!("n={n}: symbolic (q,t) moment mismatch"));
            }
        }
        Ok(())
    }))
}

fn linear_stat_tuple(p: &Permutation) -> [u64; 6] {
    let ls = linear_stats(p);
    let ps = pattern_stats(p);
    let bs = boundary_stats(p, BoundaryConvention::PadZeroZero);
    [
        ps.res as u64,
        ps.les as u64,
        ls.des as u64,
        bs.da as u64,
        bs.dd as u64,
        bs.valley as u64,
    ]
}

/// The six-parameter generalized Eulerian identity: CF moments (shifted by
/// one) equal the enumerated polynomials and their `DD`-class expansion, at
/// seeded points and symbolically in `(q, t)`.
pub fn verify_cf_linear(
    n_max: usize,
    points: usize,
    seed: u64,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    Ok(run_check("cf-linear", format!("n <= {n_max}, {points} points + (q,t) pass"), move || {
        let dists: Vec<HashMap<[u64; 6], u64>> =
            (1..=n_max).map(|n| sn_tuple_dist(n, linear_stat_tuple)).collect();
        // DD-class joint distribution of (des, res, les) for the expansion
        let dd_dists: Vec<HashMap<[u64; 3], u64>> = (1..=n_max)
            .map(|n| {
                sn_tuple_dist(n, |p| {
                    if dd_sigma0(p) == 0 {
                        let ps = pattern_stats(p);
                        [linear_stats(p).des as u64, ps.res as u64, ps.les as u64]
                    } else {
                        [u64::MAX, 0, 0]
                    }
                })
            })
            .collect();

        fn expansion<R: Ring>(dd: &HashMap<[u64; 3], u64>, n: usize, params: &[R; 6]) -> R {
            let [p, q, t, u, v, w] = params;
            let tw = t.mul_ref(w);
            let u_plus_vt = u.add_ref(&v.mul_ref(t));
            let mut acc = R::zero();
            for k in 0..=(n - 1) / 2 {
                let mut a_nk = R::zero();
                for (key, &c) in dd {
                    if key[0] == k as u64 {
                        let term = p
                            .pow_u32(key[1] as u32)
                            .mul_ref(&q.pow_u32(key[2] as u32))
                            .mul_ref(&R::from_i64(c as i64));
                        a_nk = a_nk.add_ref(&term);
                    }
                }
                acc = acc.add_ref(
                    &a_nk
                        .mul_ref(&tw.pow_u32(k as u32))
                        .mul_ref(&u_plus_vt.pow_u32((n - 1 - 2 * k) as u32)),
                );
            }
            acc
        }

        for (idx, point) in seeded_points(seed, "cf-linear", points, 6).iter().enumerate() {
            let params: [BigInt; 6] = point.clone().try_into().expect("arity 6");
            let jf = family_linear_eulerian(&params, n_max / 2 + 1);
            let mu = jf_moments(&jf, n_max - 1).map_err(|e| e.to_string())?;
            for n in 1..=n_max {
                let want = eval_dist(&dists[n - 1], point);
                if mu[n - 1] != want {
                    return Err(format!(
                        "n={n} point {idx}: moment {} vs enumeration {}",
                        mu[n - 1],
                        want
                    ));
                }
                let expanded = expansion(&dd_dists[n - 1], n, &params);
                if expanded != want {
                    return Err(format!(
                        "n={n} point {idx}: DD expansion {expanded} vs enumeration {want}"
                    ));
                }
            }
        }
        // symbolic pass: p=u=v=w=1 leaves q^les t^des
        let q = BiPoly::inner_outer_monomial(1, 0);
        let t = BiPoly::inner_outer_monomial(0, 1);
        let one = BiPoly::one();
        let sym = [one.clone(), q, t, one.clone(), one.clone(), one.clone()];
        let jf = family_linear_eulerian(&sym, n_max / 2 + 1);
        let mu = jf_moments(&jf, n_max - 1).map_err(|e| e.to_string())?;
        for n in 1..=n_max {
            let want: BiPoly = eval_dist(&dists[n - 1], &sym);
            if mu[n - 1] != want {
                return Err(format!("n={n}: symbolic (q,t) moment mismatch"));
            }
            let expanded = expansion(&dd_dists[n - 1], n, &sym);
            if expanded != want {
                return Err(format!("n={n}: symbolic (q,t) DD expansion mismatch"));
            }
        }
        Ok(())
    }))
}

/// Type-B Eulerian polynomials `sum_{B_n} t^exc` for `n <= n_max`, computed
/// without enumeration: colors are free at non-fixed positions of the
/// underlying permutation and decide an excedance at fixed ones, so
/// `B_n(t) = sum_k C(n,k) (1+t)^k 2^(n-k) D_(n-k)(t)` over the derangement
/// excedance polynomials from the r=1 continued fraction.
fn b_exc_polys_via_cf(n_max: usize) -> Result<Vec<IntPoly>, String> {
    let derange =
        jf_moments(&family_derange_big_d(1, n_max / 2 + 1), n_max).map_err(|e| e.to_string())?;
    let one_plus_t = IntPoly::one_plus_x();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = IntPoly::zero();
        for k in 0..=n {
            let scalar = binomial(bi(n as i64), bi(k as i64)) * bi(1i64 << (n - k) as u32);
            acc = acc.add_ref(&one_plus_t.pow(k as u32).mul_ref(&derange[n - k]).scale(&scalar));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Cross-multiplied exponential generating function identities, exact to
/// the requested order.
pub fn verify_egf(name: &str, order: usize, r_max: u32) -> Result<VerificationReport, VerifyError> {
    let name = name.to_string();
    let range = match name.as_str() {
        "b-eulerian" => format!("order z^{order}"),
        _ => format!("order z^{order}, r <= {r_max}"),
    };
    let id = format!("egf-{name}");
    Ok(run_check(&id, range, move || {
        let t_int = IntPoly::monomial(BigInt::one(), 1);
        let qt = |p: &IntPoly| int_to_qpoly(p);
        let one_minus_t = qt(&IntPoly::from_i64_coeffs(&[1, -1]));
        match name.as_str() {
            "b-eulerian" => {
                let b_polys = b_exc_polys_via_cf(order)?;
                // enumeration cross-check at small sizes
                for n in 0..=5usize {
                    let counts = reduce_wreath(
                        n,
                        2,
                        || vec![0u64; n + 1],
                        |mut acc, s| {
                            acc[colored_stats(s).exc_friends] += 1;
                            acc
                        },
                        merge_counts,
                    );
                    if counts_to_poly(&counts) != b_polys[n] {
                        return Err(format!("B_{n} excedance polynomial mismatch vs enumeration"));
                    }
                }
                let lhs = egf_from_polys(order, &b_polys);
                // (sum B_n z^n/n!) (1 - t e^(2z(1-t))) = (1-t) e^(z(1-t))
                let e2 = TruncSeries::exp_linear(order, qt(&IntPoly::from_i64_coeffs(&[2, -2])));
                let factor = TruncSeries::one(order).sub(&e2.scale_poly(&qt(&t_int)));
                let rhs = TruncSeries::exp_linear(order, one_minus_t.clone())
                    .scale_poly(&one_minus_t);
                if lhs.mul(&factor) != rhs {
                    return Err("type-B Eulerian EGF identity fails".into());
                }
                Ok(())
            }
            "flag-derange" => {
                for r in 1..=r_max {
                    let d_polys = jf_moments(&family_derange_big_d(r, order / 2 + 1), order)
                        .map_err(|e| e.to_string())?;
                    let lhs = egf_from_polys(order, &d_polys);
                    // (sum D_n^(r) z^n/n!) (e^(t^r z) - t e^z) = 1 - t
                    let etr =
                        TruncSeries::exp_linear(order, qt(&IntPoly::monomial(BigInt::one(), r as usize)));
                    let ez = TruncSeries::exp_linear(order, QPoly::one());
                    let factor = etr.sub(&ez.scale_poly(&qt(&t_int)));
                    let rhs = TruncSeries::one(order).scale_poly(&one_minus_t);
                    if lhs.mul(&factor) != rhs {
                        return Err(format!("flag-derangement EGF identity fails at r={r}"));
                    }
                }
                Ok(())
            }
            "exc-derange" => {
                for r in 1..=r_max {
                    let d_polys = jf_moments(&family_derange_small_d(r, order / 2 + 1), order)
                        .map_err(|e| e.to_string())?;
                    // coefficient of z^n is d_n(t) / (r^n n!)
                    let mut coeffs = Vec::with_capacity(order + 1);
                    let mut denom = BigInt::one();
                    for (n, p) in d_polys.iter().enumerate() {
                        if n > 0 {
                            denom *= bi(r as i64) * bi(n as i64);
                        }
                        coeffs.push(int_to_qpoly(p).scale(&num_rational::BigRational::new(
                            BigInt::one(),
                            denom.clone(),
                        )));
                    }
                    let lhs = TruncSeries::from_coeffs(order, coeffs);
                    let e1t = TruncSeries::exp_linear(order, one_minus_t.clone());
                    let factor = TruncSeries::one(order).sub(&e1t.scale_poly(&qt(&t_int)));
                    // rhs: (1-t) e^(-tz/r)
                    let minus_t_over_r = QPoly::from_coeffs(vec![
                        num_rational::BigRational::zero(),
                        num_rational::BigRational::new(bi(-1), bi(r as i64)),
                    ]);
                    let rhs = TruncSeries::exp_linear(order, minus_t_over_r)
                        .scale_poly(&one_minus_t);
                    if lhs.mul(&factor) != rhs {
                        return Err(format!("excedance-derangement EGF identity fails at r={r}"));
                    }
                }
                Ok(())
            }
            "ceil-fold" => {
                for r in 1..=r_max {
                    let d_polys = jf_moments(&family_derange_big_d(r, order / 2 + 1), order)
                        .map_err(|e| e.to_string())?;
                    // sum_k D_(n,k) t^(r ceil(k/r))
                    let folded: Vec<IntPoly> = d_polys
                        .iter()
                        .map(|p| {
                            let mut acc = IntPoly::zero();
                            for (k, c) in p.coeffs().iter().enumerate() {
                                let e = r as usize * k.div_ceil(r as usize);
                                acc = acc.add_ref(&IntPoly::monomial(c.clone(), e));
                            }
                            acc
                        })
                        .collect();
                    let lhs = egf_from_polys(order, &folded);
                    let tr = IntPoly::monomial(BigInt::one(), r as usize);
                    let e_rtr = TruncSeries::exp_linear(order, qt(&tr.scale(&bi(r as i64))));
                    let e_r = TruncSeries::exp_linear(
                        order,
                        QPoly::constant(num_rational::BigRational::from_integer(bi(r as i64))),
                    );
                    let factor = e_rtr.sub(&e_r.scale_poly(&qt(&tr)));
                    let one_minus_tr = qt(&IntPoly::from_coeffs({
                        let mut v = vec![BigInt::one()];
                        v.resize(r as usize, BigInt::zero());
                        v.push(bi(-1));
                        v
                    }));
                    let rhs = TruncSeries::exp_linear(order, qt(&tr.scale(&bi(r as i64 - 1))))
                        .scale_poly(&one_minus_tr);
                    if lhs.mul(&factor) != rhs {
                        return Err(format!("ceiling-folded EGF identity fails at r={r}"));
                    }
                }
                Ok(())
            }
            "residue-split" => {
                for r in 1..=r_max {
                    let d_big = jf_moments(&family_derange_big_d(r, order / 2 + 1), order)
                        .map_err(|e| e.to_string())?;
                    let d_small = jf_moments(&family_derange_small_d(r, order / 2 + 1), order)
                        .map_err(|e| e.to_string())?;
                    let mut a_polys = Vec::with_capacity(order + 1);
                    let mut b_polys = Vec::with_capacity(order + 1);
                    for p in &d_big {
                        let mut a = IntPoly::zero();
                        let mut b = IntPoly::zero();
                        for (idx, c) in p.coeffs().iter().enumerate() {
                            if idx % r as usize == 0 {
                                a = a.add_ref(&IntPoly::monomial(c.clone(), idx / r as usize));
                            } else {
                                b = b.add_ref(&IntPoly::monomial(c.clone(), idx.div_ceil(r as usize)));
                            }
                        }
                        a_polys.push(a);
                        b_polys.push(b);
                    }
                    for n in 0..=order {
                        if a_polys[n].add_ref(&b_polys[n]) != d_small[n] {
                            return Err(format!("a+b split differs from d at r={r}, n={n}"));
                        }
                    }
                    let t_q = qt(&t_int);
                    let e_rt = TruncSeries::exp_linear(order, t_q.scale(&num_rational::BigRational::from_integer(bi(r as i64))));
                    let e_rz = TruncSeries::exp_linear(
                        order,
                        QPoly::constant(num_rational::BigRational::from_integer(bi(r as i64))),
                    );
                    let denom = e_rt.sub(&e_rz.scale_poly(&t_q));
                    let e_r1t = TruncSeries::exp_linear(
                        order,
                        t_q.scale(&num_rational::BigRational::from_integer(bi(r as i64 - 1))),
                    );
                    let e_r1 = TruncSeries::exp_linear(
                        order,
                        QPoly::constant(num_rational::BigRational::from_integer(bi(r as i64 - 1))),
                    );
                    let lhs_a = egf_from_polys(order, &a_polys).mul(&denom);
                    let rhs_a = e_r1t.sub(&e_r1.scale_poly(&t_q));
                    if lhs_a != rhs_a {
                        return Err(format!("a-EGF identity fails at r={r}"));
                    }
                    let lhs_b = egf_from_polys(order, &b_polys).mul(&denom);
                    let rhs_b = e_r1.scale_poly(&t_q).sub(&e_r1t.scale_poly(&t_q));
                    if lhs_b != rhs_b {
                        return Err(format!("b-EGF identity fails at r={r}"));
                    }
                }
                Ok(())
            }
            other => Err(format!("unknown EGF identity {other:?}")),
        }
    }))
}

/// Type-B excedance expansion over the `|S_{n,k,j}|` counts.
pub fn verify_b_exc_expansion(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    budget.check_wreath(n_max, 2)?;
    Ok(run_check("b-exc-expansion", format!("n <= {n_max}"), move || {
        let one_plus_t = IntPoly::one_plus_x();
        for n in 0..=n_max {
            let lhs_counts = reduce_wreath(
                n,
                2,
                || vec![0u64; n + 1],
                |mut acc, s| {
                    acc[colored_stats(s).exc_friends] += 1;
                    acc
                },
                merge_counts,
            );
            let lhs = counts_to_poly(&lhs_counts);
            // |S_{n,k,j}| keyed by (cvalley, fix) over cda = 0
            let snkj = sn_tuple_dist(n, |p| {
                let cs = cyclic_stats(p);
                if cs.cda == 0 {
                    [cs.cvalley as u64, cs.fix as u64]
                } else {
                    [u64::MAX, 0]
                }
            });
            let mut rhs = IntPoly::zero();
            for k in 0..=n / 2 {
                let mut inner = BigInt::zero();
                for j in 0..=n - 2 * k {
                    let count = snkj.get(&[k as u64, j as u64]).copied().unwrap_or(0);
                    inner += bi(count as i64) * bi(1i64 << (n - 2 * k - j) as u32);
                }
                let term = one_plus_t
                    .pow((n - 2 * k) as u32)
                    .shift_up(k)
                    .scale(&(inner * bi(4).pow(k as u32)));
                rhs = rhs.add_ref(&term);
            }
            if lhs != rhs {
                return Err(format!("n={n}: lhs {lhs:?} vs rhs {rhs:?}"));
            }
        }
        Ok(())
    }))
}

/// The dual interpretation of the `b_{n,k,j}(p,q)` coefficients: cyclic
/// statistics over `S_{n,k,j}` against linear statistics over the starred
/// classes, bucket by bucket.
pub fn verify_dual_interpretation(n_max: usize, budget: &Budget) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    Ok(run_check("dual-interpretation", format!("n <= {n_max}, all (k,j)"), move || {
        for n in 0..=n_max {
            let cyclic = sn_tuple_dist(n, |p| {
                let cs = cyclic_stats(p);
                if cs.cda == 0 {
                    let cr = crossing_stats(p);
                    [cs.cvalley as u64, cs.fix as u64, cr.nest as u64, cr.cros as u64]
                } else {
                    [u64::MAX, 0, 0, 0]
                }
            });
            let linear = sn_tuple_dist(n, |p| {
                let bs = boundary_stats(p, BoundaryConvention::PadZeroNp1);
                if bs.da == fmax(p) {
                    let ps = pattern_stats(p);
                    [bs.valley as u64, bs.da as u64, ps.res2 as u64, ps.les as u64]
                } else {
                    [u64::MAX, 0, 0, 0]
                }
            });
            let clean =
                |d: &HashMap<[u64; 4], u64>| -> HashMap<[u64; 4], u64> {
                    d.iter().filter(|(k, _)| k[0] != u64::MAX).map(|(k, v)| (*k, *v)).collect()
                };
            let (cyclic, linear) = (clean(&cyclic), clean(&linear));
            if cyclic != linear {
                let mut keys: Vec<_> = cyclic.keys().chain(linear.keys()).collect();
                keys.sort();
                keys.dedup();
                for key in keys {
                    if cyclic.get(key) != linear.get(key) {
                        return Err(format!(
                            "n={n} (k,j,nest/res2,cros/les)={key:?}: cyclic {:?} vs linear {:?}",
                            cyclic.get(key),
                            linear.get(key)
                        ));
                    }
                }
            }
        }
        Ok(())
    }))
}

/// Joint equidistribution of the cyclic and linear seven-tuples.
pub fn verify_joint_equidistribution(
    n_max: usize,
    budget: &Budget,
) -> Result<VerificationReport, VerifyError> {
    budget.check_sn(n_max)?;
    Ok(run_check("joint-equidist", format!("n <= {n_max}"), move || {
        for n in 0..=n_max {
            let cyclic = sn_tuple_dist(n, cyclic_stat_tuple);
            let linear = sn_tuple_dist(n, |p| {
                let ls = linear_stats(p);
                let ps = pattern_stats(p);
                let bs = boundary_stats(p, BoundaryConvention::PadZeroNp1);
                let fm = fmax(p);
                [
                    ps.res2 as u64,
                    ps.les as u64,
                    ls.des as u64,
                    (bs.da - fm) as u64,
                    bs.dd as u64,
                    bs.valley as u64,
                    fm as u64,
                ]
            });
            if cyclic != linear {
                let mut keys: Vec<_> = cyclic.keys().chain(linear.keys()).collect();
                keys.sort();
                keys.dedup();
                for key in keys {
                    if cyclic.get(key) != linear.get(key) {
                        return Err(format!(
                            "n={n} tuple {key:?}: cyclic {:?} vs linear {:?}",
                            cyclic.get(key),
                            linear.get(key)
                        ));
                    }
                }
            }
        }
        Ok(())
    }))
}
