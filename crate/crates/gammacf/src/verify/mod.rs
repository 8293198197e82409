//! One verifier per theorem, corollary, lemma, and equation; table
//! emitters; report plumbing.
//!
//! Every verifier computes both sides of its identity independently (the
//! combinatorial side by exhaustive enumeration, the algebraic side through
//! the polynomial and continued-fraction machinery) and asserts exact
//! equality. Reports are deterministic: a failing verifier carries the
//! first counterexample in enumeration order.

pub mod data;
pub mod identities;
pub mod tables;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::colored::ColoredPermutation;
use crate::enumerate::{reduce_sn, reduce_wreath};
use crate::perm::Permutation;
use crate::poly::Ring;

pub use identities::*;
pub use tables::{emit_table, TableFormat, TableName};

#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error("enumeration of {what} has cardinality {needed}, over the budget {cap}")]
    BudgetExceeded { what: String, needed: u64, cap: u64 },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

/// Enumeration caps per verifier.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub sn_cap: u64,
    pub wreath_cap: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { sn_cap: 400_000, wreath_cap: 1_000_000 }
    }
}

impl Budget {
    pub fn uniform(cap: u64) -> Self {
        Budget { sn_cap: cap, wreath_cap: cap }
    }

    pub fn check_sn(&self, n: usize) -> Result<(), VerifyError> {
        let needed = crate::perm::factorial(n);
        if needed > self.sn_cap {
            return Err(VerifyError::BudgetExceeded {
                what: format!("S_{n}"),
                needed,
                cap: self.sn_cap,
            });
        }
        Ok(())
    }

    pub fn check_wreath(&self, n: usize, r: u32) -> Result<(), VerifyError> {
        let needed = crate::colored::wreath_order(n, r);
        if needed > self.wreath_cap {
            return Err(VerifyError::BudgetExceeded {
                what: format!("Z_{r} wr S_{n}"),
                needed,
                cap: self.wreath_cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(serialize_with = "ser_duration")]
    pub elapsed: Duration,
}

fn ser_duration<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn one_line(&self) -> String {
        match (&self.status, &self.witness) {
            (Status::Pass, _) => {
                format!("PASS {:<18} {} ({:.3}s)", self.identity, self.range, self.elapsed.as_secs_f64())
            }
            (Status::Fail, Some(w)) => format!(
                "FAIL {:<18} {} ({:.3}s): {}",
                self.identity,
                self.range,
                self.elapsed.as_secs_f64(),
                w
            ),
            (Status::Fail, None) => {
                format!("FAIL {:<18} {} ({:.3}s)", self.identity, self.range, self.elapsed.as_secs_f64())
            }
        }
    }
}

pub(crate) fn run_check(
    identity: &str,
    range: String,
    body: impl FnOnce() -> Result<(), String>,
) -> VerificationReport {
    let start = Instant::now();
    let outcome = body();
    VerificationReport {
        identity: identity.to_string(),
        range,
        status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
        witness: outcome.err(),
        elapsed: start.elapsed(),
    }
}

/// Seed from `GAMMACF_SEED`, defaulting to 0.
pub fn seed_from_env() -> u64 {
    std::env::var("GAMMACF_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

/// Deterministic integer parameter points in `1..=6`, decorrelated per
/// identity by folding the tag into the stream seed.
pub(crate) fn seeded_points(seed: u64, tag: &str, count: usize, arity: usize) -> Vec<Vec<BigInt>> {
    let mut mixed = seed ^ 0xd6e8_feb8_6659_fd93;
    for b in tag.bytes() {
        mixed = mixed.wrapping_mul(0x100_0000_01b3).wrapping_add(b as u64);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(mixed);
    (0..count)
        .map(|_| (0..arity).map(|_| BigInt::from(1 + (rng.next_u64() % 6))).collect())
        .collect()
}

/// Joint distribution of an exponent tuple over `S_n`.
pub(crate) fn sn_tuple_dist<const K: usize>(
    n: usize,
    stat: impl Fn(&Permutation) -> [u64; K] + Sync,
) -> HashMap<[u64; K], u64> {
    reduce_sn(
        n,
        HashMap::new,
        |mut acc: HashMap<[u64; K], u64>, p| {
            *acc.entry(stat(p)).or_insert(0) += 1;
            acc
        },
        merge_dist,
    )
}

/// Joint distribution of an exponent tuple over `Z_r wr S_n`.
pub(crate) fn wreath_tuple_dist<const K: usize>(
    n: usize,
    r: u32,
    stat: impl Fn(&ColoredPermutation) -> [u64; K] + Sync,
) -> HashMap<[u64; K], u64> {
    reduce_wreath(
        n,
        r,
        HashMap::new,
        |mut acc: HashMap<[u64; K], u64>, s| {
            *acc.entry(stat(s)).or_insert(0) += 1;
            acc
        },
        merge_dist,
    )
}

pub(crate) fn merge_dist<const K: usize>(
    mut a: HashMap<[u64; K], u64>,
    b: HashMap<[u64; K], u64>,
) -> HashMap<[u64; K], u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Evaluates `sum_tuple count * prod_i point_i^tuple_i` in any ring.
pub(crate) fn eval_dist<R: Ring, const K: usize>(
    dist: &HashMap<[u64; K], u64>,
    point: &[R],
) -> R {
    assert_eq!(point.len(), K);
    let mut keys: Vec<&[u64; K]> = dist.keys().collect();
    keys.sort();
    let mut acc = R::zero();
    for key in keys {
        let count = dist[key];
        let mut term = R::from_i64(count as i64);
        for i in 0..K {
            term = term.mul_ref(&point[i].pow_u32(key[i] as u32));
        }
        acc = acc.add_ref(&term);
    }
    acc
}

/// Runs every verifier at the acceptance ranges, in a fixed name order.
pub fn run_all(budget: &Budget, seed: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut reports = vec![
        identities::verify_gamma_q_values(5, budget)?,
        identities::verify_inv_de_values(4, budget)?,
        identities::verify_derange_values(4, budget)?,
        identities::verify_cf_enumeration(6, 3, budget)?,
        identities::verify_cf_shapes(20)?,
        identities::verify_gamma2_tables(6, 7, budget)?,
        identities::verify_inv_gamma(8, budget)?,
        identities::verify_inv_derange(8, budget)?,
        identities::verify_colored_expansion(6, 3, budget)?,
        identities::verify_gamma2_expansion(6, budget)?,
        identities::verify_coefficient_bridge(6, 3, budget)?,
        identities::verify_spiral(6, 3, budget)?,
        identities::verify_shared_coefficients(6, budget)?,
        identities::verify_inv_decomposition(8, budget)?,
        identities::verify_jacobi_rogers(10, 100, 4, seed)?,
        identities::verify_bijection(5, 3, budget)?,
        identities::verify_cf_wreath(5, 3, 20, seed, budget)?,
        identities::verify_cf_cyclic(7, 20, seed, budget)?,
        identities::verify_cf_linear(7, 20, seed, budget)?,
        identities::verify_egf("b-eulerian", 10, 3)?,
        identities::verify_egf("flag-derange", 10, 3)?,
        identities::verify_egf("exc-derange", 10, 3)?,
        identities::verify_egf("ceil-fold", 10, 3)?,
        identities::verify_egf("residue-split", 10, 3)?,
        identities::verify_b_exc_expansion(6, budget)?,
        identities::verify_dual_interpretation(7, budget)?,
        identities::verify_joint_equidistribution(7, budget)?,
    ];
    reports.sort_by(|a, b| a.identity.cmp(&b.identity));
    Ok(reports)
}

/// Dispatch by CLI identity name.
pub fn run_one(
    name: &str,
    n: Option<usize>,
    r: Option<u32>,
    budget: &Budget,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    let nmax = |d: usize| n.unwrap_or(d);
    let rmax = |d: u32| r.unwrap_or(d);
    match name {
        "gamma-q-values" => identities::verify_gamma_q_values(nmax(5).min(5), budget),
        "inv-de-values" => identities::verify_inv_de_values(nmax(4).min(4), budget),
        "derange-values" => identities::verify_derange_values(nmax(4).min(4), budget),
        "cf-derange" => identities::verify_cf_enumeration(nmax(6), rmax(3), budget),
        "cf-shapes" => identities::verify_cf_shapes(nmax(20)),
        "gamma-tables" => identities::verify_gamma2_tables(nmax(6).min(6), nmax(7), budget),
        "inv-gamma" => identities::verify_inv_gamma(nmax(8), budget),
        "inv-derange" => identities::verify_inv_derange(nmax(8), budget),
        "colored-expansion" => identities::verify_colored_expansion(nmax(6), rmax(3), budget),
        "gamma2-expansion" => identities::verify_gamma2_expansion(nmax(6), budget),
        "coeff-bridge" => identities::verify_coefficient_bridge(nmax(6), rmax(3), budget),
        "spiral" => identities::verify_spiral(nmax(6), rmax(3), budget),
        "shared-coeffs" => identities::verify_shared_coefficients(nmax(6), budget),
        "inv-decomposition" => identities::verify_inv_decomposition(nmax(8), budget),
        "jacobi-rogers" => identities::verify_jacobi_rogers(nmax(10), 100, rmax(4), seed),
        "bijection" => identities::verify_bijection(nmax(5), rmax(3), budget),
        "cf-wreath" => identities::verify_cf_wreath(nmax(5), rmax(3), 20, seed, budget),
        "cf-cyclic" => identities::verify_cf_cyclic(nmax(7), 20, seed, budget),
        "cf-linear" => identities::verify_cf_linear(nmax(7), 20, seed, budget),
        "egf-b-eulerian" => identities::verify_egf("b-eulerian", nmax(10), rmax(3)),
        "egf-flag-derange" => identities::verify_egf("flag-derange", nmax(10), rmax(3)),
        "egf-exc-derange" => identities::verify_egf("exc-derange", nmax(10), rmax(3)),
        "egf-ceil-fold" => identities::verify_egf("ceil-fold", nmax(10), rmax(3)),
        "egf-residue-split" => identities::verify_egf("residue-split", nmax(10), rmax(3)),
        "b-exc-expansion" => identities::verify_b_exc_expansion(nmax(6), budget),
        "dual-interpretation" => identities::verify_dual_interpretation(nmax(7), budget),
        "joint-equidist" => identities::verify_joint_equidistribution(nmax(7), budget),
        other => Err(VerifyError::UnknownIdentity(other.to_string())),
    }
}

/// Names accepted by [`run_one`], in report order.
pub const IDENTITY_NAMES: [&str; 27] = [
    "b-exc-expansion",
    "bijection",
    "cf-cyclic",
    "cf-derange",
    "cf-linear",
    "cf-shapes",
    "cf-wreath",
    "coeff-bridge",
    "colored-expansion",
    "derange-values",
    "dual-interpretation",
    "egf-b-eulerian",
    "egf-ceil-fold",
    "egf-exc-derange",
    "egf-flag-derange",
    "egf-residue-split",
    "gamma-q-values",
    "gamma-tables",
    "gamma2-expansion",
    "inv-de-values",
    "inv-decomposition",
    "inv-derange",
    "inv-gamma",
    "jacobi-rogers",
    "joint-equidist",
    "shared-coeffs",
    "spiral",
];
