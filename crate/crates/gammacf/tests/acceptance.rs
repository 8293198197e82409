//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every equality is exact; the asserted time bounds are the stated
//! per-criterion budgets.

use std::time::{Duration, Instant};

use gammacf::verify::{self, Budget, VerificationReport};

fn criterion(id: u32, what: &str, bound: Duration, reports: Vec<VerificationReport>) {
    let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.passed()).collect();
    let elapsed: Duration = reports.iter().map(|r| r.elapsed).sum();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id:02} {status} ({:.3}s): {what}", elapsed.as_secs_f64());
    for r in &failed {
        println!("    {}", r.one_line());
    }
    assert!(failed.is_empty(), "criterion {id} failed");
    assert!(
        elapsed < bound,
        "criterion {id} took {:.3}s, budget {:.0}s",
        elapsed.as_secs_f64(),
        bound.as_secs_f64()
    );
}

fn budget() -> Budget {
    Budget::default()
}

fn seed() -> u64 {
    verify::seed_from_env()
}

#[test]
fn criterion_01_gamma_q_reference() {
    criterion(
        1,
        "reference gamma_{n,k}(q) values for 1 <= k <= n <= 5",
        Duration::from_secs(5),
        vec![verify::verify_gamma_q_values(5, &budget()).unwrap()],
    );
}

#[test]
fn criterion_02_inv_de_reference() {
    criterion(
        2,
        "reference sum q^inv values over DE_{n,k} for n <= 4",
        Duration::from_secs(1),
        vec![verify::verify_inv_de_values(4, &budget()).unwrap()],
    );
}

#[test]
fn criterion_03_poly_lists_and_cf() {
    criterion(
        3,
        "listed D/d polynomials (n <= 4), CF vs enumeration (n <= 6), shapes to n = 20 via CF",
        Duration::from_secs(30),
        vec![
            verify::verify_derange_values(4, &budget()).unwrap(),
            verify::verify_cf_enumeration(6, 3, &budget()).unwrap(),
            verify::verify_cf_shapes(20).unwrap(),
        ],
    );
}

#[test]
fn criterion_04_gamma2_tables_and_binomial_identity() {
    criterion(
        4,
        "gamma^(2) and hat-gamma tables for n <= 6, binomial identity for n <= 7",
        Duration::from_secs(30),
        vec![verify::verify_gamma2_tables(6, 7, &budget()).unwrap()],
    );
}

#[test]
fn criterion_05_thm1_symbolic() {
    criterion(
        5,
        "inv q-analogue expansion, full symbolic (q,t) with divisibility, n <= 8",
        Duration::from_secs(120),
        vec![verify::verify_inv_gamma(8, &budget()).unwrap()],
    );
}

#[test]
fn criterion_06_thm2_symbolic() {
    criterion(
        6,
        "derangement expansion, full symbolic (q,t), n <= 8",
        Duration::from_secs(120),
        vec![verify::verify_inv_derange(8, &budget()).unwrap()],
    );
}

#[test]
fn criterion_07_thm3_expansions() {
    criterion(
        7,
        "r-colored expansions with sharp gamma_{n,i,j} positivity, r <= 3, n <= 6",
        Duration::from_secs(300),
        vec![verify::verify_colored_expansion(6, 3, &budget()).unwrap()],
    );
}

#[test]
fn criterion_08_thm6_coefficient_bridge() {
    criterion(
        8,
        "d/D coefficient bridge and ceil(fexc/r) reformulation, r <= 3, n <= 6",
        Duration::from_secs(120),
        vec![verify::verify_coefficient_bridge(6, 3, &budget()).unwrap()],
    );
}

#[test]
fn criterion_09_thm8_shared_coefficients() {
    criterion(
        9,
        "SZ-basis expansion of D_n^(2) and AS evaluation equal to d_n^(2), n <= 6",
        Duration::from_secs(60),
        vec![verify::verify_shared_coefficients(6, &budget()).unwrap()],
    );
}

#[test]
fn criterion_10_inv_decomposition() {
    criterion(
        10,
        "inv = drop + cros + 2 nest on S_n for n <= 8, with the worked example",
        Duration::from_secs(60),
        vec![verify::verify_inv_decomposition(8, &budget()).unwrap()],
    );
}

#[test]
fn criterion_11_jacobi_rogers() {
    criterion(
        11,
        "Jacobi-Rogers sum vs Motzkin DP on 100 seeded families (n <= 10), n! r^n family r <= 4",
        Duration::from_secs(10),
        vec![verify::verify_jacobi_rogers(10, 100, 4, seed()).unwrap()],
    );
}

#[test]
fn criterion_12_bijection() {
    criterion(
        12,
        "bijection validity, bijectivity, round-trip, weight preservation (r <= 3, n <= 5); weight sums for h <= 4; worked example",
        Duration::from_secs(120),
        vec![verify::verify_bijection(5, 3, &budget()).unwrap()],
    );
}

#[test]
fn criterion_13_multivariate_moments() {
    criterion(
        13,
        "nine-parameter moments (r <= 3, n <= 5), seven-parameter (n <= 7), six-parameter with expansion (n <= 7), 20 seeded points each",
        Duration::from_secs(300),
        vec![
            verify::verify_cf_wreath(5, 3, 20, seed(), &budget()).unwrap(),
            verify::verify_cf_cyclic(7, 20, seed(), &budget()).unwrap(),
            verify::verify_cf_linear(7, 20, seed(), &budget()).unwrap(),
        ],
    );
}

#[test]
fn criterion_14_egf_identities() {
    criterion(
        14,
        "cross-multiplied EGF identities to order z^10, r <= 3",
        Duration::from_secs(30),
        vec![
            verify::verify_egf("b-eulerian", 10, 3).unwrap(),
            verify::verify_egf("flag-derange", 10, 3).unwrap(),
            verify::verify_egf("exc-derange", 10, 3).unwrap(),
            verify::verify_egf("ceil-fold", 10, 3).unwrap(),
            verify::verify_egf("residue-split", 10, 3).unwrap(),
        ],
    );
}

#[test]
fn criterion_15_pet_and_dual_interpretations() {
    criterion(
        15,
        "type-B excedance expansion (n <= 6), dual b_{n,k,j} interpretation and joint equidistribution (n <= 7)",
        Duration::from_secs(300),
        vec![
            verify::verify_b_exc_expansion(6, &budget()).unwrap(),
            verify::verify_dual_interpretation(7, &budget()).unwrap(),
            verify::verify_joint_equidistribution(7, &budget()).unwrap(),
        ],
    );
}

#[test]
fn criterion_16_verify_all() {
    let start = Instant::now();
    let reports = verify::run_all(&budget(), seed()).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.passed()).collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion 16 {status} ({:.3}s): verify --all under default budgets, {} verifiers",
        elapsed.as_secs_f64(),
        reports.len()
    );
    for r in &failed {
        println!("    {}", r.one_line());
    }
    assert!(failed.is_empty(), "verify --all reported failures");
    assert!(elapsed < Duration::from_secs(600), "verify --all took {:.1}s", elapsed.as_secs_f64());
}
