//! Frozen reference values for the named coefficient families, used by
//! the reproduction verifiers and the table emitters.

use num_bigint::BigInt;

use crate::poly::IntPoly;

fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64_coeffs(coeffs)
}

/// `gamma_{n,k}(q)` for `1 <= n <= 5`, row `n` listing `k = 0..floor((n-1)/2)`.
/// Entries are built from their factored forms.
pub fn gamma_q_reference() -> Vec<Vec<IntPoly>> {
    let q = IntPoly::from_i64_coeffs(&[0, 1]);
    let one_plus_q = IntPoly::one_plus_x();
    vec![
        vec![IntPoly::one()],
        vec![IntPoly::one()],
        vec![IntPoly::one(), q.mul_ref(&one_plus_q)],
        vec![IntPoly::one(), q.mul_ref(&one_plus_q).mul_ref(&poly(&[2, 1, 1]))],
        vec![
            IntPoly::one(),
            q.mul_ref(&one_plus_q).mul_ref(&poly(&[3, 2, 3, 2, 1])),
            q.pow(2).mul_ref(&one_plus_q.pow(2)).mul_ref(&poly(&[1, 0, 1, 1, 1])),
        ],
    ]
}

/// `sum q^inv` over `DE_{n,k}` for `0 <= n <= 4`, row `n` listing
/// `k = 0..floor(n/2)`.
pub fn inv_de_reference() -> Vec<Vec<IntPoly>> {
    vec![
        vec![IntPoly::one()],
        vec![IntPoly::zero()],
        vec![IntPoly::zero(), poly(&[0, 1])],
        vec![IntPoly::zero(), poly(&[0, 0, 1])],
        vec![IntPoly::zero(), poly(&[0, 0, 0, 1]), poly(&[0, 0, 1, 0, 1, 2, 1])],
    ]
}

/// `gamma^(2)_{n,k}` for `0 <= k <= n <= 6`.
pub const GAMMA2_TABLE: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 3, 1],
    &[0, 1, 9, 6, 1],
    &[0, 1, 23, 35, 10, 1],
    &[0, 1, 53, 184, 95, 15, 1],
];

/// `hat-gamma^(2)_{n,k}` for `0 <= k <= n <= 6`.
pub const HATGAMMA2_TABLE: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[0, 1, 3],
    &[0, 1, 7, 11],
    &[0, 1, 15, 54, 57],
    &[0, 1, 31, 197, 458, 361],
    &[0, 1, 63, 648, 2551, 4379, 2763],
];

/// `D_n^(2)(t)` for `0 <= n <= 4`.
pub fn d_big_r2_list() -> Vec<IntPoly> {
    vec![
        IntPoly::one(),
        poly(&[0, 1]),
        poly(&[0, 1, 3, 1]),
        poly(&[0, 1, 7, 13, 7, 1]),
        poly(&[0, 1, 15, 57, 87, 57, 15, 1]),
    ]
}

/// `d_n^(2)(t)` for `0 <= n <= 4`.
pub fn d_small_r2_list() -> Vec<IntPoly> {
    vec![
        IntPoly::one(),
        poly(&[0, 1]),
        poly(&[0, 4, 1]),
        poly(&[0, 8, 20, 1]),
        poly(&[0, 16, 144, 72, 1]),
    ]
}

pub fn bigint_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}
