//! Basis expansions for symmetric polynomials and the coefficient-shape
//! predicates (symmetry, unimodality, spiral ordering).
//!
//! All expansions run by triangular peeling with an explicit residual: the
//! candidate coefficient is read off the lowest untouched degree, its basis
//! multiple is subtracted, and the expansion succeeds only when the final
//! residual vanishes. Failure carries the residual for diagnostics.

use num_bigint::BigInt;
use thiserror::Error;

use super::dense::{DensePoly, IntPoly};
use super::ring::Ring;

#[derive(Debug, Error)]
pub enum ExpandError {
    #[error("polynomial is not expressible in the {basis} basis; residual {residual}")]
    NotExpressible { basis: &'static str, residual: String },
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
}

/// Expansion of a symmetric polynomial in the basis `t^k (1+t)^(d-2k)`.
///
/// `center2` is `d`, twice the center of symmetry; `gammas[k]` multiplies
/// `t^k (1+t)^(d-2k)` for `0 <= k <= d/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaVector<C> {
    pub center2: usize,
    pub gammas: Vec<C>,
}

impl<C: Ring> GammaVector<C> {
    /// Rebuilds the source polynomial from the expansion.
    pub fn reconstruct(&self) -> DensePoly<C> {
        let one_plus_t = DensePoly::from_coeffs(vec![C::one(), C::one()]);
        let mut acc = DensePoly::zero();
        for (k, g) in self.gammas.iter().enumerate() {
            let term = one_plus_t
                .pow((self.center2 - 2 * k) as u32)
                .shift_up(k)
                .scale(g);
            acc = acc.add_ref(&term);
        }
        acc
    }
}

/// Expands `p` in the basis `{t^k (1+t)^(d-2k)}` by peeling.
///
/// Succeeds exactly when `p` is symmetric about `d/2` (in degrees `0..=d`);
/// the gamma coefficients may still be negative.
///
/// ```
/// use gammacf::poly::{gamma_expand, IntPoly};
/// use num_bigint::BigInt;
///
/// let eulerian = IntPoly::from_i64_coeffs(&[1, 11, 11, 1]);
/// let gv = gamma_expand(&eulerian, 3).unwrap();
/// assert_eq!(gv.gammas, vec![BigInt::from(1), BigInt::from(8)]);
/// ```
pub fn gamma_expand<C: Ring>(p: &DensePoly<C>, d: usize) -> Result<GammaVector<C>, ExpandError> {
    if let Some(deg) = p.degree() {
        if deg > d {
            return Err(ExpandError::DegreeTooLarge { degree: deg, bound: d });
        }
    }
    let one_plus_t = DensePoly::from_coeffs(vec![C::one(), C::one()]);
    let mut residual = p.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let g = residual.coeff(k);
        let term = one_plus_t.pow((d - 2 * k) as u32).shift_up(k).scale(&g);
        residual = residual.sub_ref(&term);
        gammas.push(g);
    }
    if !residual.is_zero() {
        return Err(ExpandError::NotExpressible {
            basis: "t^k(1+t)^(d-2k)",
            residual: format!("{:?}", residual),
        });
    }
    Ok(GammaVector { center2: d, gammas })
}

/// Expands `p` (degree at most `2n`) in the basis `{t^k (1+t^2)^(n-k)}`.
pub fn expand_sz_basis(p: &IntPoly, n: usize) -> Result<Vec<BigInt>, ExpandError> {
    if let Some(deg) = p.degree() {
        if deg > 2 * n {
            return Err(ExpandError::DegreeTooLarge { degree: deg, bound: 2 * n });
        }
    }
    let base = IntPoly::one_plus_x2();
    let mut residual = p.clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let c = residual.coeff(k);
        let term = base.pow((n - k) as u32).shift_up(k).scale(&c);
        residual = residual.sub_ref(&term);
        coeffs.push(c);
    }
    if !residual.is_zero() {
        return Err(ExpandError::NotExpressible {
            basis: "t^k(1+t^2)^(n-k)",
            residual: format!("{:?}", residual),
        });
    }
    Ok(coeffs)
}

/// Evaluates `sum_k coeffs[k] * t^ceil(k/2) (1+t)^(n-k)`.
///
/// This family is not a basis, so this is evaluation only.
pub fn eval_as_form(coeffs: &[BigInt], n: usize) -> IntPoly {
    assert_eq!(coeffs.len(), n + 1, "need exactly n+1 coefficients");
    let one_plus_t = IntPoly::one_plus_x();
    let mut acc = IntPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let term = one_plus_t.pow((n - k) as u32).shift_up(k.div_ceil(2)).scale(c);
        acc = acc.add_ref(&term);
    }
    acc
}

/// Coefficient symmetry `c_i = c_(d-i)` about `d/2` (coefficients beyond the
/// degree count as zero).
pub fn is_symmetric(p: &IntPoly, d: usize) -> bool {
    if let Some(deg) = p.degree() {
        if deg > d {
            return false;
        }
    }
    for i in 0..=d / 2 {
        if p.coeff(i) != p.coeff(d - i) {
            return false;
        }
    }
    true
}

/// Unimodality of the coefficient sequence: never rises again after a fall.
pub fn is_unimodal(p: &IntPoly) -> bool {
    let cs = p.coeffs();
    let mut falling = false;
    for w in cs.windows(2) {
        if w[1] > w[0] {
            if falling {
                return false;
            }
        } else if w[1] < w[0] {
            falling = true;
        }
    }
    true
}

/// Strict increase of coefficients `c_0 < c_1 < ... < c_(floor(d/2))` with
/// `c_0 >= 0`, paired with symmetry about `d/2`.
pub fn is_strictly_unimodal_symmetric(p: &IntPoly, d: usize) -> bool {
    use num_traits::Zero;
    if !is_symmetric(p, d) {
        return false;
    }
    if p.coeff(0) < BigInt::zero() {
        return false;
    }
    for i in 0..d / 2 {
        if p.coeff(i) >= p.coeff(i + 1) {
            return false;
        }
    }
    true
}

/// Spiral ordering of a coefficient sequence `c_0..c_n`:
/// `c_k < c_(n-k) < c_(k+1)` for `0 <= k < floor(n/2)`, and for odd `n`
/// additionally `c_(floor(n/2)) < c_(ceil(n/2))`.
pub fn is_spiral(coeffs: &[BigInt], n: usize) -> bool {
    assert_eq!(coeffs.len(), n + 1, "need exactly n+1 coefficients");
    for k in 0..n / 2 {
        if !(coeffs[k] < coeffs[n - k] && coeffs[n - k] < coeffs[k + 1]) {
            return false;
        }
    }
    if n % 2 == 1 && !(coeffs[n / 2] < coeffs[n / 2 + 1]) {
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_a4_gamma() {
        // 1 + 11t + 11t^2 + t^3 with d = 3 peels to (1, 8)
        let a4 = IntPoly::from_i64_coeffs(&[1, 11, 11, 1]);
        let gv = gamma_expand(&a4, 3).unwrap();
        assert_eq!(gv.gammas, vec![BigInt::from(1), BigInt::from(8)]);
        assert_eq!(gv.reconstruct(), a4);
    }

    #[test]
    fn d4_gamma_with_center_8() {
        // coefficients of t + 15t^2 + 57t^3 + 87t^4 + 57t^5 + 15t^6 + t^7
        let d42 = IntPoly::from_i64_coeffs(&[0, 1, 15, 57, 87, 57, 15, 1]);
        let gv = gamma_expand(&d42, 8).unwrap();
        let want: Vec<BigInt> = [0i64, 1, 9, 6, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(gv.gammas, want);
    }

    #[test]
    fn asymmetric_poly_rejected() {
        // t^2 is not symmetric about 1, so the final residual is nonzero
        let p = IntPoly::from_i64_coeffs(&[0, 0, 1]);
        let err = gamma_expand(&p, 2).unwrap_err();
        assert!(matches!(err, ExpandError::NotExpressible { .. }), "got {err:?}");
    }

    #[test]
    fn symmetric_but_not_gamma_positive() {
        // 1 + t^2 is symmetric about 1; peeling succeeds with a negative entry
        let p = IntPoly::from_i64_coeffs(&[1, 0, 1]);
        let gv = gamma_expand(&p, 2).unwrap();
        assert_eq!(gv.gammas, vec![BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(gv.reconstruct(), p);
    }

    #[test]
    fn expansion_success_iff_symmetric() {
        // fuzz over dense integer polynomials of degree <= d
        for d in 0..=6usize {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (d as u64);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % 7) as i64 - 3
            };
            for _ in 0..200 {
                let coeffs: Vec<i64> = (0..=d).map(|_| next()).collect();
                let p = IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
                let symmetric = (0..=d / 2).all(|i| p.coeff(i) == p.coeff(d - i));
                match gamma_expand(&p, d) {
                    Ok(gv) => {
                        assert!(symmetric, "expansion succeeded on asymmetric {p:?}");
                        assert_eq!(gv.reconstruct(), p);
                    }
                    Err(_) => assert!(!symmetric, "expansion failed on symmetric {p:?}"),
                }
            }
        }
    }

    #[test]
    fn sz_basis_examples() {
        let d42 = IntPoly::from_i64_coeffs(&[0, 1, 15, 57, 87, 57, 15, 1]);
        let coeffs = expand_sz_basis(&d42, 4).unwrap();
        let want: Vec<BigInt> = [0i64, 1, 15, 54, 57].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(coeffs, want);

        let pure = IntPoly::one_plus_x2().pow(5);
        let mut want = vec![BigInt::from(0); 6];
        want[0] = BigInt::from(1);
        assert_eq!(expand_sz_basis(&pure, 5).unwrap(), want);

        let d32 = IntPoly::from_i64_coeffs(&[0, 1, 7, 13, 7, 1]);
        let coeffs = expand_sz_basis(&d32, 3).unwrap();
        let want: Vec<BigInt> = [0i64, 1, 7, 11].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(coeffs, want);
    }

    #[test]
    fn as_form_reproduces_small_d() {
        let coeffs: Vec<BigInt> = [0i64, 1, 15, 54, 57].iter().map(|&v| BigInt::from(v)).collect();
        let d = eval_as_form(&coeffs, 4);
        assert_eq!(d, IntPoly::from_i64_coeffs(&[0, 16, 144, 72, 1]));

        let zeros = vec![BigInt::from(0); 5];
        assert!(eval_as_form(&zeros, 4).is_zero());

        let mut unit = vec![BigInt::from(0); 5];
        unit[0] = BigInt::from(1);
        assert_eq!(eval_as_form(&unit, 4), IntPoly::one_plus_x().pow(4));
    }

    #[test]
    fn shape_predicates() {
        assert!(is_symmetric(&IntPoly::from_i64_coeffs(&[1, 2, 1]), 2));
        assert!(!is_unimodal(&IntPoly::from_i64_coeffs(&[1, 3, 2, 4])));
        let d42 = [0i64, 16, 144, 72, 1].map(BigInt::from);
        assert!(is_spiral(&d42, 4));
        let not_spiral = [0i64, 1, 2, 3, 4].map(BigInt::from);
        assert!(!is_spiral(&not_spiral, 4));
    }
}
