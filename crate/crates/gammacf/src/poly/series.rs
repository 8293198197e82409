//! Truncated formal power series in `z` whose coefficients are polynomials
//! in `t` over exact rationals.
//!
//! All arithmetic is truncated at a fixed order and fully exact; these carry
//! the exponential generating function identities after denominators have
//! been cleared by cross-multiplication.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::dense::{IntPoly, QPoly};

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("exp requires a zero constant term")]
    NonzeroConstantTerm,
}

/// Series `sum_{n=0}^{order} c_n(t) z^n` with `c_n` rational-coefficient
/// polynomials; everything beyond `order` is discarded.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<QPoly>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { order, coeffs: vec![QPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = QPoly::one();
        s
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPoly>) -> Self {
        coeffs.resize(order + 1, QPoly::zero());
        TruncSeries { order, coeffs }
    }

    /// The series `p(t) * z`.
    pub fn linear_term(order: usize, p: QPoly) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = p;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &QPoly {
        &self.coeffs[n]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add_ref(b))
            .collect();
        TruncSeries { order: self.order, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.sub_ref(b))
            .collect();
        TruncSeries { order: self.order, coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order);
        let mut coeffs = vec![QPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        TruncSeries { order: self.order, coeffs }
    }

    /// Multiplies every coefficient by a fixed polynomial in `t`.
    pub fn scale_poly(&self, p: &QPoly) -> Self {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| c.mul_ref(p)).collect() }
    }

    /// `exp` of a series with zero constant term, via `f' = a' f`:
    /// `f_n = (1/n) * sum_{k=1}^{n} k a_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut f = vec![QPoly::zero(); self.order + 1];
        f[0] = QPoly::one();
        for n in 1..=self.order {
            let mut acc = QPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].mul_ref(&f[n - k]).scale(&rat(k as i64, 1));
                acc = acc.add_ref(&term);
            }
            f[n] = acc.scale(&rat(1, n as i64));
        }
        Ok(TruncSeries { order: self.order, coeffs: f })
    }

    /// `exp(p(t) * z)` truncated.
    pub fn exp_linear(order: usize, p: QPoly) -> Self {
        Self::linear_term(order, p).exp().expect("linear term has zero constant")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Converts an integer polynomial into an exact rational one.
pub fn int_to_qpoly(p: &IntPoly) -> QPoly {
    QPoly::from_coeffs(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

/// Builds the EGF `sum_n p_n(t) z^n / n!` from the polynomial sequence
/// `p_0, p_1, ...` (missing entries are zero).
pub fn egf_from_polys(order: usize, polys: &[IntPoly]) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = BigInt::from(1);
    for n in 0..=order {
        if n > 0 {
            factorial *= n as i64;
        }
        let c = match polys.get(n) {
            Some(p) => int_to_qpoly(p)
                .scale(&BigRational::new(BigInt::from(1), factorial.clone())),
            None => QPoly::zero(),
        };
        coeffs.push(c);
    }
    TruncSeries::from_coeffs(order, coeffs)
}
