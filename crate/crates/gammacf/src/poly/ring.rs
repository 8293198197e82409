//! Minimal commutative-ring abstraction shared by the generic algorithms
//! (moment DP, Jacobi-Rogers sum, basis peeling).
//!
//! Everything is exact: implementors are big integers, big rationals, and
//! dense/sparse polynomials over those. `Zero`/`One` come from `num_traits`
//! so the usual `is_zero`/`is_one` idioms apply.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Ring:
    Clone + PartialEq + std::fmt::Debug + Send + Sync + Zero + One + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;

    fn pow_u32(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
}

impl Ring for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)` evaluated in an arbitrary ring.
pub fn q_int_in<R: Ring>(n: u32, q: &R) -> R {
    let mut acc = R::zero();
    let mut p = R::one();
    for _ in 0..n {
        acc = acc.add_ref(&p);
        p = p.mul_ref(q);
    }
    acc
}

/// `[n]_{p,q} = sum_{i=0}^{n-1} p^i q^(n-1-i)` evaluated in an arbitrary ring.
pub fn pq_int_in<R: Ring>(n: u32, p: &R, q: &R) -> R {
    let mut acc = R::zero();
    for i in 0..n {
        acc = acc.add_ref(&p.pow_u32(i).mul_ref(&q.pow_u32(n - 1 - i)));
    }
    acc
}
