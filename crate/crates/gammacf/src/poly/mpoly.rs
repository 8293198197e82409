//! Sparse multivariate polynomials over big integers with a fixed variable
//! count.
//!
//! Used where an identity must hold symbolically in many variables at once,
//! such as the per-height label weight sums of colored Laguerre histories.
//! Terms live in a `BTreeMap` keyed by exponent arrays, so equality and
//! iteration order are canonical.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly<const N: usize> {
    terms: BTreeMap<[u16; N], BigInt>,
}

impl<const N: usize> MPoly<N> {
    pub fn new() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::new();
        if !c.is_zero() {
            p.terms.insert([0; N], c);
        }
        p
    }

    /// The single variable `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i < N);
        let mut exps = [0; N];
        exps[i] = 1;
        let mut p = Self::new();
        p.terms.insert(exps, BigInt::from(1));
        p
    }

    pub fn monomial(exps: [u16; N], c: BigInt) -> Self {
        let mut p = Self::new();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16; N], &BigInt)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exps: [u16; N], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }
}

impl<const N: usize> num_traits::Zero for MPoly<N> {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<const N: usize> num_traits::One for MPoly<N> {
    fn one() -> Self {
        Self::constant(BigInt::from(1))
    }
}

impl<const N: usize> std::ops::Add for MPoly<N> {
    type Output = MPoly<N>;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<const N: usize> std::ops::Mul for MPoly<N> {
    type Output = MPoly<N>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<const N: usize> Ring for MPoly<N> {
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c);
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut exps = [0u16; N];
                for k in 0..N {
                    exps[k] = ea[k] + eb[k];
                }
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -(v.clone());
        }
        out
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        Self::constant(v.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn product_of_binomials() {
        let x = MPoly::<2>::var(0);
        let y = MPoly::<2>::var(1);
        let one = MPoly::<2>::one();
        let lhs = one.add_ref(&x).mul_ref(&one.add_ref(&y));
        let want = one.add_ref(&x).add_ref(&y).add_ref(&x.mul_ref(&y));
        assert_eq!(lhs, want);
        assert!(lhs.sub_ref(&want).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MPoly::<1>::var(0);
        assert!(x.sub_ref(&x).is_zero());
    }
}
