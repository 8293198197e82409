//! Dense univariate polynomials over an exact coefficient ring.
//!
//! `DensePoly<C>` stores coefficients ascending by degree with the invariant
//! that the top coefficient is nonzero (the zero polynomial is the empty
//! vector). `IntPoly` is the integer instantiation used everywhere; `BiPoly`
//! nests an `IntPoly` inside each coefficient, giving bivariate polynomials
//! with the outer variable ascending in the outer vector (outer `t`, inner
//! `q` in the JSON encoding).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DensePoly<C> {
    coeffs: Vec<C>,
}

/// Polynomial with big-integer coefficients.
pub type IntPoly = DensePoly<BigInt>;
/// Bivariate polynomial: outer variable over `IntPoly` coefficients.
pub type BiPoly = DensePoly<IntPoly>;
/// Polynomial with exact rational coefficients (series coefficients).
pub type QPoly = DensePoly<BigRational>;

impl<C: Ring> DensePoly<C> {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly::from_coeffs(vec![C::one()])
    }

    /// Builds a polynomial, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = DensePoly { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: C) -> Self {
        DensePoly::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add_ref(&rhs.coeff(k)));
        }
        DensePoly::from_coeffs(out)
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub_ref(&rhs.coeff(k)));
        }
        DensePoly::from_coeffs(out)
    }

    pub fn neg_ref(&self) -> Self {
        DensePoly::from_coeffs(self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        DensePoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        DensePoly::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
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

    /// Substitutes a ring element for the variable.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at 1.
    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc = acc.add_ref(c);
        }
        acc
    }
}

impl<C: Ring> Ring for DensePoly<C> {
    fn add_ref(&self, rhs: &Self) -> Self {
        DensePoly::add_ref(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        DensePoly::sub_ref(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        DensePoly::mul_ref(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        DensePoly::neg_ref(self)
    }
    fn from_i64(v: i64) -> Self {
        DensePoly::constant(C::from_i64(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        DensePoly::constant(C::from_bigint(v))
    }
}

impl<C: Ring> Zero for DensePoly<C> {
    fn zero() -> Self {
        DensePoly::zero()
    }
    fn is_zero(&self) -> bool {
        DensePoly::is_zero(self)
    }
}

impl<C: Ring> One for DensePoly<C> {
    fn one() -> Self {
        DensePoly::one()
    }
}

impl<C: Ring> Add for DensePoly<C> {
    type Output = DensePoly<C>;
    fn add(self, rhs: Self) -> DensePoly<C> {
        self.add_ref(&rhs)
    }
}

impl<C: Ring> Add for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn add(self, rhs: Self) -> DensePoly<C> {
        self.add_ref(rhs)
    }
}

impl<C: Ring> Sub for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn sub(self, rhs: Self) -> DensePoly<C> {
        self.sub_ref(rhs)
    }
}

impl<C: Ring> Mul for DensePoly<C> {
    type Output = DensePoly<C>;
    fn mul(self, rhs: Self) -> DensePoly<C> {
        self.mul_ref(&rhs)
    }
}

impl<C: Ring> Mul for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn mul(self, rhs: Self) -> DensePoly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Ring> Neg for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn neg(self) -> DensePoly<C> {
        self.neg_ref()
    }
}

impl IntPoly {
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        DensePoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + x`
    pub fn one_plus_x() -> Self {
        IntPoly::from_i64_coeffs(&[1, 1])
    }

    /// `1 + x^2`
    pub fn one_plus_x2() -> Self {
        IntPoly::from_i64_coeffs(&[1, 0, 1])
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return None;
            }
            let q = &top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Renders as JSON `{"var":"t","coeffs":[...]}` with exact integer literals.
    pub fn to_json(&self, var: &str) -> String {
        let coeffs: Vec<String> = if self.is_zero() {
            vec!["0".to_string()]
        } else {
            self.coeffs.iter().map(|c| c.to_string()).collect()
        };
        format!("{{\"var\":\"{}\",\"coeffs\":[{}]}}", var, coeffs.join(","))
    }

    /// Human-readable form like `1 + 3t + t^2`.
    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag == BigInt::one()) {
                (0, _) => mag.to_string(),
                (1, true) => var.to_string(),
                (1, false) => format!("{}{}", mag, var),
                (_, true) => format!("{}^{}", var, k),
                (_, false) => format!("{}{}^{}", mag, var, k),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{}", body) } else { body });
            } else if c.is_negative() {
                parts.push(format!("- {}", body));
            } else {
                parts.push(format!("+ {}", body));
            }
        }
        parts.join(" ")
    }
}

impl BiPoly {
    /// Constant in the outer variable, arbitrary in the inner one.
    pub fn from_inner(p: IntPoly) -> Self {
        BiPoly::constant(p)
    }

    /// Monomial `inner^a * outer^b`.
    pub fn inner_outer_monomial(a: usize, b: usize) -> Self {
        BiPoly::monomial(IntPoly::monomial(BigInt::one(), a), b)
    }

    /// Substitutes an inner-variable polynomial for the outer variable,
    /// collapsing to a univariate polynomial.
    pub fn subst_outer(&self, value: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs().iter().rev() {
            acc = acc.mul_ref(value).add_ref(c);
        }
        acc
    }

    /// JSON `{"vars":["q","t"],"coeffs":[[...],[...]]}`, ascending in the
    /// outer variable then the inner one.
    pub fn to_json(&self, inner: &str, outer: &str) -> String {
        let rows: Vec<String> = if self.is_zero() {
            vec!["[0]".to_string()]
        } else {
            self.coeffs()
                .iter()
                .map(|p| {
                    let cs: Vec<String> = if p.is_zero() {
                        vec!["0".to_string()]
                    } else {
                        p.coeffs().iter().map(|c| c.to_string()).collect()
                    };
                    format!("[{}]", cs.join(","))
                })
                .collect()
        };
        format!(
            "{{\"vars\":[\"{}\",\"{}\"],\"coeffs\":[{}]}}",
            inner,
            outer,
            rows.join(",")
        )
    }
}

impl<C: Ring> fmt::Debug for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "poly[0]");
        }
        let terms: Vec<String> =
            self.coeffs.iter().map(|c| format!("{c:?}")).collect();
        write!(f, "poly[{}]", terms.join(", "))
    }
}

/// `[n]_q` as an integer polynomial in `q`.
pub fn q_int(n: u32) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::one(); n as usize])
}

/// `[n]_{p,q}` as a bivariate polynomial, inner variable `q`, outer `p`.
pub fn pq_int(n: u32) -> BiPoly {
    let mut coeffs = Vec::new();
    for i in 0..n {
        coeffs.push(IntPoly::monomial(BigInt::one(), (n - 1 - i) as usize));
    }
    BiPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_int_small() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), IntPoly::one());
        assert_eq!(q_int(3), IntPoly::from_i64_coeffs(&[1, 1, 1]));
    }

    #[test]
    fn pq_int_at_q2_q() {
        // [2]_{p,q} at (p,q) = (q^2,q) is q + q^2
        let p2 = pq_int(2);
        let collapsed = p2.subst_outer(&IntPoly::monomial(BigInt::one(), 2));
        assert_eq!(collapsed, IntPoly::from_i64_coeffs(&[0, 1, 1]));
    }

    #[test]
    fn mul_and_pow() {
        let p = IntPoly::one_plus_x();
        assert_eq!(p.pow(2), IntPoly::from_i64_coeffs(&[1, 2, 1]));
        let q = IntPoly::from_i64_coeffs(&[-1, 1]);
        assert_eq!(&p * &q, IntPoly::from_i64_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn div_exact_detects_remainders() {
        let p = IntPoly::from_i64_coeffs(&[0, 1, 2, 1]); // t(1+t)^2
        let d = IntPoly::from_i64_coeffs(&[1, 1]);
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, IntPoly::from_i64_coeffs(&[0, 1, 1]));
        assert!(p.div_exact(&IntPoly::from_i64_coeffs(&[1, 0, 1])).is_none());
        assert!(IntPoly::from_i64_coeffs(&[1, 2]).div_exact(&IntPoly::from_i64_coeffs(&[2])).is_none());
    }

    #[test]
    fn json_shapes() {
        let p = IntPoly::from_i64_coeffs(&[1, 11, 11, 1]);
        assert_eq!(p.to_json("t"), "{\"var\":\"t\",\"coeffs\":[1,11,11,1]}");
        let b = BiPoly::from_coeffs(vec![q_int(1), q_int(2)]);
        assert_eq!(b.to_json("q", "t"), "{\"vars\":[\"q\",\"t\"],\"coeffs\":[[1],[1,1]]}");
    }
}
