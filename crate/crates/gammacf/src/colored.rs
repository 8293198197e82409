//! Colored permutations (wreath products `Z_r wr S_n`) and their statistics.
//!
//! An element is a pair of a permutation word and a color word, written
//! `"4 7^1 2 5^1 1^2 6 3"` (color 0 omitted). For `r = 2` the signed form
//! `"4 -7 2 -5 1 6 3"` is also accepted.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{permutations, Permutation};
use crate::poly::IntPoly;
use num_bigint::BigInt;

#[derive(Debug, Error, PartialEq)]
pub enum ColoredError {
    #[error("color {color} out of range for r = {r}")]
    ColorOutOfRange { color: u32, r: u32 },
    #[error("signed entries require r = 2, got r = {0}")]
    SignedNeedsR2(u32),
    #[error("cannot parse colored entry {0:?}")]
    Parse(String),
    #[error("radix must be at least 1")]
    BadRadix,
    #[error(transparent)]
    Perm(#[from] crate::perm::PermError),
    #[error("operation requires r = 2, got r = {0}")]
    NeedsR2(u32),
}

/// Element of `Z_r wr S_n`: letter `i` maps to value `pi(i)` with color `z(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    pi: Permutation,
    colors: Vec<u32>,
    r: u32,
}

impl ColoredPermutation {
    pub fn new(pi: Permutation, colors: Vec<u32>, r: u32) -> Result<Self, ColoredError> {
        if r == 0 {
            return Err(ColoredError::BadRadix);
        }
        if colors.len() != pi.n() {
            return Err(ColoredError::Parse("color word length mismatch".into()));
        }
        for &c in &colors {
            if c >= r {
                return Err(ColoredError::ColorOutOfRange { color: c, r });
            }
        }
        Ok(ColoredPermutation { pi, colors, r })
    }

    /// Embeds a plain permutation with all colors zero.
    pub fn from_plain(pi: Permutation, r: u32) -> Self {
        let colors = vec![0; pi.n()];
        ColoredPermutation { pi, colors, r }
    }

    pub fn identity(n: usize, r: u32) -> Self {
        Self::from_plain(Permutation::identity(n), r)
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    /// `|sigma(i)|`, 1-based.
    pub fn value(&self, i: usize) -> u32 {
        self.pi.at(i)
    }

    /// Color of `sigma(i)`, 1-based.
    pub fn color(&self, i: usize) -> u32 {
        self.colors[i - 1]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Signed value view for `r = 2`.
    pub fn signed(&self, i: usize) -> i64 {
        debug_assert_eq!(self.r, 2);
        let v = self.value(i) as i64;
        if self.color(i) == 0 {
            v
        } else {
            -v
        }
    }

    pub fn parse(text: &str, r: u32) -> Result<Self, ColoredError> {
        if r == 0 {
            return Err(ColoredError::BadRadix);
        }
        let mut word = Vec::new();
        let mut colors = Vec::new();
        for tok in text.split_whitespace() {
            if let Some(rest) = tok.strip_prefix('-') {
                if r != 2 {
                    return Err(ColoredError::SignedNeedsR2(r));
                }
                let v: u32 = rest.parse().map_err(|_| ColoredError::Parse(tok.into()))?;
                word.push(v);
                colors.push(1);
            } else if let Some((vs, cs)) = tok.split_once('^') {
                let v: u32 = vs.parse().map_err(|_| ColoredError::Parse(tok.into()))?;
                let c: u32 = cs.parse().map_err(|_| ColoredError::Parse(tok.into()))?;
                word.push(v);
                colors.push(c);
            } else {
                let v: u32 = tok.parse().map_err(|_| ColoredError::Parse(tok.into()))?;
                word.push(v);
                colors.push(0);
            }
        }
        ColoredPermutation::new(Permutation::new(word)?, colors, r)
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.n())
            .map(|i| {
                let c = self.color(i);
                if c == 0 {
                    self.value(i).to_string()
                } else {
                    format!("{}^{}", self.value(i), c)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | r={}]", self, self.r)
    }
}

/// The three total orders on colored letters `(value, color)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// `1 < 1^[1] < ... < 1^[r-1] < 2 < ...`
    Friends,
    /// `1^[r-1] < ... < n^[r-1] < ... < 1^[1] < ... < n^[1] < 1 < ... < n`
    Color,
    /// `-n < ... < -1 < 1 < ... < n`, only meaningful for `r <= 2`
    Natural,
}

impl OrderKind {
    pub fn compare(&self, a: (u32, u32), b: (u32, u32)) -> Ordering {
        match self {
            OrderKind::Friends => a.0.cmp(&b.0).then(a.1.cmp(&b.1)),
            // higher colors come first; within a color class, by value
            OrderKind::Color => b.1.cmp(&a.1).then(a.0.cmp(&b.0)),
            OrderKind::Natural => {
                let sv = |(v, c): (u32, u32)| -> i64 {
                    debug_assert!(c <= 1, "natural order needs r <= 2");
                    if c == 0 {
                        v as i64
                    } else {
                        -(v as i64)
                    }
                };
                sv(a).cmp(&sv(b))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColoredStats {
    pub exc_friends: usize,
    pub fexc: usize,
    pub exca: usize,
    pub wexa: usize,
    pub wexc: usize,
    pub fixa: usize,
    pub fixc: usize,
    pub dropa: usize,
    pub dropc: usize,
    pub csum: usize,
    pub csumw: usize,
    pub csumd: usize,
}

pub fn colored_stats(s: &ColoredPermutation) -> ColoredStats {
    let n = s.n();
    let r = s.r as usize;
    let mut st = ColoredStats {
        exc_friends: 0,
        fexc: 0,
        exca: 0,
        wexa: 0,
        wexc: 0,
        fixa: 0,
        fixc: 0,
        dropa: 0,
        dropc: 0,
        csum: 0,
        csumw: 0,
        csumd: 0,
    };
    for i in 1..=n {
        let v = s.value(i) as usize;
        let c = s.color(i) as usize;
        st.csum += c;
        if c == 0 {
            // letter i (color 0) relates to sigma(i) in the friends order by
            // value first, then color
            if v > i {
                st.exc_friends += 1;
                st.exca += 1;
                st.wexa += 1;
            } else if v == i {
                st.fixa += 1;
                st.wexa += 1;
            } else {
                st.dropa += 1;
            }
            if v >= i {
                st.csumw += c;
            } else {
                st.csumd += c;
            }
        } else {
            // any positive color beats color 0 at the same value in the
            // friends order, and loses to it in the color order
            if v >= i {
                st.exc_friends += 1;
                st.wexc += 1;
                st.csumw += c;
                if v == i {
                    st.fixc += 1;
                }
            } else {
                st.dropc += 1;
                st.csumd += c;
            }
        }
    }
    st.fexc = r * st.exca + st.csum;
    st
}

/// Crossing number of a colored permutation, counted over the five clause
/// cases of the pignose-diagram definition.
pub fn cros_colored(s: &ColoredPermutation) -> usize {
    let n = s.n();
    let mut cros = 0;
    for i in 1..=n {
        let (pi_i, zi) = (s.value(i) as usize, s.color(i));
        for j in 1..=n {
            if i == j {
                continue;
            }
            let (pi_j, zj) = (s.value(j) as usize, s.color(j));
            let hit = (zi == 0 && zj == 0 && i < j && j <= pi_i && pi_i < pi_j)
                || (zi == 0 && zj == 0 && pi_i < pi_j && pi_j < i && i < j)
                || (zi > 0 && zj == 0 && j <= pi_i && pi_i < pi_j)
                || (zi > 0 && zj == 0 && pi_j < i && i < j)
                || (zi > 0 && zj > 0 && i < j && pi_j < pi_i);
            if hit {
                cros += 1;
            }
        }
    }
    cros
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BExcedanceStats {
    pub exc_b: usize,
    pub des_b: usize,
}

/// The B-excedance count (`sigma(i) < sigma(|sigma(i)|)` or `sigma(i) = -i`)
/// and the B-descent count of the word `0 sigma(1) ... sigma(n)` in the
/// natural order; both require the signed view, so `r` must be 2.
pub fn b_excedance_stats(s: &ColoredPermutation) -> Result<BExcedanceStats, ColoredError> {
    if s.r != 2 {
        return Err(ColoredError::NeedsR2(s.r));
    }
    let n = s.n();
    let mut exc_b = 0;
    for i in 1..=n {
        let si = s.signed(i);
        let abs_si = s.value(i) as usize;
        if si < s.signed(abs_si) || si == -(i as i64) {
            exc_b += 1;
        }
    }
    let mut des_b = 0;
    for i in 0..n {
        let a = if i == 0 { 0 } else { s.signed(i) };
        if a > s.signed(i + 1) {
            des_b += 1;
        }
    }
    Ok(BExcedanceStats { exc_b, des_b })
}

/// Iterator over `Z_r wr S_n`, lexicographic in the permutation word and
/// then in the color word.
pub struct ColoredIter {
    perms: crate::perm::SnIter,
    current: Option<Permutation>,
    colors: Vec<u32>,
    r: u32,
    done: bool,
}

pub fn colored_permutations(n: usize, r: u32) -> ColoredIter {
    let mut perms = permutations(n);
    let current = perms.next();
    ColoredIter { perms, current, colors: vec![0; n], r, done: false }
}

impl Iterator for ColoredIter {
    type Item = ColoredPermutation;
    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.done {
            return None;
        }
        let pi = self.current.as_ref()?.clone();
        let item = ColoredPermutation { pi, colors: self.colors.clone(), r: self.r };
        // advance colors as a base-r counter, then the permutation
        let mut k = self.colors.len();
        loop {
            if k == 0 {
                match self.perms.next() {
                    Some(next) => {
                        self.current = Some(next);
                        self.colors.iter_mut().for_each(|c| *c = 0);
                    }
                    None => self.done = true,
                }
                break;
            }
            k -= 1;
            self.colors[k] += 1;
            if self.colors[k] < self.r {
                break;
            }
            self.colors[k] = 0;
        }
        Some(item)
    }
}

/// Cardinality `n! * r^n`.
pub fn wreath_order(n: usize, r: u32) -> u64 {
    crate::perm::factorial(n) * (r as u64).pow(n as u32)
}

/// No letter `i` with `pi(i) = i` and color 0.
pub fn is_derangement(s: &ColoredPermutation) -> bool {
    (1..=s.n()).all(|i| !(s.value(i) as usize == i && s.color(i) == 0))
}

pub fn derangements_r(n: usize, r: u32) -> impl Iterator<Item = ColoredPermutation> {
    colored_permutations(n, r).filter(is_derangement)
}

/// Distribution polynomials of `fexc` and of the friends-order excedance
/// number over the derangements of `Z_r wr S_n`, in that order.
pub fn derangement_polys(n: usize, r: u32) -> (IntPoly, IntPoly) {
    let mut fexc_counts = vec![0u64; r as usize * n + 1];
    let mut exc_counts = vec![0u64; n + 1];
    for s in derangements_r(n, r) {
        let st = colored_stats(&s);
        fexc_counts[st.fexc] += 1;
        exc_counts[st.exc_friends] += 1;
    }
    (counts_to_poly(&fexc_counts), counts_to_poly(&exc_counts))
}

/// `D_n^(r)(t)`: distribution of `fexc` over colored derangements.
pub fn big_d_poly(n: usize, r: u32) -> IntPoly {
    derangement_polys(n, r).0
}

/// `d_n^(r)(t)`: distribution of friends-order excedances over colored
/// derangements.
pub fn small_d_poly(n: usize, r: u32) -> IntPoly {
    derangement_polys(n, r).1
}

pub(crate) fn counts_to_poly(counts: &[u64]) -> IntPoly {
    IntPoly::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{crossing_stats, linear_stats};
    use crate::poly::IntPoly;

    fn worked_sigma() -> ColoredPermutation {
        ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3).unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        let s = worked_sigma();
        assert_eq!(s.to_string(), "4 7^1 2 5^1 1^2 6 3");
        let signed = ColoredPermutation::parse("4 -7 2 -5 1 6 3", 2).unwrap();
        assert_eq!(signed.to_string(), "4 7^1 2 5^1 1 6 3");
        assert!(ColoredPermutation::parse("1 -2", 3).is_err());
        assert!(ColoredPermutation::parse("1 2^5", 3).is_err());
    }

    #[test]
    fn worked_example_statistics() {
        let st = colored_stats(&worked_sigma());
        assert_eq!(st.fixa, 1);
        assert_eq!(st.wexa, 2);
        assert_eq!(st.dropa, 2);
        assert_eq!(st.fixc, 0);
        assert_eq!(st.wexc, 2);
        assert_eq!(st.dropc, 1);
        assert_eq!(st.csumw, 2);
        assert_eq!(st.csumd, 2);
    }

    #[test]
    fn worked_example_crossings() {
        assert_eq!(cros_colored(&worked_sigma()), 6);
    }

    #[test]
    fn r1_embedding_matches_plain_crossings() {
        let plain: crate::perm::Permutation = "9 3 7 4 6 10 5 8 1 2".parse().unwrap();
        let embedded = ColoredPermutation::from_plain(plain.clone(), 1);
        assert_eq!(cros_colored(&embedded), crossing_stats(&plain).cros);
        for n in 0..=6 {
            for pi in permutations(n) {
                let e = ColoredPermutation::from_plain(pi.clone(), 1);
                assert_eq!(cros_colored(&e), crossing_stats(&pi).cros);
            }
        }
    }

    #[test]
    fn all_zero_colors_reduce_to_type_a() {
        for pi in permutations(4) {
            let e = ColoredPermutation::from_plain(pi.clone(), 3);
            let st = colored_stats(&e);
            assert_eq!(st.fexc, 3 * linear_stats(&pi).exc);
            assert_eq!(st.csum, 0);
        }
    }

    #[test]
    fn identity_top_colors() {
        let n = 4;
        let s = ColoredPermutation::new(Permutation::identity(n), vec![2; n], 3).unwrap();
        let st = colored_stats(&s);
        assert_eq!(st.fixc, n);
        assert_eq!(st.fixa, 0);
        assert_eq!(st.csum, n * 2);
    }

    #[test]
    fn stat_decompositions() {
        for r in 1..=4u32 {
            for n in 0..=4usize {
                for s in colored_permutations(n, r) {
                    let st = colored_stats(&s);
                    assert_eq!(st.exc_friends, st.wexa - st.fixa + st.wexc);
                    assert_eq!(st.fexc, r as usize * (st.wexa - st.fixa) + st.csum);
                    assert_eq!(st.csum, st.csumw + st.csumd);
                    assert_eq!(st.dropa + st.dropc + st.wexa + st.wexc, n);
                }
            }
        }
    }

    #[test]
    fn b1_excedance_clause() {
        let neg1 = ColoredPermutation::parse("-1", 2).unwrap();
        assert_eq!(b_excedance_stats(&neg1).unwrap().exc_b, 1);
        let id = ColoredPermutation::identity(3, 2);
        assert_eq!(b_excedance_stats(&id).unwrap().exc_b, 0);
        assert!(b_excedance_stats(&ColoredPermutation::identity(2, 3)).is_err());
    }

    #[test]
    fn bn_equidistribution() {
        for n in 0..=6usize {
            let mut exc = vec![0u64; n + 1];
            let mut exc_b = vec![0u64; n + 1];
            let mut des_b = vec![0u64; n + 1];
            for s in colored_permutations(n, 2) {
                exc[colored_stats(&s).exc_friends] += 1;
                let b = b_excedance_stats(&s).unwrap();
                exc_b[b.exc_b] += 1;
                des_b[b.des_b] += 1;
            }
            assert_eq!(exc, exc_b, "exc vs exc_B at n={n}");
            assert_eq!(exc, des_b, "exc vs des_B at n={n}");
        }
    }

    #[test]
    fn derangement_counts_and_polys() {
        assert_eq!(derangements_r(1, 2).count(), 1);
        assert_eq!(derangements_r(2, 2).count(), 5);
        let classical = [1usize, 0, 1, 2, 9];
        for n in 0..=4 {
            assert_eq!(derangements_r(n, 1).count(), classical[n]);
        }

        assert_eq!(big_d_poly(0, 2), IntPoly::one());
        assert_eq!(big_d_poly(1, 2), IntPoly::from_i64_coeffs(&[0, 1]));
        assert_eq!(big_d_poly(2, 2), IntPoly::from_i64_coeffs(&[0, 1, 3, 1]));
        assert_eq!(big_d_poly(3, 2), IntPoly::from_i64_coeffs(&[0, 1, 7, 13, 7, 1]));
        assert_eq!(small_d_poly(4, 2), IntPoly::from_i64_coeffs(&[0, 16, 144, 72, 1]));
        assert_eq!(small_d_poly(2, 1), IntPoly::from_i64_coeffs(&[0, 1]));
        assert_eq!(big_d_poly(2, 1), IntPoly::from_i64_coeffs(&[0, 1]));
    }

    #[test]
    fn enumeration_count_and_determinism() {
        for (n, r) in [(3usize, 2u32), (2, 3), (4, 1)] {
            let all: Vec<ColoredPermutation> = colored_permutations(n, r).collect();
            assert_eq!(all.len() as u64, wreath_order(n, r));
            let mut unique = all.clone();
            unique.dedup();
            assert_eq!(unique.len(), all.len());
        }
    }

    #[test]
    fn order_kinds() {
        // friends: 1 < 1^[1] < 2
        assert_eq!(OrderKind::Friends.compare((1, 0), (1, 1)), Ordering::Less);
        assert_eq!(OrderKind::Friends.compare((1, 1), (2, 0)), Ordering::Less);
        // color: 1^[2] < 1^[1] < 2^[1] < 1
        assert_eq!(OrderKind::Color.compare((1, 2), (1, 1)), Ordering::Less);
        assert_eq!(OrderKind::Color.compare((2, 1), (1, 0)), Ordering::Less);
        // natural: -2 < -1 < 1
        assert_eq!(OrderKind::Natural.compare((2, 1), (1, 1)), Ordering::Less);
        assert_eq!(OrderKind::Natural.compare((1, 1), (1, 0)), Ordering::Less);
    }
}
