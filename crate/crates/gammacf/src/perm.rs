//! Permutations of `[n]` in one-line notation and their statistics.
//!
//! Values are 1-based throughout, matching the text format
//! `"9 3 7 4 6 10 5 8 1 2"`. The empty permutation (`n = 0`) is valid and
//! has every statistic equal to zero.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PermError {
    #[error("word is not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("cannot parse permutation entry {0:?}")]
    Parse(String),
}

/// A permutation of `{1..n}` as the word `sigma(1) ... sigma(n)`.
///
/// ```
/// use gammacf::perm::{linear_stats, Permutation};
///
/// let sigma: Permutation = "9 3 7 4 6 10 5 8 1 2".parse().unwrap();
/// let stats = linear_stats(&sigma);
/// assert_eq!((stats.drop, stats.fix, stats.inv), (3, 2, 28));
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[(v - 1) as usize] {
                return Err(PermError::NotBijection(n));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[(v - 1) as usize] = (i + 1) as u32;
        }
        Permutation { word: inv }
    }

    /// Position of value `v`, 1-based.
    pub fn position_of(&self, v: u32) -> usize {
        self.word.iter().position(|&w| w == v).expect("value in range") + 1
    }

    /// Advances to the lexicographic successor; `false` at the last word.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.word;
        let n = w.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] >= w[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while w[j] <= w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }

    /// The `rank`-th word of `S_n` in lexicographic order (factorial base).
    pub fn unrank(n: usize, mut rank: u64) -> Permutation {
        let mut avail: Vec<u32> = (1..=n as u32).collect();
        let mut fact = vec![1u64; n.max(1)];
        for i in 1..n {
            fact[i] = fact[i - 1] * i as u64;
        }
        let mut word = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = fact[i];
            let idx = (rank / f) as usize;
            rank %= f;
            word.push(avail.remove(idx));
        }
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, PermError> {
        let mut word = Vec::new();
        for tok in s.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| PermError::Parse(tok.to_string()))?;
            word.push(v);
        }
        Permutation::new(word)
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct SnIter {
    next: Option<Permutation>,
}

pub fn permutations(n: usize) -> SnIter {
    SnIter { next: Some(Permutation::identity(n)) }
}

impl Iterator for SnIter {
    type Item = Permutation;
    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearStats {
    pub des: usize,
    pub maj: usize,
    pub inv: usize,
    pub exc: usize,
    pub drop: usize,
    pub fix: usize,
    pub wex: usize,
}

pub fn linear_stats(p: &Permutation) -> LinearStats {
    let n = p.n();
    let mut s = LinearStats { des: 0, maj: 0, inv: 0, exc: 0, drop: 0, fix: 0, wex: 0 };
    for i in 1..=n {
        let v = p.at(i);
        if i < n && v > p.at(i + 1) {
            s.des += 1;
            s.maj += i;
        }
        match (v as usize).cmp(&i) {
            std::cmp::Ordering::Greater => s.exc += 1,
            std::cmp::Ordering::Less => s.drop += 1,
            std::cmp::Ordering::Equal => s.fix += 1,
        }
        for j in i + 1..=n {
            if v > p.at(j) {
                s.inv += 1;
            }
        }
    }
    s.wex = s.exc + s.fix;
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingStats {
    pub cros: usize,
    pub nest: usize,
}

/// Crossings and nestings of the arc diagram: ordered pairs `(i,j)` with
/// `i<j<=s(i)<s(j)` or `i>j>s(i)>s(j)` cross, and with `i<j<=s(j)<s(i)` or
/// `i>j>s(j)>s(i)` nest.
pub fn crossing_stats(p: &Permutation) -> CrossingStats {
    let n = p.n();
    let mut cros = 0;
    let mut nest = 0;
    for i in 1..=n {
        let si = p.at(i) as usize;
        for j in 1..=n {
            if i == j {
                continue;
            }
            let sj = p.at(j) as usize;
            if (i < j && j <= si && si < sj) || (i > j && j > si && si > sj) {
                cros += 1;
            }
            if (i < j && j <= sj && sj < si) || (i > j && j > sj && sj > si) {
                nest += 1;
            }
        }
    }
    CrossingStats { cros, nest }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyclicStats {
    pub cpeak: usize,
    pub cvalley: usize,
    pub cda: usize,
    pub cdd: usize,
    pub fix: usize,
}

/// Classifies every value `x` by the positions of `s^{-1}(x)` and `s(x)`:
/// cyclic peak, cyclic valley, double excedance (`cda`), double drop
/// (`cdd`), or fixed point.
pub fn cyclic_stats(p: &Permutation) -> CyclicStats {
    let inv = p.inverse();
    let mut s = CyclicStats { cpeak: 0, cvalley: 0, cda: 0, cdd: 0, fix: 0 };
    for x in 1..=p.n() {
        let i = inv.at(x) as usize;
        let y = p.at(x) as usize;
        if x == y {
            s.fix += 1;
        } else if i < x && x > y {
            s.cpeak += 1;
        } else if i > x && x < y {
            s.cvalley += 1;
        } else if i < x && x < y {
            s.cda += 1;
        } else {
            s.cdd += 1;
        }
    }
    s
}

/// Boundary padding used when classifying word entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryConvention {
    /// `s(0) = s(n+1) = 0`
    PadZeroZero,
    /// `s(0) = 0`, `s(n+1) = n+1`
    PadZeroNp1,
    /// only `s(n+1) = 0`, scanning `1 < i <= n`
    PadRightZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryStats {
    pub peak: usize,
    pub valley: usize,
    pub da: usize,
    pub dd: usize,
}

pub fn boundary_stats(p: &Permutation, conv: BoundaryConvention) -> BoundaryStats {
    let n = p.n();
    let mut s = BoundaryStats { peak: 0, valley: 0, da: 0, dd: 0 };
    let get = |i: usize| -> i64 {
        if i == 0 {
            return 0;
        }
        if i == n + 1 {
            return match conv {
                BoundaryConvention::PadZeroZero | BoundaryConvention::PadRightZero => 0,
                BoundaryConvention::PadZeroNp1 => (n + 1) as i64,
            };
        }
        p.at(i) as i64
    };
    let start = match conv {
        BoundaryConvention::PadRightZero => 2,
        _ => 1,
    };
    for i in start..=n {
        let (a, b, c) = (get(i - 1), get(i), get(i + 1));
        if a < b && b > c {
            s.peak += 1;
        } else if a > b && b < c {
            s.valley += 1;
        } else if a < b && b < c {
            s.da += 1;
        } else {
            s.dd += 1;
        }
    }
    s
}

/// Number of double descents in the word `s(1)...s(n)0`.
pub fn dd_sigma0(p: &Permutation) -> usize {
    boundary_stats(p, BoundaryConvention::PadRightZero).dd
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PatternStats {
    pub res: usize,
    pub res2: usize,
    pub les: usize,
    pub les2: usize,
}

/// `res`: pairs `(i,j)`, `1<=i<j<=n-1`, with `s(j+1)>s(i)>s(j)`; `res2` the
/// mirrored inequality. `les`: pairs `(i,j)`, `2<=i<j<=n`, with
/// `s(i-1)>s(j)>s(i)`; `les2` mirrored.
pub fn pattern_stats(p: &Permutation) -> PatternStats {
    let n = p.n();
    let mut s = PatternStats { res: 0, res2: 0, les: 0, les2: 0 };
    for i in 1..=n.saturating_sub(2) {
        for j in i + 1..=n - 1 {
            let (si, sj, sj1) = (p.at(i), p.at(j), p.at(j + 1));
            if sj1 > si && si > sj {
                s.res += 1;
            }
            if sj1 < si && si < sj {
                s.res2 += 1;
            }
        }
    }
    for i in 2..=n {
        for j in i + 1..=n {
            let (si1, si, sj) = (p.at(i - 1), p.at(i), p.at(j));
            if si1 > sj && sj > si {
                s.les += 1;
            }
            if si1 < sj && sj < si {
                s.les2 += 1;
            }
        }
    }
    s
}

/// Number of foremaxima: double ascents (under `PadZeroNp1`) that are also
/// left-to-right maxima.
pub fn fmax(p: &Permutation) -> usize {
    let n = p.n();
    let mut count = 0;
    let mut running_max = 0u32;
    for i in 1..=n {
        let prev = if i == 1 { 0 } else { p.at(i - 1) };
        let next = if i == n { (n + 1) as u32 } else { p.at(i + 1) };
        let v = p.at(i);
        if prev < v && v < next && v > running_max {
            count += 1;
        }
        running_max = running_max.max(v);
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VincularCounts {
    pub p132: usize,
    pub p231: usize,
}

/// Occurrences of the vincular patterns 13-2 (indices `(i,i+1,j)`, `i+1<j`,
/// `s(i)<s(j)<s(i+1)`) and 2-31 (indices `(i,j,j+1)`, `i<j`,
/// `s(j+1)<s(i)<s(j)`).
pub fn vincular_counts(p: &Permutation) -> VincularCounts {
    let n = p.n();
    let mut s = VincularCounts { p132: 0, p231: 0 };
    for i in 1..n {
        for j in i + 2..=n {
            if p.at(i) < p.at(j) && p.at(j) < p.at(i + 1) {
                s.p132 += 1;
            }
        }
    }
    for j in 2..n {
        for i in 1..j {
            if p.at(j + 1) < p.at(i) && p.at(i) < p.at(j) {
                s.p231 += 1;
            }
        }
    }
    s
}

/// `DD_{n,k}`: permutations with `des = k` and no double descent in the word
/// `s(1)...s(n)0`.
pub fn class_dd(n: usize, k: usize) -> Vec<Permutation> {
    permutations(n)
        .filter(|p| linear_stats(p).des == k && dd_sigma0(p) == 0)
        .collect()
}

/// `DE_{n,k}`: derangements with `exc = k` and no double excedance.
pub fn class_de(n: usize, k: usize) -> Vec<Permutation> {
    permutations(n)
        .filter(|p| {
            let ls = linear_stats(p);
            ls.fix == 0 && ls.exc == k && cyclic_stats(p).cda == 0
        })
        .collect()
}

/// `S_{n,k,j}`: permutations with `cvalley = k`, `fix = j`, `cda = 0`.
pub fn class_snkj(n: usize, k: usize, j: usize) -> Vec<Permutation> {
    permutations(n)
        .filter(|p| {
            let cs = cyclic_stats(p);
            cs.cvalley == k && cs.fix == j && cs.cda == 0
        })
        .collect()
}

/// Coderangements: permutations with no foremaximum.
pub fn class_coderangements(n: usize) -> Vec<Permutation> {
    permutations(n).filter(|p| fmax(p) == 0).collect()
}

/// Derangements: permutations with no fixed point.
pub fn class_derangements(n: usize) -> Vec<Permutation> {
    permutations(n).filter(|p| linear_stats(p).fix == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn digits(s: &str) -> Permutation {
        Permutation::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect()).unwrap()
    }

    #[test]
    fn identity_stats() {
        let id = Permutation::identity(4);
        let ls = linear_stats(&id);
        assert_eq!((ls.des, ls.inv, ls.exc, ls.drop, ls.fix), (0, 0, 0, 0, 4));
        let cs = cyclic_stats(&id);
        assert_eq!((cs.fix, cs.cpeak + cs.cvalley + cs.cda + cs.cdd), (4, 0));
        let ps = pattern_stats(&id);
        assert_eq!((ps.res, ps.res2, ps.les, ps.les2), (0, 0, 0, 0));
        assert_eq!(vincular_counts(&id), VincularCounts { p132: 0, p231: 0 });
        assert_eq!(fmax(&Permutation::identity(5)), 5);
    }

    #[test]
    fn worked_example_drop_fix_cros_nest() {
        let sigma = p("9 3 7 4 6 10 5 8 1 2");
        let ls = linear_stats(&sigma);
        assert_eq!((ls.drop, ls.fix), (3, 2));
        let cs = crossing_stats(&sigma);
        assert_eq!((cs.cros, cs.nest), (5, 10));
    }

    #[test]
    fn small_crossings() {
        assert_eq!(crossing_stats(&p("2 1")), CrossingStats { cros: 0, nest: 0 });
        // brute-force oracle for 3 1 2: scan all ordered pairs by hand
        let s312 = p("3 1 2");
        let cs = crossing_stats(&s312);
        let mut cros = 0;
        let mut nest = 0;
        for i in 1..=3usize {
            for j in 1..=3usize {
                if i == j {
                    continue;
                }
                let (si, sj) = (s312.at(i) as usize, s312.at(j) as usize);
                if (i < j && j <= si && si < sj) || (i > j && j > si && si > sj) {
                    cros += 1;
                }
                if (i < j && j <= sj && sj < si) || (i > j && j > sj && sj > si) {
                    nest += 1;
                }
            }
        }
        assert_eq!((cs.cros, cs.nest), (cros, nest));
    }

    #[test]
    fn cyclic_two_cycles() {
        let cs = cyclic_stats(&p("2 1 4 3"));
        assert_eq!((cs.cvalley, cs.cpeak, cs.cda, cs.cdd, cs.fix), (2, 2, 0, 0, 0));
    }

    #[test]
    fn cyclic_partition_and_balance() {
        for sigma in permutations(6) {
            let cs = cyclic_stats(&sigma);
            assert_eq!(cs.cpeak + cs.cvalley + cs.cda + cs.cdd + cs.fix, 6);
            assert_eq!(cs.cpeak, cs.cvalley);
        }
    }

    #[test]
    fn boundary_conventions() {
        for n in 1..=6 {
            for sigma in permutations(n) {
                let zz = boundary_stats(&sigma, BoundaryConvention::PadZeroZero);
                assert_eq!(zz.peak, zz.valley + 1);
                let zn = boundary_stats(&sigma, BoundaryConvention::PadZeroNp1);
                assert_eq!(zn.peak, zn.valley);
            }
        }
        assert_eq!(dd_sigma0(&p("1 2 3 4")), 0);
        let s2134 = p("2 1 3 4");
        assert_eq!(dd_sigma0(&s2134), 0);
        assert_eq!(linear_stats(&s2134).des, 1);
    }

    #[test]
    fn fmax_examples() {
        assert_eq!(fmax(&p("4 2 1 5 7 3 6 8")), 2);
        // decreasing words have no double ascent at all
        for n in 2..=6 {
            let mut w: Vec<u32> = (1..=n as u32).collect();
            w.reverse();
            assert_eq!(fmax(&Permutation::new(w).unwrap()), 0);
        }
    }

    #[test]
    fn dd41_roster() {
        let got = class_dd(4, 1);
        let want: Vec<Permutation> = ["1324", "1423", "2314", "2413", "3412", "2134", "3124", "4123"]
            .iter()
            .map(|s| digits(s))
            .collect();
        let mut want_sorted = want.clone();
        want_sorted.sort();
        assert_eq!(got, want_sorted);
    }

    #[test]
    fn dd41_pattern_values() {
        // (res, les) per member, worked out by scanning the pair
        // definitions by hand; the q^(2 res + les) sum is q^4+2q^3+3q^2+2q
        let want = [
            ("1324", 1, 0),
            ("1423", 0, 1),
            ("2134", 1, 0),
            ("2314", 2, 0),
            ("2413", 1, 1),
            ("3124", 1, 1),
            ("3412", 0, 1),
            ("4123", 0, 2),
        ];
        for (word, res, les) in want {
            let ps = pattern_stats(&digits(word));
            assert_eq!((ps.res, ps.les), (res, les), "at {word}");
        }
        let mut dist = [0u64; 5];
        for (_, res, les) in want {
            dist[2 * res + les] += 1;
        }
        assert_eq!(dist, [0, 2, 3, 2, 1]);
    }

    #[test]
    fn de_rosters() {
        assert_eq!(class_de(4, 1), vec![digits("4123")]);
        let got = class_de(4, 2);
        let mut want: Vec<Permutation> =
            ["2143", "3412", "4321", "4312", "3421"].iter().map(|s| digits(s)).collect();
        want.sort();
        assert_eq!(got, want);
        for sigma in &got {
            let cs = cyclic_stats(sigma);
            assert_eq!((cs.cda, cs.cvalley), (0, 2));
        }
    }

    #[test]
    fn coderangement_roster() {
        let got = class_coderangements(4);
        let want: Vec<Permutation> =
            ["2143", "3142", "3241", "4123", "4132", "4213", "4231", "4312", "4321"]
                .iter()
                .map(|s| digits(s))
                .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn derangement_counts() {
        let want = [1usize, 0, 1, 2, 9];
        for n in 0..=4 {
            assert_eq!(class_derangements(n).len(), want[n]);
        }
    }

    #[test]
    fn eulerian_distribution_s4() {
        let mut counts = [0u64; 4];
        for sigma in permutations(4) {
            counts[linear_stats(&sigma).des] += 1;
        }
        assert_eq!(counts, [1, 11, 11, 1]);
    }

    #[test]
    fn vincular_231_triple() {
        assert_eq!(vincular_counts(&p("2 3 1")), VincularCounts { p132: 0, p231: 1 });
    }

    #[test]
    fn inv_and_inverse_relations() {
        for sigma in permutations(6) {
            let inv_sigma = sigma.inverse();
            assert_eq!(linear_stats(&sigma).inv, linear_stats(&inv_sigma).inv);
            assert_eq!(linear_stats(&inv_sigma).exc, linear_stats(&sigma).drop);
        }
    }

    #[test]
    fn inv_decomposes_into_drop_cros_nest() {
        for n in 0..=7 {
            for sigma in permutations(n) {
                let ls = linear_stats(&sigma);
                let cs = crossing_stats(&sigma);
                assert_eq!(ls.inv, ls.drop + cs.cros + 2 * cs.nest, "failed at {sigma}");
            }
        }
    }

    #[test]
    fn vincular_distribution_matches_cyclic_triple() {
        for n in 0..=6 {
            let mut lhs: HashMap<(usize, usize, usize), u64> = HashMap::new();
            let mut rhs: HashMap<(usize, usize, usize), u64> = HashMap::new();
            for sigma in permutations(n) {
                let vc = vincular_counts(&sigma);
                let des = linear_stats(&sigma).des;
                *lhs.entry((vc.p132, vc.p231, des)).or_default() += 1;
                let cs = crossing_stats(&sigma);
                let drop = linear_stats(&sigma).drop;
                *rhs.entry((cs.nest, cs.cros, drop)).or_default() += 1;
            }
            assert_eq!(lhs, rhs, "vincular/cyclic mismatch at n={n}");
        }
    }

    #[test]
    fn lex_iteration_and_unrank_agree() {
        let all: Vec<Permutation> = permutations(5).collect();
        assert_eq!(all.len(), 120);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for (r, sigma) in all.iter().enumerate() {
            assert_eq!(&Permutation::unrank(5, r as u64), sigma);
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let text = "9 3 7 4 6 10 5 8 1 2";
        assert_eq!(p(text).to_string(), text);
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
    }
}
