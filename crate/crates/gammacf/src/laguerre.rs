//! Motzkin paths, r-colored Laguerre histories, the incremental
//! pignose-diagram bijection with colored permutations, and the
//! nine-parameter step weights.
//!
//! A history pairs a Motzkin path with per-step integer labels `(p_k, q_k)`
//! whose admissible ranges depend on the step direction and height:
//! north-east steps take `(p,q)` in `[-(r-1),0]^2`, east steps in
//! `[1,h]x[-(r-1),0]` or `[-(r-1),0]x[1,h+1]`, south-east steps in
//! `[1,h]^2`. Histories of length `n` are counted by `n! r^n`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colored::ColoredPermutation;
use crate::perm::Permutation;
use crate::poly::{MPoly, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    NE,
    E,
    SE,
}

impl Step {
    fn delta(self) -> i32 {
        match self {
            Step::NE => 1,
            Step::E => 0,
            Step::SE => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

#[derive(Debug, Error, PartialEq)]
pub enum HistoryError {
    #[error("path dips below zero at step {0}")]
    NegativeHeight(usize),
    #[error("path ends at height {0}, not 0")]
    OpenPath(i32),
    #[error("label count {labels} does not match path length {steps}")]
    LengthMismatch { labels: usize, steps: usize },
    #[error("step {step} ({kind:?} at height {height}): label ({p},{q}) out of range")]
    LabelOutOfRange { step: usize, kind: Step, height: i32, p: i32, q: i32 },
    #[error("radix must be at least 1")]
    BadRadix,
    #[error("cannot parse history JSON: {0}")]
    Json(String),
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, HistoryError> {
        let mut h = 0i32;
        for (k, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(HistoryError::NegativeHeight(k + 1));
            }
        }
        if h != 0 {
            return Err(HistoryError::OpenPath(h));
        }
        Ok(MotzkinPath { steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Height of each step: the ordinate of its starting point.
    pub fn step_heights(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut h = 0;
        for s in &self.steps {
            out.push(h);
            h += s.delta();
        }
        out
    }
}

/// Motzkin path plus per-step labels plus the color radix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerreHistory {
    pub path: MotzkinPath,
    pub labels: Vec<(i32, i32)>,
    pub r: u32,
}

#[derive(Serialize, Deserialize)]
struct HistoryJson {
    steps: Vec<Step>,
    labels: Vec<(i32, i32)>,
    r: u32,
}

impl LaguerreHistory {
    pub fn new(path: MotzkinPath, labels: Vec<(i32, i32)>, r: u32) -> Result<Self, HistoryError> {
        let h = LaguerreHistory { path, labels, r };
        h.validate()?;
        Ok(h)
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// Checks the label ranges clause by clause; the error names the first
    /// violating step.
    pub fn validate(&self) -> Result<(), HistoryError> {
        if self.r == 0 {
            return Err(HistoryError::BadRadix);
        }
        if self.labels.len() != self.path.len() {
            return Err(HistoryError::LengthMismatch {
                labels: self.labels.len(),
                steps: self.path.len(),
            });
        }
        let lo = -(self.r as i32 - 1);
        for (k, (&step, &(p, q))) in self.path.steps().iter().zip(&self.labels).enumerate() {
            let h = self.path.step_heights()[k];
            let ok = match step {
                Step::NE => (lo..=0).contains(&p) && (lo..=0).contains(&q),
                Step::E => {
                    ((1..=h).contains(&p) && (lo..=0).contains(&q))
                        || ((lo..=0).contains(&p) && (1..=h + 1).contains(&q))
                }
                Step::SE => (1..=h).contains(&p) && (1..=h).contains(&q),
            };
            if !ok {
                return Err(HistoryError::LabelOutOfRange { step: k + 1, kind: step, height: h, p, q });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&HistoryJson {
            steps: self.path.steps().to_vec(),
            labels: self.labels.clone(),
            r: self.r,
        })
        .expect("history serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, HistoryError> {
        let raw: HistoryJson =
            serde_json::from_str(text).map_err(|e| HistoryError::Json(e.to_string()))?;
        let path = MotzkinPath::new(raw.steps)?;
        LaguerreHistory::new(path, raw.labels, raw.r)
    }
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.path.steps().iter().map(|s| format!("{s:?}")).collect();
        let labels: Vec<String> = self.labels.iter().map(|(p, q)| format!("({p},{q})")).collect();
        write!(f, "{} | {}", steps.join(" "), labels.join(" "))
    }
}

/// All valid histories of length `n` over radix `r`, in a fixed
/// deterministic order (steps tried NE, E, SE; labels ascending).
pub fn enumerate_histories(n: usize, r: u32) -> Vec<LaguerreHistory> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    fn rec(
        n: usize,
        r: u32,
        h: i32,
        steps: &mut Vec<Step>,
        labels: &mut Vec<(i32, i32)>,
        out: &mut Vec<LaguerreHistory>,
    ) {
        if steps.len() == n {
            if h == 0 {
                let path = MotzkinPath { steps: steps.clone() };
                out.push(LaguerreHistory { path, labels: labels.clone(), r });
            }
            return;
        }
        let remaining = (n - steps.len()) as i32;
        let lo = -(r as i32 - 1);
        // NE
        if h < remaining - 1 {
            for p in lo..=0 {
                for q in lo..=0 {
                    steps.push(Step::NE);
                    labels.push((p, q));
                    rec(n, r, h + 1, steps, labels, out);
                    steps.pop();
                    labels.pop();
                }
            }
        }
        // E
        if h < remaining {
            for p in 1..=h {
                for q in lo..=0 {
                    steps.push(Step::E);
                    labels.push((p, q));
                    rec(n, r, h, steps, labels, out);
                    steps.pop();
                    labels.pop();
                }
            }
            for p in lo..=0 {
                for q in 1..=h + 1 {
                    steps.push(Step::E);
                    labels.push((p, q));
                    rec(n, r, h, steps, labels, out);
                    steps.pop();
                    labels.pop();
                }
            }
        }
        // SE
        if h >= 1 && h - 1 < remaining {
            for p in 1..=h {
                for q in 1..=h {
                    steps.push(Step::SE);
                    labels.push((p, q));
                    rec(n, r, h - 1, steps, labels, out);
                    steps.pop();
                    labels.pop();
                }
            }
        }
    }
    rec(n, r, 0, &mut steps, &mut labels, &mut out);
    out
}

/// Number of valid histories of length `n` over radix `r`, by the same
/// recursion as [`enumerate_histories`] without materializing them.
pub fn count_histories(n: usize, r: u32) -> u64 {
    fn rec(remaining: usize, h: i64, r: u64) -> u64 {
        if remaining == 0 {
            return u64::from(h == 0);
        }
        let rem = remaining as i64;
        let mut total = 0;
        if h < rem - 1 {
            total += r * r * rec(remaining - 1, h + 1, r);
        }
        if h < rem {
            let labels = h as u64 * r + r * (h as u64 + 1);
            total += labels * rec(remaining - 1, h, r);
        }
        if h >= 1 && h - 1 < rem {
            total += (h as u64) * (h as u64) * rec(remaining - 1, h - 1, r);
        }
        total
    }
    rec(n, 0, r as u64)
}

/// The generalized Foata-Zeilberger map: builds the history of a colored
/// permutation by closing pignose half-arcs left to right.
///
/// At step `k` the left vertex of pignose `k` contributes `p_k` (positive
/// for drops, `0` for color-0 weak excedances, `-z_k` for colored ones) and
/// the right vertex of pignose `k` contributes `q_k` via the position
/// mapping to value `k`. Positive labels are 1 plus the number of new
/// crossing points the closing arc makes.
///
/// ```
/// use gammacf::colored::ColoredPermutation;
/// use gammacf::laguerre::{phi, phi_inverse};
///
/// let sigma = ColoredPermutation::parse("4 7^1 2 5^1 1^2 6 3", 3).unwrap();
/// let history = phi(&sigma);
/// assert_eq!(history.labels[4], (2, 2));
/// assert_eq!(phi_inverse(&history).unwrap(), sigma);
/// ```
pub fn phi(s: &ColoredPermutation) -> LaguerreHistory {
    let n = s.n();
    let pos_of = |v: usize| -> usize { s.pi().position_of(v as u32) };
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for k in 1..=n {
        let (pi_k, z_k) = (s.value(k) as usize, s.color(k));
        let p = if pi_k < k {
            let mut count = 0usize;
            for j in k + 1..=n {
                let (pi_j, z_j) = (s.value(j) as usize, s.color(j));
                let hit = (z_k == 0 && z_j == 0 && pi_k < pi_j && pi_j < k)
                    || (z_k > 0 && z_j == 0 && pi_j < k)
                    || (z_k > 0 && z_j > 0 && pi_j < pi_k);
                if hit {
                    count += 1;
                }
            }
            (count + 1) as i32
        } else if z_k == 0 {
            0
        } else {
            -(z_k as i32)
        };

        let l = pos_of(k);
        let z_l = s.color(l);
        let q = if l <= k {
            let mut count = 0usize;
            if z_l == 0 {
                for j in l + 1..=k {
                    if s.color(j) == 0 && s.value(j) as usize > k {
                        count += 1;
                    }
                }
            } else {
                for j in 1..=k {
                    if s.color(j) == 0 && s.value(j) as usize > k {
                        count += 1;
                    }
                }
                for i in 1..l {
                    if s.color(i) > 0 && s.value(i) as usize > k {
                        count += 1;
                    }
                }
            }
            (count + 1) as i32
        } else if z_l == 0 {
            0
        } else {
            -(z_l as i32)
        };

        let step = match (p > 0, q > 0) {
            (true, true) => Step::SE,
            (true, false) | (false, true) => Step::E,
            (false, false) => Step::NE,
        };
        steps.push(step);
        labels.push((p, q));
    }
    let path = MotzkinPath::new(steps).expect("construction closes all arcs");
    LaguerreHistory { path, labels, r: s.r() }
}

#[derive(Debug, Error, PartialEq)]
pub enum InvertError {
    #[error(transparent)]
    Invalid(#[from] HistoryError),
    #[error("label selection out of range at step {0}")]
    Selection(usize),
}

/// Inverse of [`phi`]: replays the partial-pignose state machine.
///
/// Open positions (awaiting a value) and open values (awaiting a position)
/// are kept in increasing order with their colors; each positive label
/// picks the unique entry with the matching count of open color-0 entries
/// after it, or of colored entries before it.
pub fn phi_inverse(hist: &LaguerreHistory) -> Result<ColoredPermutation, InvertError> {
    hist.validate()?;
    let n = hist.len();
    let r = hist.r;
    let mut word = vec![0u32; n];
    let mut colors = vec![0u32; n];
    // (index, color): positions waiting for their value / values waiting
    // for their position, both in increasing index order
    let mut open_pos: Vec<(usize, u32)> = Vec::new();
    let mut open_val: Vec<(usize, u32)> = Vec::new();

    fn select(entries: &[(usize, u32)], m: usize, k: usize) -> Result<usize, InvertError> {
        // zero-colored entries are addressed by the count of zero-colored
        // entries after them, colored entries by the count of colored
        // entries before them, shifted past all zero-colored ones
        let zeros: Vec<usize> =
            entries.iter().enumerate().filter(|(_, e)| e.1 == 0).map(|(i, _)| i).collect();
        let colored: Vec<usize> =
            entries.iter().enumerate().filter(|(_, e)| e.1 > 0).map(|(i, _)| i).collect();
        if m < zeros.len() {
            Ok(zeros[zeros.len() - 1 - m])
        } else if m - zeros.len() < colored.len() {
            Ok(colored[m - zeros.len()])
        } else {
            Err(InvertError::Selection(k))
        }
    }

    for k in 1..=n {
        let (p, q) = hist.labels[k - 1];
        if p > 0 {
            let idx = select(&open_val, (p - 1) as usize, k)?;
            let (val, pending) = open_val.remove(idx);
            word[k - 1] = val as u32;
            colors[k - 1] = pending;
        } else {
            open_pos.push((k, (-p) as u32));
        }
        if q > 0 {
            let idx = select(&open_pos, (q - 1) as usize, k)?;
            let (pos, color) = open_pos.remove(idx);
            word[pos - 1] = k as u32;
            colors[pos - 1] = color;
        } else {
            open_val.push((k, (-q) as u32));
        }
    }
    if !open_pos.is_empty() || !open_val.is_empty() {
        return Err(InvertError::Selection(n));
    }
    let pi = Permutation::new(word).map_err(|_| InvertError::Selection(n))?;
    ColoredPermutation::new(pi, colors, r).map_err(|_| InvertError::Selection(n))
}

/// Exponents of the nine weight parameters, in the fixed order
/// `q, t, t~, w, w~, x, x~, y, y~`.
pub type WeightExponents = [u64; 9];

pub const WEIGHT_VAR_NAMES: [&str; 9] = ["q", "t", "t~", "w", "w~", "x", "x~", "y", "y~"];

const Q: usize = 0;
const T: usize = 1;
const TT: usize = 2;
const W: usize = 3;
const WW: usize = 4;
const X: usize = 5;
const XX: usize = 6;
const Y: usize = 7;
const YY: usize = 8;

/// Weight exponents of one step of height `h` with label `(p,q)`.
///
/// The left factor is `q^(p-1)`, `t`, or `w y^(-p) q^h`; the right factor is
/// `q^(q-1)`, `t~`, or `w~ y~^(-q) q^h'` with `h' = h` when `p > 0` and
/// `h+1` otherwise. The fixed-point clauses multiply by `x` at
/// `(p,q) = (0,1)` and by `x~` at `p < 0`, `q = h+1`.
pub fn step_weight_exponents(p: i32, q: i32, h: i32) -> WeightExponents {
    let mut e: WeightExponents = [0; 9];
    if p > 0 {
        e[Q] += (p - 1) as u64;
    } else if p == 0 {
        e[T] += 1;
    } else {
        e[W] += 1;
        e[Y] += (-p) as u64;
        e[Q] += h as u64;
    }
    let hr = if p > 0 { h } else { h + 1 };
    if q > 0 {
        e[Q] += (q - 1) as u64;
    } else if q == 0 {
        e[TT] += 1;
    } else {
        e[WW] += 1;
        e[YY] += (-q) as u64;
        e[Q] += hr as u64;
    }
    if p == 0 && q == 1 {
        e[X] += 1;
    }
    if p < 0 && q == h + 1 {
        e[XX] += 1;
    }
    e
}

/// Total weight monomial of a history.
pub fn history_weight_exponents(hist: &LaguerreHistory) -> WeightExponents {
    let heights = hist.path.step_heights();
    let mut e: WeightExponents = [0; 9];
    for (k, &(p, q)) in hist.labels.iter().enumerate() {
        let se = step_weight_exponents(p, q, heights[k]);
        for i in 0..9 {
            e[i] += se[i];
        }
    }
    e
}

/// Weight monomial of a colored permutation:
/// `q^cros t^wexa t~^dropa w^wexc w~^dropc x^fixa x~^fixc y^csumw y~^csumd`.
pub fn sigma_weight_exponents(s: &ColoredPermutation) -> WeightExponents {
    let st = crate::colored::colored_stats(s);
    [
        crate::colored::cros_colored(s) as u64,
        st.wexa as u64,
        st.dropa as u64,
        st.wexc as u64,
        st.dropc as u64,
        st.fixa as u64,
        st.fixc as u64,
        st.csumw as u64,
        st.csumd as u64,
    ]
}

/// Crossing count accumulated by the construction: the `q`-exponent of the
/// history weight.
pub fn history_crossing_count(hist: &LaguerreHistory) -> u64 {
    history_weight_exponents(hist)[Q]
}

/// Bindings for the nine weight parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightParams {
    pub values: [BigInt; 9],
}

impl WeightParams {
    pub fn all_ones() -> Self {
        WeightParams { values: std::array::from_fn(|_| BigInt::from(1)) }
    }
}

fn eval_exponents(e: &WeightExponents, wp: &WeightParams) -> BigInt {
    let mut acc = BigInt::from(1);
    for (i, &exp) in e.iter().enumerate() {
        acc *= wp.values[i].pow(exp as u32);
    }
    acc
}

pub fn history_weight(hist: &LaguerreHistory, wp: &WeightParams) -> BigInt {
    eval_exponents(&history_weight_exponents(hist), wp)
}

pub fn sigma_weight(s: &ColoredPermutation, wp: &WeightParams) -> BigInt {
    eval_exponents(&sigma_weight_exponents(s), wp)
}

/// Weight monomial rendered like `q^6 t^2 t~^2 w^2 w~ x y^2 y~^2`.
pub fn weight_monomial_string(e: &WeightExponents) -> String {
    let mut parts = Vec::new();
    for (i, &exp) in e.iter().enumerate() {
        match exp {
            0 => {}
            1 => parts.push(WEIGHT_VAR_NAMES[i].to_string()),
            _ => parts.push(format!("{}^{}", WEIGHT_VAR_NAMES[i], exp)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// Symbolic per-height sums of the step weights over the admissible label
/// boxes: the `(a_h, b_h, c_h)` weight triple as polynomials in all nine
/// parameters.
pub fn weight_sum_triple(r: u32, h: i32) -> (MPoly<9>, MPoly<9>, MPoly<9>) {
    let lo = -(r as i32 - 1);
    let mono = |p: i32, q: i32| {
        let e = step_weight_exponents(p, q, h);
        let mut exps = [0u16; 9];
        for i in 0..9 {
            exps[i] = e[i] as u16;
        }
        MPoly::<9>::monomial(exps, BigInt::from(1))
    };
    let mut a = MPoly::<9>::new();
    for p in lo..=0 {
        for q in lo..=0 {
            a = a.add_ref(&mono(p, q));
        }
    }
    let mut c = MPoly::<9>::new();
    for p in 1..=h {
        for q in 1..=h {
            c = c.add_ref(&mono(p, q));
        }
    }
    let mut b = MPoly::<9>::new();
    for p in 1..=h {
        for q in lo..=0 {
            b = b.add_ref(&mono(p, q));
        }
    }
    for p in lo..=0 {
        for q in 1..=h + 1 {
            b = b.add_ref(&mono(p, q));
        }
    }
    (a, b, c)
}
