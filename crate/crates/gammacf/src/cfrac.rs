//! Jacobi continued fractions: moment extraction by weighted-Motzkin-path
//! dynamic programming, the closed Jacobi-Rogers sum, and the named
//! coefficient families used by the identity verifiers.
//!
//! A J-fraction `1/(1 - b_0 z - lam_1 z^2/(1 - b_1 z - ...))` has moment
//! `mu_n` equal to the weighted count of Motzkin paths of length `n`, where
//! a level step at height `h` weighs `b_h` and a down step from height `h`
//! weighs `lam_h`. Families stated as `(a_h, b_h, c_h)` triples store
//! `lam_h = a_(h-1) * c_h`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::ring::{pq_int_in, q_int_in};
use crate::poly::{IntPoly, Ring};

#[derive(Debug, Error, PartialEq)]
pub enum CfError {
    #[error("need diagonal coefficients b_0..b_{need} and lam_1..lam_{need}, have b: {have_b}, lam: {have_lam}")]
    InsufficientCoefficients { need: usize, have_b: usize, have_lam: usize },
}

/// Coefficients of a Jacobi continued fraction over an exact ring.
#[derive(Debug, Clone, PartialEq)]
pub struct JFraction<R> {
    /// `b[h]` is the level-step weight at height `h`.
    pub b: Vec<R>,
    /// `lam[h-1]` is the down-step weight from height `h`.
    pub lam: Vec<R>,
}

impl<R: Ring> JFraction<R> {
    pub fn new(b: Vec<R>, lam: Vec<R>) -> Self {
        JFraction { b, lam }
    }

    fn check_height(&self, n_max: usize) -> Result<usize, CfError> {
        let need = n_max / 2;
        if self.b.len() <= need || self.lam.len() < need {
            return Err(CfError::InsufficientCoefficients {
                need,
                have_b: self.b.len(),
                have_lam: self.lam.len(),
            });
        }
        Ok(need)
    }
}

/// Moments `mu_0..mu_n_max` by the height-indexed transfer recurrence.
pub fn jf_moments<R: Ring>(jf: &JFraction<R>, n_max: usize) -> Result<Vec<R>, CfError> {
    let hmax = jf.check_height(n_max)?;
    // state[h] = weighted sum over partial paths ending at height h
    let mut state = vec![R::zero(); hmax + 2];
    state[0] = R::one();
    let mut moments = Vec::with_capacity(n_max + 1);
    moments.push(R::one());
    for step in 1..=n_max {
        let reach = hmax.min(step);
        let mut next = vec![R::zero(); hmax + 2];
        for h in 0..=reach {
            if state[h].is_zero() {
                continue;
            }
            // level
            next[h] = next[h].add_ref(&state[h].mul_ref(&jf.b[h]));
            // up
            if h < hmax {
                next[h + 1] = next[h + 1].add_ref(&state[h]);
            }
            // down, weighted by lam_h
            if h > 0 {
                next[h - 1] = next[h - 1].add_ref(&state[h].mul_ref(&jf.lam[h - 1]));
            }
        }
        state = next;
        moments.push(state[0].clone());
    }
    Ok(moments)
}

/// Binomial with the printed convention `C(p,-1) = delta_(p,-1)`.
fn binom_conv(p: i64, k: i64) -> BigInt {
    if k == -1 {
        return if p == -1 { BigInt::one() } else { BigInt::zero() };
    }
    if k < 0 || p < 0 || k > p {
        return BigInt::zero();
    }
    binomial(BigInt::from(p), BigInt::from(k))
}

fn compositions(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    // all (x_1..x_parts) with x_i >= min and sum = total
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let reserve = min.saturating_mul(parts - 1);
    if total < min + reserve {
        return out;
    }
    for first in min..=total - reserve {
        for mut rest in compositions(total - first, parts - 1, min) {
            let mut v = Vec::with_capacity(parts);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// The closed Jacobi-Rogers sum for `mu_n`: an independent route to the
/// moments, used to cross-validate the path DP.
pub fn jacobi_rogers<R: Ring>(jf: &JFraction<R>, n: usize) -> R {
    let mut total = R::zero();
    for h in 0..=n / 2 {
        // level exponents m_0..m_h >= 0, rise exponents n_0..n_(h-1) >= 1,
        // with 2*sum(n) + sum(m) = n
        for ns in compositions_upto(n / 2, h) {
            let rest = n - 2 * ns.iter().sum::<usize>();
            for ms in compositions(rest, h + 1, 0) {
                // n_(-1) = 1, n_h = 0
                let n_at = |idx: i64| -> i64 {
                    if idx == -1 {
                        1
                    } else if idx == h as i64 {
                        0
                    } else {
                        ns[idx as usize] as i64
                    }
                };
                let mut rho = BigInt::one();
                for j in 0..h as i64 {
                    rho *= binom_conv(n_at(j) + n_at(j + 1) - 1, n_at(j) - 1);
                    if rho.is_zero() {
                        break;
                    }
                }
                for (l, &m) in ms.iter().enumerate() {
                    let l = l as i64;
                    rho *= binom_conv(m as i64 + n_at(l) + n_at(l - 1) - 1, m as i64);
                    if rho.is_zero() {
                        break;
                    }
                }
                if rho.is_zero() {
                    continue;
                }
                let mut term = R::from_bigint(&rho);
                for (l, &m) in ms.iter().enumerate() {
                    if m > 0 {
                        term = term.mul_ref(&jf.b[l].pow_u32(m as u32));
                    }
                }
                for (j, &e) in ns.iter().enumerate() {
                    term = term.mul_ref(&jf.lam[j].pow_u32(e as u32));
                }
                total = total.add_ref(&term);
            }
        }
    }
    total
}

fn compositions_upto(budget: usize, parts: usize) -> Vec<Vec<usize>> {
    // all (n_0..n_(parts-1)) with n_i >= 1 and sum <= budget
    if parts == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for s in parts..=budget {
        out.extend(compositions(s, parts, 1));
    }
    out
}

/// `b_h = t[r-1]_t + h(1+t)[r]_t`, `lam_h = t [r]_t^2 h^2`; moments are the
/// flag-excedance derangement polynomials `D_n^(r)(t)`.
pub fn family_derange_big_d(r: u32, h_max: usize) -> JFraction<IntPoly> {
    let t = IntPoly::monomial(BigInt::one(), 1);
    let one_plus_t = IntPoly::one_plus_x();
    let r_t = crate::poly::q_int(r);
    let rm1_t = crate::poly::q_int(r.saturating_sub(1));
    let b = (0..=h_max)
        .map(|h| {
            t.mul_ref(&rm1_t)
                .add_ref(&one_plus_t.mul_ref(&r_t).scale(&BigInt::from(h as i64)))
        })
        .collect();
    let lam = (1..=h_max)
        .map(|h| t.mul_ref(&r_t).mul_ref(&r_t).scale(&BigInt::from((h * h) as i64)))
        .collect();
    JFraction::new(b, lam)
}

/// `b_h = (r-1)t + rh(1+t)`, `lam_h = (rh)^2 t`; moments are the
/// excedance derangement polynomials `d_n^(r)(t)`.
pub fn family_derange_small_d(r: u32, h_max: usize) -> JFraction<IntPoly> {
    let t = IntPoly::monomial(BigInt::one(), 1);
    let one_plus_t = IntPoly::one_plus_x();
    let b = (0..=h_max)
        .map(|h| {
            t.scale(&BigInt::from((r - 1) as i64))
                .add_ref(&one_plus_t.scale(&BigInt::from(r as i64 * h as i64)))
        })
        .collect();
    let lam = (1..=h_max)
        .map(|h| {
            let rh = r as i64 * h as i64;
            t.scale(&BigInt::from(rh * rh))
        })
        .collect();
    JFraction::new(b, lam)
}

/// `a_h = r^2`, `b_h = (2h+1)r`, `c_h = h^2`; moments are `n! r^n`.
pub fn family_r_euler(r: u32, h_max: usize) -> JFraction<BigInt> {
    let b = (0..=h_max).map(|h| BigInt::from((2 * h as i64 + 1) * r as i64)).collect();
    let lam = (1..=h_max)
        .map(|h| BigInt::from(r as i64 * r as i64 * (h * h) as i64))
        .collect();
    JFraction::new(b, lam)
}

/// Generalized Eulerian family: `b_h = (u+tv)[h+1]_{p,q}`,
/// `lam_h = tw [h]_{p,q} [h+1]_{p,q}`. The moments give
/// `sum_{n>=1} A_n x^(n-1)`, so `mu_(n-1) = A_n(p,q,t,u,v,w)`.
pub fn family_linear_eulerian<R: Ring>(params: &[R; 6], h_max: usize) -> JFraction<R> {
    let [p, q, t, u, v, w] = params;
    let u_plus_tv = u.add_ref(&t.mul_ref(v));
    let tw = t.mul_ref(w);
    let pq = |n: u32| pq_int_in(n, p, q);
    let b = (0..=h_max).map(|h| u_plus_tv.mul_ref(&pq(h as u32 + 1))).collect();
    let lam = (1..=h_max)
        .map(|h| tw.mul_ref(&pq(h as u32)).mul_ref(&pq(h as u32 + 1)))
        .collect();
    JFraction::new(b, lam)
}

/// Cyclic-statistic family: `a_h = tw[h+1]_{p,q}`,
/// `b_h = y p^h + (qu+tv)[h]_{p,q}`, `c_h = [h]_{p,q}`; moments are
/// `B_n(p,q,t,u,v,w,y)`.
pub fn family_cyclic_eulerian<R: Ring>(params: &[R; 7], h_max: usize) -> JFraction<R> {
    let [p, q, t, u, v, w, y] = params;
    let qu_plus_tv = q.mul_ref(u).add_ref(&t.mul_ref(v));
    let tw = t.mul_ref(w);
    let pq = |n: u32| pq_int_in(n, p, q);
    let b = (0..=h_max)
        .map(|h| y.mul_ref(&p.pow_u32(h as u32)).add_ref(&qu_plus_tv.mul_ref(&pq(h as u32))))
        .collect();
    let lam = (1..=h_max)
        .map(|h| tw.mul_ref(&pq(h as u32)).mul_ref(&pq(h as u32)))
        .collect();
    JFraction::new(b, lam)
}

/// The nine weight parameters of the colored-history family, in the fixed
/// order `q, t, t~, w, w~, x, x~, y, y~`.
#[derive(Debug, Clone, PartialEq)]
pub struct WreathParams<R> {
    pub q: R,
    pub t: R,
    pub tt: R,
    pub w: R,
    pub ww: R,
    pub x: R,
    pub xx: R,
    pub y: R,
    pub yy: R,
}

impl<R: Ring> WreathParams<R> {
    pub fn from_slice(vals: &[R]) -> Self {
        assert_eq!(vals.len(), 9, "wreath family takes nine parameters");
        WreathParams {
            q: vals[0].clone(),
            t: vals[1].clone(),
            tt: vals[2].clone(),
            w: vals[3].clone(),
            ww: vals[4].clone(),
            x: vals[5].clone(),
            xx: vals[6].clone(),
            y: vals[7].clone(),
            yy: vals[8].clone(),
        }
    }
}

/// Computes the `(a_h, b_h, c_h)` coefficient triple of the nine-parameter
/// colored family at height `h`:
/// `a_h = (t + wy[r-1]_y q^h)(t~ + w~y~[r-1]_y~ q^(h+1))`, `c_h = [h]_q^2`,
/// `b_h = (t~ + w~y~[r-1]_y~ q^h)[h]_q + t(x + q[h]_q) + wy[r-1]_y q^h ([h]_q + x~ q^h)`.
pub fn wreath_triple<R: Ring>(r: u32, wp: &WreathParams<R>, h: u32) -> (R, R, R) {
    let hq = q_int_in(h, &wp.q);
    let qh = wp.q.pow_u32(h);
    let qh1 = wp.q.pow_u32(h + 1);
    let wy = wp.w.mul_ref(&wp.y).mul_ref(&q_int_in(r - 1, &wp.y));
    let wwyy = wp.ww.mul_ref(&wp.yy).mul_ref(&q_int_in(r - 1, &wp.yy));
    let a = wp
        .t
        .add_ref(&wy.mul_ref(&qh))
        .mul_ref(&wp.tt.add_ref(&wwyy.mul_ref(&qh1)));
    let c = hq.mul_ref(&hq);
    let b = wp
        .tt
        .add_ref(&wwyy.mul_ref(&qh))
        .mul_ref(&hq)
        .add_ref(&wp.t.mul_ref(&wp.x.add_ref(&wp.q.mul_ref(&hq))))
        .add_ref(&wy.mul_ref(&qh).mul_ref(&hq.add_ref(&wp.xx.mul_ref(&qh))));
    (a, b, c)
}

/// J-fraction of the nine-parameter colored family; moments are the weight
/// sums over `Z_r wr S_n`.
pub fn family_wreath<R: Ring>(r: u32, wp: &WreathParams<R>, h_max: usize) -> JFraction<R> {
    let triples: Vec<(R, R, R)> = (0..=h_max as u32).map(|h| wreath_triple(r, wp, h)).collect();
    let b = triples.iter().map(|(_, b, _)| b.clone()).collect();
    let lam = (1..=h_max)
        .map(|h| triples[h - 1].0.mul_ref(&triples[h].2))
        .collect();
    JFraction::new(b, lam)
}
