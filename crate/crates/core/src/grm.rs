//! Punctured generalized Reed-Muller codes R*_q(ν, m) of length q^m - 1.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field};
use crate::linear::LinearCode;

/// Largest q^m for which generator matrices are materialized.
pub const MAX_POINTS: u64 = 1 << 20;

/// How the nonzero points of F_q^m are listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Ordering {
    /// P_i = α^i for the primitive element α of F_{q^m}, in the coordinates
    /// x_j(P) = tr(α^j P); the code is then cyclic and aligned with the BCH
    /// codes of the same length.
    #[default]
    Cyclic,
    /// Nonzero vectors in lexicographic order, first coordinate most significant.
    Lexicographic,
}

/// (Q, R) with m(q-1) - ν = (q-1)Q + R, 0 ≤ R < q-1.
pub fn split_order(q: u64, nu: u64, m: u32) -> (u64, u64) {
    let t = m as u64 * (q - 1) - nu;
    (t / (q - 1), t % (q - 1))
}

fn check_order(q: u64, nu: u64, m: u32) -> Result<()> {
    let max = (m as u64 * (q - 1)).saturating_sub(1);
    if nu > max {
        return Err(Error::OrderOutOfRange { nu, max });
    }
    Ok(())
}

/// (k*(ν), d*(ν)).
pub fn grm_params(q: u64, nu: u64, m: u32) -> Result<(u64, u64)> {
    check_order(q, nu, m)?;
    let (qq, r) = split_order(q, nu, m);
    let mut k = BigInt::from(0);
    for j in 0..=m as i64 {
        let term = arith::binomial(m as i64, j)
            * arith::binomial(m as i64 + nu as i64 - j * q as i64, nu as i64 - j * q as i64);
        if j % 2 == 0 {
            k += term;
        } else {
            k -= term;
        }
    }
    let d = (r + 1) * q.pow(qq as u32) - 1;
    Ok((k.to_u64().expect("dimension is a small nonnegative integer"), d))
}

/// ν = (m - Q)(q - 1) - R with Q = ⌊log_q(δ+1)⌋, R = ⌈(δ+1)/q^Q⌉ - 1.
pub fn grm_largest_in_bch(q: u64, m: u32, delta: u64) -> i64 {
    let (qq, r) = log_split(q, delta);
    (m as i64 - qq as i64) * (q as i64 - 1) - r as i64
}

/// (⌊log_q(δ+1)⌋, ⌈(δ+1)/q^Q⌉ - 1).
pub fn log_split(q: u64, delta: u64) -> (u64, u64) {
    let mut qq = 0;
    let mut pow = 1u64;
    while pow * q <= delta + 1 {
        pow *= q;
        qq += 1;
    }
    (qq, (delta + 1).div_ceil(pow) - 1)
}

/// The nonzero points of F_q^m, as coordinate vectors over F_q.
pub fn points(q: u64, m: u32, ordering: Ordering) -> Result<Vec<Vec<Elem>>> {
    let f = Field::of_order(q)?;
    let total = q
        .checked_pow(m)
        .filter(|&t| t <= MAX_POINTS)
        .ok_or_else(|| Error::TooLarge(format!("{q}^{m} evaluation points")))?;
    match ordering {
        Ordering::Lexicographic => Ok((1..total)
            .map(|i| {
                let mut v = vec![0; m as usize];
                let mut rest = i;
                for slot in v.iter_mut().rev() {
                    *slot = (rest % q) as Elem;
                    rest /= q;
                }
                v
            })
            .collect()),
        Ordering::Cyclic => {
            let ext = Field::get(f.characteristic(), f.degree() * m)?;
            let emb = Embedding::new(&f, &ext)?;
            let alpha = ext.primitive_element();
            let alpha_pows: Vec<Elem> = (0..m as u64).map(|j| ext.pow(alpha, j)).collect();
            Ok((0..total - 1)
                .map(|i| {
                    let pt = ext.pow(alpha, i);
                    alpha_pows
                        .iter()
                        .map(|&a| {
                            let t = ext.trace(ext.mul(a, pt), f.degree()).expect("subfield degree divides");
                            emb.restrict(t).expect("relative trace lies in the subfield")
                        })
                        .collect()
                })
                .collect())
        }
    }
}

fn monomials(q: u64, nu: u64, m: u32) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut e = vec![0u64; m as usize];
    loop {
        if e.iter().sum::<u64>() <= nu {
            out.push(e.clone());
        }
        let mut i = 0;
        loop {
            if i == m as usize {
                return out;
            }
            e[i] += 1;
            if e[i] < q {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

fn eval_monomial(f: &Field, e: &[u64], pt: &[Elem]) -> Elem {
    e.iter()
        .zip(pt)
        .fold(1, |acc, (&k, &x)| f.mul(acc, f.pow(x, k)))
}

/// R*_q(ν, m) with the given point ordering.
pub fn grm_code(q: u64, nu: u64, m: u32, ordering: Ordering) -> Result<LinearCode> {
    check_order(q, nu, m)?;
    let f = Field::of_order(q)?;
    let pts = points(q, m, ordering)?;
    let rows: Vec<Vec<Elem>> = monomials(q, nu, m)
        .iter()
        .map(|e| pts.iter().map(|pt| eval_monomial(&f, e, pt)).collect())
        .collect();
    LinearCode::new(f, pts.len(), &rows)
}

/// A word of R*_q(ν, m) of weight d*(ν): the evaluation of
/// Π_{i<m-Q-1} (1 - x_i^{q-1}) · Π_{a∈T} (x_{m-Q-1} - a) for a set T of
/// q-1-R nonzero field elements.
pub fn grm_min_weight_word(q: u64, nu: u64, m: u32, ordering: Ordering) -> Result<Vec<Elem>> {
    check_order(q, nu, m)?;
    let f: Arc<Field> = Field::of_order(q)?;
    let (qq, r) = split_order(q, nu, m);
    let pts = points(q, m, ordering)?;
    let lead = (m as u64 - qq) as usize;
    let t: Vec<Elem> = (1..q as Elem).take((q - 1 - r) as usize).collect();
    let word = pts
        .iter()
        .map(|pt| {
            if lead == 0 {
                return 1;
            }
            let zero_lead = pt[..lead - 1].iter().all(|&x| x == 0);
            let x = pt[lead - 1];
            if zero_lead && !t.contains(&x) {
                let mut v = 1;
                for &a in &t {
                    v = f.mul(v, f.sub(x, a));
                }
                v
            } else {
                0
            }
        })
        .collect();
    Ok(word)
}
