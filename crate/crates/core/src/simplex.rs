//! Exact feasibility of {x ≥ 0 : Ax = b} by phase-one simplex over the rationals.
//!
//! Pivots follow Bland's rule, so the method terminates without any
//! anti-cycling perturbation.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense tableau with artificial columns appended after the structural ones.
struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    /// Reduced costs of the phase-one objective, one per column.
    cost: Vec<BigRational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        if !self.cost[c].is_zero() {
            let factor = self.cost[c].clone();
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule to optimality; the phase-one objective is bounded below by 0.
    fn run(&mut self) {
        loop {
            let Some(c) = self.cost.iter().position(|v| v.is_negative()) else {
                return;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            let (r, _) = best.expect("phase-one objective is bounded");
            self.pivot(r, c);
        }
    }
}

/// A nonnegative solution of Ax = b, or `None` when none exists.
///
/// Rows of `a` must all have the same length.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let nvars = a.first().map_or(0, |r| r.len());
    let m = a.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r: Vec<BigRational> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        r.extend((0..m).map(|j| if j == i { BigRational::one() } else { BigRational::zero() }));
        rows.push(r);
        rhs.push(if flip { -bi.clone() } else { bi.clone() });
    }
    let mut cost = vec![BigRational::zero(); nvars + m];
    for r in &rows {
        for (c, v) in cost.iter_mut().zip(r).take(nvars) {
            *c -= v;
        }
    }
    let mut t = Tableau {
        rows,
        rhs,
        cost,
        basis: (nvars..nvars + m).collect(),
    };
    t.run();
    let residual: BigRational = t
        .basis
        .iter()
        .zip(&t.rhs)
        .filter(|(&c, _)| c >= nvars)
        .map(|(_, v)| v.clone())
        .sum();
    if !residual.is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); nvars];
    for (&c, v) in t.basis.iter().zip(&t.rhs) {
        if c < nvars {
            x[c] = v.clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn check(a: &[Vec<BigRational>], b: &[BigRational], x: &[BigRational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, bi) in a.iter().zip(b) {
            let s: BigRational = row.iter().zip(x).map(|(u, v)| u * v).sum();
            assert_eq!(&s, bi);
        }
    }

    #[test]
    fn simple_feasible_system() {
        let a = vec![vec![r(1), r(1), r(1)], vec![r(1), r(-1), r(0)]];
        let b = vec![r(4), r(1)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn negative_right_hand_side() {
        let a = vec![vec![r(-1), r(-2)]];
        let b = vec![r(-3)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn infeasible_systems() {
        assert!(feasible_point(&[vec![r(1), r(1)]], &[r(-1)]).is_none());
        let a = vec![vec![r(1), r(1)], vec![r(1), r(1)]];
        assert!(feasible_point(&a, &[r(1), r(2)]).is_none());
    }

    #[test]
    fn redundant_rows_and_fractions() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let a = vec![vec![r(2), r(0)], vec![r(4), r(0)], vec![r(0), r(3)]];
        let b = vec![r(1), r(2), r(1)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
        assert_eq!(x[0], half);
    }

    #[test]
    fn degenerate_cycling_candidate() {
        // Beale's classic cycling example, recast as a feasibility system with slacks.
        let f = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let a = vec![
            vec![f(1, 4), r(-60), f(-1, 25), r(9), r(1), r(0), r(0)],
            vec![f(1, 2), r(-90), f(-1, 50), r(3), r(0), r(1), r(0)],
            vec![r(0), r(0), r(1), r(0), r(0), r(0), r(1)],
        ];
        let b = vec![r(0), r(0), r(1)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
    }
}
