//! Row-reduced echelon bases over a finite field.

use std::sync::Arc;

use crate::field::{Elem, Field};

/// A subspace of F^ncols kept in reduced row echelon form.
#[derive(Clone)]
pub struct Echelon {
    field: Arc<Field>,
    ncols: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Echelon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Echelon")
            .field("field", &self.field)
            .field("ncols", &self.ncols)
            .field("rank", &self.rows.len())
            .finish()
    }
}

impl Echelon {
    pub fn new(field: Arc<Field>, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I>(field: Arc<Field>, ncols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<Elem>>,
    {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// The whole space F^ncols.
    pub fn full(field: Arc<Field>, ncols: usize) -> Self {
        let rows = (0..ncols).map(|i| {
            let mut r = vec![0; ncols];
            r[i] = 1;
            r
        });
        let pivots = (0..ncols).collect();
        Echelon {
            rows: rows.collect(),
            pivots,
            field,
            ncols,
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row).skip(piv) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns false when it was already there.
    pub fn insert(&mut self, v: Vec<Elem>) -> bool {
        let f = self.field.clone();
        let mut v = self.reduce(&v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[piv]).expect("pivot is nonzero");
        for x in v.iter_mut().skip(piv) {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&v).skip(piv) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.rows.insert(at, v);
        self.pivots.insert(at, piv);
        true
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Basis of {x : r·x = 0 for every row r}, under the plain dot product.
    pub fn nullspace(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![0; self.ncols];
                x[free] = 1;
                for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                    x[piv] = f.neg(row[free]);
                }
                x
            })
            .collect()
    }

    pub fn nullspace_echelon(&self) -> Echelon {
        Echelon::from_rows(self.field.clone(), self.ncols, self.nullspace())
    }

    /// Rows of `other` completing a basis of `self` to one of `self + other`.
    pub fn complement_in(&self, other: &Echelon) -> Vec<Vec<Elem>> {
        let mut acc = self.clone();
        other
            .rows
            .iter()
            .filter(|r| acc.insert((*r).clone()))
            .cloned()
            .collect()
    }

    /// Coordinates of `v` in terms of the echelon rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }
}

pub fn dot(field: &Field, u: &[Elem], v: &[Elem]) -> Elem {
    u.iter()
        .zip(v)
        .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}
