//! Univariate polynomials over a finite field, coefficients low-to-high.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Arc<Field>,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: Arc<Field>, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Arc<Field>) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: Arc<Field>) -> Self {
        Poly::new(field, vec![1])
    }

    /// x^n - 1.
    pub fn x_n_minus_one(field: Arc<Field>, n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = field.neg(1);
        c[n] = 1;
        Poly::new(field, c)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        Ok(Poly::new(f.clone(), c))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut c = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f.clone(), c))
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let f = &self.field;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let lead_inv = f.inv(divisor.coeffs[dd]).expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[top - dd] = factor;
            for (k, &g) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                rem[idx] = f.sub(rem[idx], f.mul(factor, g));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f.clone(), quot), Poly::new(f.clone(), rem)))
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.field.inv(lead).expect("nonzero lead");
                let c = self.coeffs.iter().map(|&x| self.field.mul(x, inv)).collect();
                Poly::new(self.field.clone(), c)
            }
        }
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// The monic product of (x - r) over `roots`.
    pub fn from_roots(field: Arc<Field>, roots: &[Elem]) -> Poly {
        let f = field.clone();
        let mut c = vec![1];
        for &r in roots {
            let mut next = vec![0; c.len() + 1];
            for (i, &a) in c.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], a);
                next[i] = f.sub(next[i], f.mul(a, r));
            }
            c = next;
        }
        Poly::new(field, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Embedding;

    #[test]
    fn empty_product_is_one() {
        let f = Field::get(2, 2).unwrap();
        assert_eq!(Poly::from_roots(f.clone(), &[]), Poly::one(f));
    }

    #[test]
    fn conjugate_roots_give_subfield_coefficients() {
        let f4 = Field::get(2, 2).unwrap();
        let (ext, beta) = f4.nth_root_of_unity(5).unwrap();
        let g = Poly::from_roots(ext.clone(), &[beta, ext.pow(beta, 4)]);
        assert_eq!(g.degree(), Some(2));
        let emb = Embedding::new(&f4, &ext).unwrap();
        assert!(g.coeffs().iter().all(|&c| emb.restrict(c).is_some()));
        let xn = Poly::x_n_minus_one(ext.clone(), 5);
        assert_eq!(xn.gcd(&g).unwrap(), g);
        let (_, r) = xn.divmod(&g).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn division_errors() {
        let f = Field::get(3, 1).unwrap();
        let g = Field::get(5, 1).unwrap();
        let a = Poly::new(f.clone(), vec![1, 2]);
        assert_eq!(a.divmod(&Poly::zero(f)).unwrap_err(), Error::DivisionByZeroPoly);
        assert_eq!(a.mul(&Poly::one(g)).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn divmod_reconstructs() {
        let f = Field::get(3, 2).unwrap();
        let a = Poly::new(f.clone(), vec![1, 4, 0, 7, 2, 5]);
        let b = Poly::new(f.clone(), vec![3, 0, 1]);
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.degree().map_or(true, |d| d < 2));
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
    }
}
