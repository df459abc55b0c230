//! Classical F_q-linear codes.

use std::sync::Arc;

use crate::additive::{AdditiveCode, Flavor, MinWeight};
use crate::enumerate::Execution;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Echelon;

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    basis: Echelon,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.dim() == other.dim()
            && self.basis.is_subspace_of(&other.basis)
    }
}

impl LinearCode {
    pub fn new(field: Arc<Field>, n: usize, generators: &[Vec<Elem>]) -> Result<Self> {
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::MixedAmbient);
        }
        if generators.iter().flatten().any(|&a| a >= field.order()) {
            return Err(Error::Malformed("symbol outside the field".into()));
        }
        Ok(LinearCode {
            basis: Echelon::from_rows(field.clone(), n, generators.iter().cloned()),
            field,
            n,
        })
    }

    pub fn full(field: Arc<Field>, n: usize) -> Self {
        LinearCode {
            basis: Echelon::full(field.clone(), n),
            field,
            n,
        }
    }

    pub fn zero(field: Arc<Field>, n: usize) -> Self {
        LinearCode {
            basis: Echelon::new(field.clone(), n),
            field,
            n,
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    /// Reduced echelon generator matrix.
    pub fn generator_matrix(&self) -> &[Vec<Elem>] {
        self.basis.rows()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && self.basis.contains(v)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.field == other.field && self.n == other.n && self.basis.is_subspace_of(&other.basis)
    }

    /// First basis vector of `self` missing from `other`.
    pub fn witness_outside(&self, other: &LinearCode) -> Option<Vec<Elem>> {
        self.basis
            .rows()
            .iter()
            .find(|r| !other.basis.contains(r))
            .cloned()
    }

    pub fn euclidean_dual(&self) -> LinearCode {
        LinearCode {
            basis: self.basis.nullspace_echelon(),
            field: self.field.clone(),
            n: self.n,
        }
    }

    /// Dual under Σ x^q·y; the field must have even degree over F_p.
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        let m = self.field.degree();
        if m % 2 != 0 {
            return Err(Error::NotASubfield { sub: m / 2, m });
        }
        let q = (self.field.characteristic() as u64).pow(m / 2);
        let conj = self
            .basis
            .rows()
            .iter()
            .map(|r| r.iter().map(|&x| self.field.pow(x, q)).collect());
        let e = Echelon::from_rows(self.field.clone(), self.n, conj);
        Ok(LinearCode {
            basis: e.nullspace_echelon(),
            field: self.field.clone(),
            n: self.n,
        })
    }

    /// The code as an F_p-space in the plain ambient.
    pub fn to_additive(&self) -> AdditiveCode {
        self.to_additive_flavor(Flavor::Plain)
            .expect("plain flavor accepts any field")
    }

    /// The code as an F_p-space in the plain or q-square ambient.
    pub fn to_additive_flavor(&self, flavor: Flavor) -> Result<AdditiveCode> {
        let f = &self.field;
        let gens: Vec<Vec<Elem>> = self
            .basis
            .rows()
            .iter()
            .flat_map(|r| {
                f.basis()
                    .into_iter()
                    .map(move |x| r.iter().map(|&a| f.mul(a, x)).collect())
            })
            .collect();
        AdditiveCode::new(f.clone(), flavor, self.n, None, &gens)
    }

    pub fn from_additive(code: &AdditiveCode) -> Result<LinearCode> {
        if code.flavor() == Flavor::Symplectic {
            return Err(Error::MixedAmbient);
        }
        if !code.is_linear() {
            return Err(Error::NotLinear);
        }
        LinearCode::new(code.field().clone(), code.n(), &code.generators())
    }

    pub fn min_distance(&self, exec: Execution) -> Result<MinWeight> {
        self.to_additive().min_weight(exec)
    }

    /// Keeps the listed coordinates, in order.
    pub fn restrict(&self, positions: &[usize]) -> LinearCode {
        let rows: Vec<Vec<Elem>> = self
            .basis
            .rows()
            .iter()
            .map(|r| positions.iter().map(|&i| r[i]).collect())
            .collect();
        LinearCode {
            basis: Echelon::from_rows(self.field.clone(), positions.len(), rows),
            field: self.field.clone(),
            n: positions.len(),
        }
    }

    /// Coordinate-wise product with `x`.
    pub fn scale(&self, x: &[Elem]) -> LinearCode {
        let rows: Vec<Vec<Elem>> = self
            .basis
            .rows()
            .iter()
            .map(|r| r.iter().zip(x).map(|(&a, &b)| self.field.mul(a, b)).collect())
            .collect();
        LinearCode {
            basis: Echelon::from_rows(self.field.clone(), self.n, rows),
            field: self.field.clone(),
            n: self.n,
        }
    }
}
