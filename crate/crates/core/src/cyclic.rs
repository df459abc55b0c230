//! Cyclotomic cosets, defining sets and cyclic codes.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field, FieldSpec};
use crate::linear::LinearCode;
use crate::poly::Poly;

/// The orbit of `x` under multiplication by `mult` modulo `n`, sorted.
pub fn coset_of(x: u64, n: u64, mult: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut y = x % n;
    loop {
        out.push(y);
        y = ((y as u128 * mult as u128) % n as u128) as u64;
        if y == x % n {
            break;
        }
    }
    out.sort_unstable();
    out
}

/// Partition of Z_n into cyclotomic cosets, ordered by representative.
pub fn cosets(n: u64, mult: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 || arith::gcd(n, mult) != 1 {
        return Err(Error::NotCoprime { n: mult, modulus: n });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x as usize] {
            continue;
        }
        let c = coset_of(x, n, mult);
        for &y in &c {
            seen[y as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Union of the cosets of each element of `xs`.
pub fn closure(xs: impl IntoIterator<Item = u64>, n: u64, mult: u64) -> Vec<u64> {
    let mut set = BTreeSet::new();
    for x in xs {
        set.extend(coset_of(x, n, mult));
    }
    set.into_iter().collect()
}

pub fn is_coset_closed(z: &[u64], n: u64, mult: u64) -> bool {
    let set: BTreeSet<u64> = z.iter().copied().collect();
    z.iter()
        .all(|&x| set.contains(&(((x as u128 * mult as u128) % n as u128) as u64)))
}

/// {-c·z mod n : z ∈ Z}.
fn scaled_negation(z: &[u64], n: u64, c: u64) -> BTreeSet<u64> {
    z.iter()
        .map(|&x| {
            let y = ((x as u128 * c as u128) % n as u128) as u64;
            (n - y) % n
        })
        .collect()
}

/// Whether the cyclic code over F_{q²} with defining set Z contains its
/// hermitian dual: Z ∩ Z^{-q} = ∅.
pub fn hermitian_self_orthogonal(z: &[u64], n: u64, q: u64) -> bool {
    let neg = scaled_negation(z, n, q);
    z.iter().all(|x| !neg.contains(x))
}

/// Whether the cyclic code with defining set Z contains its euclidean dual:
/// Z ∩ Z^{-1} = ∅.
pub fn euclidean_self_orthogonal(z: &[u64], n: u64) -> bool {
    let neg = scaled_negation(z, n, 1);
    z.iter().all(|x| !neg.contains(x))
}

#[derive(Clone, Debug)]
pub struct CyclicCode {
    n: usize,
    alphabet: Arc<Field>,
    defining_set: Vec<u64>,
    generator: Poly,
    ext: Arc<Field>,
    beta: Elem,
}

impl CyclicCode {
    /// The cyclic code of length n over `alphabet` whose generator vanishes
    /// exactly at β^z for z ∈ Z, with β the pinned primitive n-th root of unity.
    pub fn new(n: usize, alphabet: &Arc<Field>, z: &[u64]) -> Result<Self> {
        let p = alphabet.characteristic() as u64;
        if n == 0 || arith::gcd(n as u64, p) != 1 {
            return Err(Error::NotCoprime {
                n: n as u64,
                modulus: p,
            });
        }
        let q = alphabet.order() as u64;
        let mut z: Vec<u64> = z.iter().map(|&x| x % n as u64).collect();
        z.sort_unstable();
        z.dedup();
        if !is_coset_closed(&z, n as u64, q) {
            return Err(Error::NotCosetClosed {
                n: n as u64,
                multiplier: q,
            });
        }
        let (ext, beta) = alphabet.nth_root_of_unity(n as u64)?;
        let roots: Vec<Elem> = z.iter().map(|&x| ext.pow(beta, x)).collect();
        let g_ext = Poly::from_roots(ext.clone(), &roots);
        let emb = Embedding::new(alphabet, &ext)?;
        let coeffs = g_ext
            .coeffs()
            .iter()
            .map(|&c| emb.restrict(c))
            .collect::<Option<Vec<Elem>>>()
            .ok_or(Error::NotCosetClosed {
                n: n as u64,
                multiplier: q,
            })?;
        Ok(CyclicCode {
            n,
            alphabet: alphabet.clone(),
            defining_set: z,
            generator: Poly::new(alphabet.clone(), coeffs),
            ext,
            beta,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Arc<Field> {
        &self.alphabet
    }

    pub fn defining_set(&self) -> &[u64] {
        &self.defining_set
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// The splitting field holding β, and β itself.
    pub fn root(&self) -> (&Arc<Field>, Elem) {
        (&self.ext, self.beta)
    }

    pub fn dim(&self) -> usize {
        self.n - self.defining_set.len()
    }

    /// Generator matrix rows x^i g(x) for i < k.
    pub fn generator_rows(&self) -> Vec<Vec<Elem>> {
        let g = self.generator.coeffs();
        (0..self.dim())
            .map(|i| {
                let mut row = vec![0; self.n];
                row[i..i + g.len()].copy_from_slice(g);
                row
            })
            .collect()
    }

    pub fn to_linear_code(&self) -> LinearCode {
        LinearCode::new(self.alphabet.clone(), self.n, &self.generator_rows())
            .expect("generator rows have length n")
    }

    pub fn to_json(&self) -> CyclicJson {
        CyclicJson {
            n: self.n,
            field: self.alphabet.spec(),
            defining_set: self.defining_set.clone(),
            generator: self
                .generator
                .coeffs()
                .iter()
                .map(|&c| self.alphabet.elem_to_coeffs(c))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicJson {
    pub n: usize,
    pub field: FieldSpec,
    pub defining_set: Vec<u64>,
    /// Generator polynomial, lowest degree first.
    pub generator: Vec<Vec<u32>>,
}
