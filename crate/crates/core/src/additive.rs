//! Additive codes: F_p-linear subspaces of F_q^{2n}, F_{q²}^n or F_q^n.
//!
//! Every symbol is expanded into its m base-p digits and the code is kept as a
//! reduced echelon basis over F_p in those coordinates, so membership, duals
//! and subcode tests are plain F_p linear algebra.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::enumerate::{self, Execution, ScanResult, Space};
use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field, FieldSpec};
use crate::linalg::Echelon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Words (a|b) in F_q^{2n}, weighted by symplectic weight.
    Symplectic,
    /// Words in F_{q²}^n with a fixed normal element β, Hamming weight.
    Qsquare,
    /// Words in F_q^n, Hamming weight.
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// tr_{q/p}(b·a' - b'·a) on F_q^{2n}.
    Symplectic,
    /// tr_{q/p}((v·w^q - v^q·w)/(β^{2q} - β²)) on F_{q²}^n.
    Alternating,
    /// Σ v^q·w on F_{q²}^n; needs an F_{q²}-linear code.
    Hermitian,
    /// Σ v·w; needs an F-linear code.
    Euclidean,
    /// tr(Σ v·w) on any additive code.
    TraceEuclidean,
}

/// Minimum weight of a set difference; `Infinite` when the difference is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinWeight {
    Finite(usize),
    Infinite,
}

impl MinWeight {
    pub fn finite(self) -> Option<usize> {
        match self {
            MinWeight::Finite(w) => Some(w),
            MinWeight::Infinite => None,
        }
    }
}

/// Weight histogram A_0..A_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator(pub Vec<u64>);

impl WeightEnumerator {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn size(&self) -> u128 {
        self.0.iter().map(|&c| c as u128).sum()
    }
}

#[derive(Clone)]
pub struct AdditiveCode {
    field: Arc<Field>,
    prime: Arc<Field>,
    flavor: Flavor,
    n: usize,
    beta: Option<Elem>,
    basis: Echelon,
}

impl std::fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "AdditiveCode({:?}, {:?}, n={}, rank={})",
            self.field,
            self.flavor,
            self.n,
            self.basis.rank()
        )
    }
}

impl PartialEq for AdditiveCode {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other).is_ok()
            && self.rank() == other.rank()
            && self.is_subcode_of(other).unwrap_or(false)
    }
}

fn symbols_for(flavor: Flavor, n: usize) -> usize {
    match flavor {
        Flavor::Symplectic => 2 * n,
        _ => n,
    }
}

impl AdditiveCode {
    /// Builds the F_p-span of `generators`.
    ///
    /// For the q-square flavor `beta` defaults to the field's normal element.
    pub fn new(
        field: Arc<Field>,
        flavor: Flavor,
        n: usize,
        beta: Option<Elem>,
        generators: &[Vec<Elem>],
    ) -> Result<Self> {
        let mut code = AdditiveCode::zero(field, flavor, n, beta)?;
        let rows: Result<Vec<_>> = generators.iter().map(|g| code.expand_checked(g)).collect();
        for r in rows? {
            code.basis.insert(r);
        }
        Ok(code)
    }

    pub fn zero(field: Arc<Field>, flavor: Flavor, n: usize, beta: Option<Elem>) -> Result<Self> {
        let beta = match flavor {
            Flavor::Qsquare => {
                let b = match beta {
                    Some(b) => b,
                    None => field.normal_element()?,
                };
                let half = field.degree() / 2;
                let q = (field.characteristic() as u64).pow(half);
                if field.degree() % 2 != 0 || field.in_subfield(field.pow(b, q - 1), half) {
                    return Err(Error::BadParameters(
                        "β and β^q must form a normal basis".into(),
                    ));
                }
                Some(b)
            }
            _ => None,
        };
        let prime = Field::get(field.characteristic(), 1)?;
        let ncols = symbols_for(flavor, n) * field.degree() as usize;
        Ok(AdditiveCode {
            basis: Echelon::new(prime.clone(), ncols),
            field,
            prime,
            flavor,
            n,
            beta,
        })
    }

    pub fn full(field: Arc<Field>, flavor: Flavor, n: usize, beta: Option<Elem>) -> Result<Self> {
        let mut c = AdditiveCode::zero(field, flavor, n, beta)?;
        c.basis = Echelon::full(c.prime.clone(), c.basis.ncols());
        Ok(c)
    }

    /// Builds a code from rows already in expanded F_p coordinates.
    pub fn from_fp_rows(&self, rows: impl IntoIterator<Item = Vec<u32>>) -> AdditiveCode {
        let mut c = self.clone();
        c.basis = Echelon::from_rows(self.prime.clone(), self.basis.ncols(), rows);
        c
    }

    /// A code over the same alphabet with a different length.
    pub fn with_rows(&self, n: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> AdditiveCode {
        let ncols = symbols_for(self.flavor, n) * self.m();
        AdditiveCode {
            field: self.field.clone(),
            prime: self.prime.clone(),
            flavor: self.flavor,
            n,
            beta: self.beta,
            basis: Echelon::from_rows(self.prime.clone(), ncols, rows),
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn prime_field(&self) -> &Arc<Field> {
        &self.prime
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> Option<Elem> {
        self.beta
    }

    pub fn symbols(&self) -> usize {
        symbols_for(self.flavor, self.n)
    }

    fn m(&self) -> usize {
        self.field.degree() as usize
    }

    /// Dimension over F_p; the code has p^rank words.
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn fp_basis(&self) -> &Echelon {
        &self.basis
    }

    /// The F_p-basis as symbol vectors.
    pub fn generators(&self) -> Vec<Vec<Elem>> {
        self.basis.rows().iter().map(|r| self.collapse(r)).collect()
    }

    pub fn expand(&self, word: &[Elem]) -> Vec<u32> {
        let m = self.m();
        let mut out = vec![0; word.len() * m];
        for (chunk, &a) in out.chunks_mut(m).zip(word) {
            self.field.write_digits(a, chunk);
        }
        out
    }

    fn expand_checked(&self, word: &[Elem]) -> Result<Vec<u32>> {
        if word.len() != self.symbols() {
            return Err(Error::MixedAmbient);
        }
        if word.iter().any(|&a| a >= self.field.order()) {
            return Err(Error::Malformed("symbol outside the field".into()));
        }
        Ok(self.expand(word))
    }

    pub fn collapse(&self, digits: &[u32]) -> Vec<Elem> {
        digits
            .chunks(self.m())
            .map(|c| self.field.from_digits(c))
            .collect()
    }

    pub fn contains(&self, word: &[Elem]) -> Result<bool> {
        Ok(self.basis.contains(&self.expand_checked(word)?))
    }

    pub fn same_ambient(&self, other: &AdditiveCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.flavor != other.flavor || self.n != other.n {
            return Err(Error::MixedAmbient);
        }
        Ok(())
    }

    pub fn is_subcode_of(&self, other: &AdditiveCode) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.basis.is_subspace_of(&other.basis))
    }

    /// Sum of two codes in the same ambient space.
    pub fn sum(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        self.same_ambient(other)?;
        let mut c = self.clone();
        for r in other.basis.rows() {
            c.basis.insert(r.clone());
        }
        Ok(c)
    }

    /// Weight of a word: symplectic weight for the symplectic flavor, Hamming otherwise.
    pub fn weight(&self, word: &[Elem]) -> usize {
        match self.flavor {
            Flavor::Symplectic => {
                let n = self.n;
                (0..n).filter(|&j| word[j] != 0 || word[n + j] != 0).count()
            }
            _ => word.iter().filter(|&&x| x != 0).count(),
        }
    }

    /// Weight group of each expanded coordinate.
    pub fn groups(&self) -> Vec<u32> {
        let m = self.m();
        (0..self.basis.ncols())
            .map(|c| {
                let s = c / m;
                match self.flavor {
                    Flavor::Symplectic => (s % self.n) as u32,
                    _ => s as u32,
                }
            })
            .collect()
    }

    fn check_form(&self, form: Form) -> Result<()> {
        let ok = match form {
            Form::Symplectic => self.flavor == Flavor::Symplectic,
            Form::Alternating => self.flavor == Flavor::Qsquare,
            Form::Hermitian => self.flavor != Flavor::Symplectic && self.field.degree() % 2 == 0,
            Form::Euclidean | Form::TraceEuclidean => self.flavor != Flavor::Symplectic,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::MixedAmbient)
        }
    }

    /// Value in F_p contributed by symbol j of a word v = y·e_j.
    fn symbol_term(&self, form: Form, u: &[Elem], j: usize, y: Elem) -> u32 {
        let f = &self.field;
        match form {
            Form::Symplectic => {
                let n = self.n;
                if j < n {
                    f.trace_prime(f.mul(u[n + j], y))
                } else {
                    f.trace_prime(f.neg(f.mul(u[j - n], y)))
                }
            }
            Form::Alternating => {
                let half = f.degree() / 2;
                let q = (f.characteristic() as u64).pow(half);
                let b = self.beta.expect("q-square codes carry β");
                let delta = f.sub(f.pow(b, 2 * q), f.mul(b, b));
                let v = u[j];
                let num = f.sub(f.mul(v, f.pow(y, q)), f.mul(f.pow(v, q), y));
                let z = f.div(num, delta).expect("β^{2q} ≠ β²");
                f.frobenius_sum(z, 1, half)
            }
            Form::Hermitian => {
                let q = (f.characteristic() as u64).pow(f.degree() / 2);
                f.trace_prime(f.mul(f.pow(u[j], q), y))
            }
            Form::Euclidean | Form::TraceEuclidean => f.trace_prime(f.mul(u[j], y)),
        }
    }

    /// The F_p-valued pairing of two words (for hermitian and euclidean forms,
    /// the absolute trace of the inner product).
    pub fn trace_form(&self, u: &[Elem], v: &[Elem], form: Form) -> Result<u32> {
        self.check_form(form)?;
        if u.len() != self.symbols() || v.len() != self.symbols() {
            return Err(Error::MixedAmbient);
        }
        let p = self.field.characteristic() as u64;
        let s: u64 = (0..self.symbols())
            .filter(|&j| v[j] != 0)
            .map(|j| self.symbol_term(form, u, j, v[j]) as u64)
            .sum();
        Ok((s % p) as u32)
    }

    fn functional(&self, form: Form, u: &[Elem]) -> Vec<u32> {
        let m = self.m();
        let mut out = vec![0; self.basis.ncols()];
        for j in 0..self.symbols() {
            for t in 0..m {
                let y = self.field.basis()[t];
                out[j * m + t] = self.symbol_term(form, u, j, y);
            }
        }
        out
    }

    /// Closed under multiplication by the field generator, hence F-linear.
    pub fn is_linear(&self) -> bool {
        if self.field.degree() == 1 {
            return true;
        }
        let x = self.field.generator();
        self.generators().iter().all(|g| {
            let scaled: Vec<Elem> = g.iter().map(|&a| self.field.mul(a, x)).collect();
            self.basis.contains(&self.expand(&scaled))
        })
    }

    /// The dual under `form`, computed as an F_p kernel.
    pub fn dual(&self, form: Form) -> Result<AdditiveCode> {
        self.check_form(form)?;
        if matches!(form, Form::Hermitian | Form::Euclidean) && !self.is_linear() {
            return Err(Error::NotLinear);
        }
        let funcs = self.generators().iter().map(|g| self.functional(form, g)).collect::<Vec<_>>();
        let ker = Echelon::from_rows(self.prime.clone(), self.basis.ncols(), funcs).nullspace();
        Ok(self.from_fp_rows(ker))
    }

    /// First pair of basis generators (by index) that pair nontrivially, if any.
    pub fn self_orthogonality_witness(&self, form: Form) -> Result<Option<(usize, usize, u32)>> {
        self.check_form(form)?;
        let gens = self.generators();
        for (i, u) in gens.iter().enumerate() {
            let func = self.functional(form, u);
            for (j, r) in self.basis.rows().iter().enumerate().skip(i) {
                let p = self.field.characteristic() as u64;
                let v = func
                    .iter()
                    .zip(r)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % p;
                if v != 0 {
                    return Ok(Some((i, j, v as u32)));
                }
            }
        }
        Ok(None)
    }

    fn scan_with(&self, sub: Option<&AdditiveCode>, exec: Execution) -> Result<ScanResult> {
        let (rows, marked) = match sub {
            None => (self.basis.rows().to_vec(), 0),
            Some(s) => {
                self.same_ambient(s)?;
                if !s.basis.is_subspace_of(&self.basis) {
                    return Err(Error::NotASubcode);
                }
                let comp = s.basis.complement_in(&self.basis);
                let marked = comp.len();
                let mut rows = comp;
                rows.extend(s.basis.rows().iter().cloned());
                (rows, marked)
            }
        };
        let groups = self.groups();
        let space = Space {
            p: self.field.characteristic(),
            rows: &rows,
            marked,
            groups: &groups,
            ngroups: self.n,
        };
        enumerate::scan(&space, exec)
    }

    /// Exhaustive weight distribution.
    pub fn weight_enumerator(&self, exec: Execution) -> Result<WeightEnumerator> {
        Ok(WeightEnumerator(self.scan_with(None, exec)?.total()))
    }

    /// Histograms of `sub` and of `self \ sub`.
    pub fn scan_difference(&self, sub: &AdditiveCode, exec: Execution) -> Result<ScanResult> {
        self.scan_with(Some(sub), exec)
    }

    /// Minimum weight over `self \ sub`.
    pub fn min_weight_in_difference(&self, sub: &AdditiveCode, exec: Execution) -> Result<MinWeight> {
        let res = self.scan_with(Some(sub), exec)?;
        Ok(res.min_outer().map_or(MinWeight::Infinite, MinWeight::Finite))
    }

    /// Minimum weight over the nonzero words.
    pub fn min_weight(&self, exec: Execution) -> Result<MinWeight> {
        let res = self.scan_with(None, exec)?;
        Ok(res
            .min_inner_nonzero()
            .map_or(MinWeight::Infinite, MinWeight::Finite))
    }

    /// Lexicographically smallest word of the given weight.
    pub fn find_weight_word(&self, weight: usize, exec: Execution) -> Result<Option<Vec<Elem>>> {
        let rows = self.basis.rows().to_vec();
        let groups = self.groups();
        let space = Space {
            p: self.field.characteristic(),
            rows: &rows,
            marked: 0,
            groups: &groups,
            ngroups: self.n,
        };
        let found = enumerate::find_weight(&space, weight, |d| self.collapse(d), exec)?;
        Ok(found.map(|d| self.collapse(&d)))
    }

    /// Converts a symplectic code to the q-square ambient through φ.
    pub fn to_qsquare(&self, beta: Option<Elem>) -> Result<AdditiveCode> {
        if self.flavor != Flavor::Symplectic {
            return Err(Error::MixedAmbient);
        }
        let phi = Phi::new(&self.field, beta)?;
        let gens: Vec<Vec<Elem>> = self
            .generators()
            .iter()
            .map(|g| phi.apply(&g[..self.n], &g[self.n..]))
            .collect();
        AdditiveCode::new(phi.ext.clone(), Flavor::Qsquare, self.n, Some(phi.beta), &gens)
    }

    /// Converts a q-square code back to the symplectic ambient through φ^{-1}.
    pub fn to_symplectic(&self) -> Result<AdditiveCode> {
        if self.flavor != Flavor::Qsquare {
            return Err(Error::MixedAmbient);
        }
        let sub = Field::get(self.field.characteristic(), self.field.degree() / 2)?;
        let phi = Phi::new(&sub, self.beta)?;
        let gens: Vec<Vec<Elem>> = self
            .generators()
            .iter()
            .map(|g| {
                let (mut a, b) = phi.invert(g);
                a.extend(b);
                a
            })
            .collect();
        AdditiveCode::new(sub, Flavor::Symplectic, self.n, None, &gens)
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            field: self.field.spec(),
            flavor: self.flavor,
            n: self.n,
            beta: self.beta.map(|b| self.field.elem_to_coeffs(b)),
            generators: self
                .generators()
                .iter()
                .map(|g| g.iter().map(|&a| self.field.elem_to_coeffs(a)).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &CodeJson) -> Result<AdditiveCode> {
        let field = Field::from_spec(&j.field)?;
        let beta = j.beta.as_ref().map(|b| field.elem_from_coeffs(b)).transpose()?;
        let gens = j
            .generators
            .iter()
            .map(|g| g.iter().map(|c| field.elem_from_coeffs(c)).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        AdditiveCode::new(field, j.flavor, j.n, beta, &gens)
    }
}

/// Serialized additive code; elements are coefficient arrays, low-to-high.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldSpec,
    pub flavor: Flavor,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<u32>>,
    pub generators: Vec<Vec<Vec<u32>>>,
}

/// Symplectic weight of (a|b).
pub fn swt(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(&x, &y)| x != 0 || y != 0).count()
}

/// The isometry φ(a|b) = βa + β^q b from F_q^{2n} to F_{q²}^n.
pub struct Phi {
    pub sub: Arc<Field>,
    pub ext: Arc<Field>,
    pub beta: Elem,
    beta_q: Elem,
    det_inv: Elem,
    emb: Arc<Embedding>,
}

impl Phi {
    pub fn new(sub: &Arc<Field>, beta: Option<Elem>) -> Result<Phi> {
        let ext = Field::get(sub.characteristic(), 2 * sub.degree())?;
        let beta = match beta {
            Some(b) => b,
            None => ext.normal_element()?,
        };
        let q = sub.order() as u64;
        let beta_q = ext.pow(beta, q);
        let det = ext.sub(ext.mul(beta, beta), ext.mul(beta_q, beta_q));
        let det_inv = ext.inv(det).ok_or_else(|| {
            Error::BadParameters("β and β^q must form a normal basis".into())
        })?;
        let emb = Embedding::new(sub, &ext)?;
        Ok(Phi {
            sub: sub.clone(),
            ext,
            beta,
            beta_q,
            det_inv,
            emb,
        })
    }

    pub fn apply(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let e = &self.ext;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| {
                e.add(
                    e.mul(self.beta, self.emb.embed(x)),
                    e.mul(self.beta_q, self.emb.embed(y)),
                )
            })
            .collect()
    }

    pub fn invert(&self, v: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let e = &self.ext;
        let q = self.sub.order() as u64;
        v.iter()
            .map(|&x| {
                let xq = e.pow(x, q);
                let a = e.mul(e.sub(e.mul(x, self.beta), e.mul(xq, self.beta_q)), self.det_inv);
                let b = e.mul(e.sub(e.mul(xq, self.beta), e.mul(x, self.beta_q)), self.det_inv);
                (
                    self.emb.restrict(a).expect("φ^{-1} lands in the subfield"),
                    self.emb.restrict(b).expect("φ^{-1} lands in the subfield"),
                )
            })
            .unzip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, m: u32) -> Arc<Field> {
        Field::get(p, m).unwrap()
    }

    #[test]
    fn symplectic_weight() {
        assert_eq!(swt(&[0, 0], &[0, 0]), 0);
        assert_eq!(swt(&[1, 0], &[0, 1]), 2);
        assert_eq!(swt(&[1, 1, 0], &[1, 0, 0]), 2);
    }

    #[test]
    fn symplectic_form_examples() {
        let c = AdditiveCode::zero(f(2, 1), Flavor::Symplectic, 1, None).unwrap();
        assert_eq!(c.trace_form(&[1, 0], &[0, 1], Form::Symplectic).unwrap(), 1);
        let c4 = AdditiveCode::zero(f(2, 2), Flavor::Symplectic, 1, None).unwrap();
        let a = f(2, 2).generator();
        assert_eq!(c4.trace_form(&[a, 0], &[0, a], Form::Symplectic).unwrap(), 1);
        assert_eq!(c4.trace_form(&[a, 3], &[a, 3], Form::Symplectic).unwrap(), 0);
    }

    #[test]
    fn phi_examples_over_f2() {
        let phi = Phi::new(&f(2, 1), None).unwrap();
        let alpha = f(2, 2).generator();
        assert_eq!(phi.beta, alpha);
        assert_eq!(phi.apply(&[0], &[0]), vec![0]);
        assert_eq!(phi.apply(&[1], &[0]), vec![alpha]);
        assert_eq!(phi.apply(&[0], &[1]), vec![f(2, 2).mul(alpha, alpha)]);
        assert_eq!(phi.apply(&[1], &[1]), vec![1]);
        for v in 0..4 {
            let (a, b) = phi.invert(&[v]);
            assert_eq!(phi.apply(&a, &b), vec![v]);
        }
    }

    #[test]
    fn dual_of_zero_is_everything() {
        let z = AdditiveCode::zero(f(3, 2), Flavor::Symplectic, 2, None).unwrap();
        assert_eq!(z.dual(Form::Symplectic).unwrap().rank(), 8);
        let z = AdditiveCode::zero(f(2, 2), Flavor::Qsquare, 2, None).unwrap();
        assert_eq!(z.dual(Form::Alternating).unwrap().rank(), 4);
    }

    #[test]
    fn full_space_enumerator() {
        let c = AdditiveCode::full(f(2, 1), Flavor::Symplectic, 1, None).unwrap();
        assert_eq!(c.weight_enumerator(Execution::Sequential).unwrap().0, vec![1, 3]);
        let z = AdditiveCode::zero(f(3, 1), Flavor::Symplectic, 3, None).unwrap();
        assert_eq!(z.weight_enumerator(Execution::Sequential).unwrap().0, vec![1, 0, 0, 0]);
        assert_eq!(
            z.min_weight_in_difference(&z, Execution::Sequential).unwrap(),
            MinWeight::Infinite
        );
    }

    #[test]
    fn hermitian_dual_needs_linearity() {
        let f4 = f(2, 2);
        let c = AdditiveCode::new(f4.clone(), Flavor::Qsquare, 2, None, &[vec![1, 1]]).unwrap();
        assert_eq!(c.dual(Form::Hermitian).unwrap_err(), Error::NotLinear);
        assert!(c.dual(Form::Alternating).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let f9 = f(3, 2);
        let c = AdditiveCode::new(f9, Flavor::Symplectic, 2, None, &[vec![1, 4, 0, 7], vec![0, 2, 5, 5]])
            .unwrap();
        let j = c.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back = AdditiveCode::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
