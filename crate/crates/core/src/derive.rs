//! Secondary constructions: new stabilizer codes from verified ones.
//!
//! All rules act on symplectic carriers. The trace-alternating picture over
//! F_{q²} used to state some of them is isometric to the symplectic one
//! coordinate by coordinate, so pairing, weights and sums carry over verbatim.
//!
//! Outputs carry the distance and purity their rule guarantees as lower
//! bounds; [`StabilizerCode::upgrade_distance`] replaces them by exact values
//! when enumeration is feasible.

use std::sync::Arc;

use crate::additive::{AdditiveCode, Flavor, Form};
use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field};
use crate::linalg::Echelon;
use crate::stabilizer::{Provenance, StabilizerCode};

/// Largest search effort spent looking for a self-dual basis.
const SELF_DUAL_BUDGET: usize = 1 << 20;

fn pure(code: &StabilizerCode) -> bool {
    code.is_pure() == Some(true)
}

/// Concatenates two symplectic words coordinate-wise in each half.
fn concat(u: &[Elem], n1: usize, v: &[Elem], n2: usize) -> Vec<Elem> {
    let mut w = Vec::with_capacity(2 * (n1 + n2));
    w.extend_from_slice(&u[..n1]);
    w.extend_from_slice(&v[..n2]);
    w.extend_from_slice(&u[n1..]);
    w.extend_from_slice(&v[n2..]);
    w
}

fn symplectic(field: &Arc<Field>, n: usize, gens: &[Vec<Elem>]) -> Result<AdditiveCode> {
    AdditiveCode::new(field.clone(), Flavor::Symplectic, n, None, gens)
}

/// [[n, k, d]] with k > 0 to an impure [[n+1, k, d]]: the carrier gains a
/// zero coordinate and the words (0…0α | 0…0) for α ∈ F_q.
pub fn lengthen(code: &StabilizerCode) -> Result<StabilizerCode> {
    if code.k_exp() == 0 {
        return Err(Error::ZeroDimensional);
    }
    let f = code.field();
    let n = code.n();
    let mut gens: Vec<Vec<Elem>> = code
        .carrier()
        .generators()
        .iter()
        .map(|g| concat(g, n, &[0, 0], 1))
        .collect();
    for alpha in f.basis() {
        let mut w = vec![0; 2 * (n + 1)];
        w[n] = alpha;
        gens.push(w);
    }
    let prov = Provenance::derived("lengthen", &[code.provenance()], &[]);
    StabilizerCode::assemble(symplectic(f, n + 1, &gens)?, code.distance().value, Some(1), None, prov)
}

/// Basis of the subspace of `code` vanishing on the given expanded columns.
fn vanishing_on(code: &AdditiveCode, cols: &[usize]) -> Vec<Vec<u32>> {
    let prime = code.prime_field().clone();
    let ncols = code.fp_basis().ncols();
    let mut perp = Echelon::from_rows(prime.clone(), ncols, code.fp_basis().nullspace());
    for &c in cols {
        let mut e = vec![0; ncols];
        e[c] = 1;
        perp.insert(e);
    }
    perp.nullspace()
}

/// Pure [[n, k, d]] with n ≥ 2, d ≥ 2 to a pure [[n-1, k+1, d-1]]: keeps the
/// stabilizer words vanishing on the first coordinate and deletes it.
pub fn shorten_pure(code: &StabilizerCode) -> Result<StabilizerCode> {
    if !pure(code) {
        return Err(Error::NotPure);
    }
    let n = code.n();
    let d = code.distance().value;
    if n < 2 || d < 2 {
        return Err(Error::TooShort);
    }
    let m = code.field().degree() as usize;
    let c = code.carrier();
    let drop: Vec<usize> = (0..m).chain(n * m..(n + 1) * m).collect();
    let rows = vanishing_on(c, &drop).into_iter().map(|r| {
        r.iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, &x)| x)
            .collect::<Vec<u32>>()
    });
    let carrier = c.with_rows(n - 1, rows);
    let prov = Provenance::derived("shorten", &[code.provenance()], &[]);
    StabilizerCode::assemble(carrier, d - 1, Some(d - 1), None, prov)
}

/// [[n, k, d]] with k ≥ 2, or pure with k ≥ 1, to [[n, k-1, ≥d]].
///
/// The stabilizer is enlarged by q: m times, the first echelon basis vector
/// of its current symplectic dual that is not yet in it is added. Purity is
/// preserved.
pub fn reduce_dim(code: &StabilizerCode) -> Result<StabilizerCode> {
    let m = code.field().degree() as usize;
    let is_pure = pure(code);
    if code.k_exp() < 2 * m && !(is_pure && code.k_exp() >= m) {
        return Err(Error::NoRoom);
    }
    let mut c = code.carrier().clone();
    for _ in 0..m {
        let dual = c.dual(Form::Symplectic)?;
        let v = dual
            .fp_basis()
            .rows()
            .iter()
            .find(|r| !c.fp_basis().contains(r))
            .cloned()
            .ok_or(Error::NoRoom)?;
        let mut rows = c.fp_basis().rows().to_vec();
        rows.push(v);
        c = c.from_fp_rows(rows);
    }
    let d = code.distance().value;
    let prov = Provenance::derived("reduce", &[code.provenance()], &[]);
    let pure_to = if is_pure { Some(d) } else { None };
    StabilizerCode::assemble(c, d, pure_to, None, prov)
}

/// ((n, K, d)) ⊕ ((n', K', d')) = ((n+n', KK', min(d, d'))).
pub fn direct_sum(x: &StabilizerCode, y: &StabilizerCode) -> Result<StabilizerCode> {
    if x.field() != y.field() {
        return Err(Error::MixedFields);
    }
    let (n1, n2) = (x.n(), y.n());
    let zero1 = vec![0; 2 * n1];
    let zero2 = vec![0; 2 * n2];
    let mut gens: Vec<Vec<Elem>> = x.carrier().generators().iter().map(|g| concat(g, n1, &zero2, n2)).collect();
    gens.extend(y.carrier().generators().iter().map(|g| concat(&zero1, n1, g, n2)));
    let d = x.distance().value.min(y.distance().value);
    let pure_to = match (x.pure_to(), y.pure_to()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        _ => None,
    };
    let prov = Provenance::derived("direct-sum", &[x.provenance(), y.provenance()], &[]);
    StabilizerCode::assemble(symplectic(x.field(), n1 + n2, &gens)?, d, pure_to, None, prov)
}

fn check_nested(q1: &StabilizerCode, q2: &StabilizerCode) -> Result<()> {
    if q1.field() != q2.field() {
        return Err(Error::MixedFields);
    }
    if q1.n() != q2.n() || !q1.carrier().is_subcode_of(q2.carrier())? {
        return Err(Error::NotNested);
    }
    if !pure(q1) || !pure(q2) {
        return Err(Error::NotPure);
    }
    Ok(())
}

/// Carrier {(u, u+v) : u ∈ U, v ∈ V}.
fn u_plus_v(field: &Arc<Field>, n: usize, u: &AdditiveCode, v: &AdditiveCode) -> Result<AdditiveCode> {
    let zero = vec![0; 2 * n];
    let mut gens: Vec<Vec<Elem>> = u.generators().iter().map(|g| concat(g, n, g, n)).collect();
    gens.extend(v.generators().iter().map(|g| concat(&zero, n, g, n)));
    symplectic(field, 2 * n, &gens)
}

/// Pure [[n, k1, d1]] ⊇ pure [[n, k2, d2]] to a pure [[2n, k1+k2, ≥min{2d2, d1}]].
///
/// `q1` is the larger quantum code, so its stabilizer lies inside that of `q2`.
pub fn nested_combine(q1: &StabilizerCode, q2: &StabilizerCode) -> Result<StabilizerCode> {
    check_nested(q1, q2)?;
    let n = q1.n();
    let carrier = u_plus_v(q1.field(), n, q1.carrier(), q2.carrier())?;
    let d = (2 * q2.distance().value).min(q1.distance().value);
    let prov = Provenance::derived("combine", &[q1.provenance(), q2.provenance()], &[]);
    StabilizerCode::assemble(carrier, d, Some(d), None, prov)
}

/// Over even characteristic, pure [[n, k1, d1]] ⊇ pure [[n, k2, d2]] with
/// k1 > k2 to a pure [[2n, k1-k2, ≥min{2d1, d2}]].
pub fn difference_combine(q1: &StabilizerCode, q2: &StabilizerCode) -> Result<StabilizerCode> {
    if q1.field().characteristic() != 2 {
        return Err(Error::OddCharacteristic);
    }
    check_nested(q1, q2)?;
    if q1.k_exp() <= q2.k_exp() {
        return Err(Error::BadParameters("the larger code must encode more".into()));
    }
    let n = q1.n();
    let carrier = u_plus_v(q1.field(), n, &q2.dual(), q1.carrier())?;
    let d = (2 * q1.distance().value).min(q2.distance().value);
    let prov = Provenance::derived("difference", &[q1.provenance(), q2.provenance()], &[]);
    StabilizerCode::assemble(carrier, d, Some(d), None, prov)
}

/// The map φ_B(a | b) = (e_B(a) | M e_B(b)) from F_{q^m}^{2n} to F_q^{2nm},
/// where e_B gives coordinates in the basis B and M = (tr(β_i β_j)) is its
/// Gram matrix under the relative trace. It preserves symplectic orthogonality.
pub struct FieldExpansion {
    ext: Arc<Field>,
    sub: Arc<Field>,
    emb: Arc<Embedding>,
    basis: Vec<Elem>,
    gram_inv: Vec<Vec<Elem>>,
}

impl FieldExpansion {
    /// Expansion of F_ext over its subfield of degree `sub_degree`, using
    /// `basis` if given, else a self-dual basis when one is found, else the
    /// powers of the primitive element.
    pub fn new(ext: &Arc<Field>, sub_degree: u32, basis: Option<&[Elem]>) -> Result<Self> {
        if sub_degree == 0 || ext.degree() % sub_degree != 0 {
            return Err(Error::NotASubfield { sub: sub_degree, m: ext.degree() });
        }
        let sub = Field::get(ext.characteristic(), sub_degree)?;
        let emb = Embedding::new(&sub, ext)?;
        let m = (ext.degree() / sub_degree) as usize;
        let basis = match basis {
            Some(b) => b.to_vec(),
            None => self_dual_basis(ext, sub_degree, m).unwrap_or_else(|| {
                let a = ext.primitive_element();
                (0..m as u64).map(|i| ext.pow(a, i)).collect()
            }),
        };
        if basis.len() != m || basis.iter().any(|&b| b >= ext.order()) {
            return Err(Error::NotABasis);
        }
        let mut exp = FieldExpansion {
            ext: ext.clone(),
            sub,
            emb,
            basis,
            gram_inv: Vec::new(),
        };
        let gram: Vec<Vec<Elem>> = (0..m)
            .map(|i| (0..m).map(|j| exp.rel_trace(ext.mul(exp.basis[i], exp.basis[j]))).collect())
            .collect();
        exp.gram_inv = invert(&exp.sub, &gram).ok_or(Error::NotABasis)?;
        Ok(exp)
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    pub fn subfield(&self) -> &Arc<Field> {
        &self.sub
    }

    /// Whether the Gram matrix is the identity.
    pub fn is_self_dual(&self) -> bool {
        self.gram_inv
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == u32::from(i == j)))
    }

    fn degree(&self) -> usize {
        self.basis.len()
    }

    fn rel_trace(&self, x: Elem) -> Elem {
        let t = self.ext.trace(x, self.sub.degree()).expect("subfield degree divides");
        self.emb.restrict(t).expect("relative trace lies in the subfield")
    }

    /// (tr(x β_i))_i.
    fn traces(&self, x: Elem) -> Vec<Elem> {
        self.basis.iter().map(|&b| self.rel_trace(self.ext.mul(x, b))).collect()
    }

    fn mat_vec(&self, v: &[Elem]) -> Vec<Elem> {
        let s = &self.sub;
        self.gram_inv
            .iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| s.add(acc, s.mul(a, b))))
            .collect()
    }

    fn combine(&self, coords: &[Elem]) -> Elem {
        coords.iter().zip(&self.basis).fold(0, |acc, (&c, &b)| {
            self.ext.add(acc, self.ext.mul(self.emb.embed(c), b))
        })
    }

    /// φ_B of a symplectic word of length n.
    pub fn apply(&self, word: &[Elem]) -> Vec<Elem> {
        let n = word.len() / 2;
        let mut a = Vec::with_capacity(n * self.degree());
        let mut b = Vec::with_capacity(n * self.degree());
        for k in 0..n {
            a.extend(self.mat_vec(&self.traces(word[k])));
            b.extend(self.traces(word[n + k]));
        }
        a.extend(b);
        a
    }

    /// φ_B^{-1} of a symplectic word of length nm.
    pub fn invert(&self, word: &[Elem]) -> Vec<Elem> {
        let m = self.degree();
        let half = word.len() / 2;
        let (a, b) = word.split_at(half);
        let mut out: Vec<Elem> = a.chunks(m).map(|c| self.combine(c)).collect();
        out.extend(b.chunks(m).map(|c| self.combine(&self.mat_vec(c))));
        out
    }
}

/// Inverse of a square matrix, if it is nonsingular.
fn invert(f: &Arc<Field>, mat: &[Vec<Elem>]) -> Option<Vec<Vec<Elem>>> {
    let m = mat.len();
    let rows = mat.iter().enumerate().map(|(i, r)| {
        let mut row = r.clone();
        row.extend((0..m).map(|j| u32::from(i == j)));
        row
    });
    let e = Echelon::from_rows(f.clone(), 2 * m, rows);
    if e.rank() != m || e.pivots().iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(e.rows().iter().map(|r| r[m..].to_vec()).collect())
}

/// A basis with tr(β_i β_j) = δ_ij, by depth-first search over elements in
/// encoding order, within a fixed budget.
fn self_dual_basis(ext: &Arc<Field>, sub_degree: u32, m: usize) -> Option<Vec<Elem>> {
    let sub = Field::get(ext.characteristic(), sub_degree).ok()?;
    let emb = Embedding::new(&sub, ext).ok()?;
    let tr = |x: Elem| emb.restrict(ext.trace(x, sub_degree).ok()?);
    let unit: Vec<Elem> = (1..ext.order()).filter(|&x| tr(ext.mul(x, x)) == Some(1)).collect();
    let mut budget = SELF_DUAL_BUDGET;
    fn dfs(
        ext: &Field,
        unit: &[Elem],
        tr: &dyn Fn(Elem) -> Option<Elem>,
        chosen: &mut Vec<Elem>,
        start: usize,
        m: usize,
        budget: &mut usize,
    ) -> bool {
        if chosen.len() == m {
            return true;
        }
        for i in start..unit.len() {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            let x = unit[i];
            if chosen.iter().all(|&c| tr(ext.mul(c, x)) == Some(0)) {
                chosen.push(x);
                if dfs(ext, unit, tr, chosen, i + 1, m, budget) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    dfs(ext, &unit, &tr, &mut chosen, 0, m, &mut budget).then_some(chosen)
}

/// ((n, K, d))_{q^m} to ((nm, K, ≥d))_q over the subfield of degree `sub_degree`.
pub fn expand_field(code: &StabilizerCode, sub_degree: u32, basis: Option<&[Elem]>) -> Result<StabilizerCode> {
    let exp = FieldExpansion::new(code.field(), sub_degree, basis)?;
    let m = exp.degree();
    let gens: Vec<Vec<Elem>> = code.carrier().generators().iter().map(|g| exp.apply(g)).collect();
    let carrier = symplectic(&exp.sub, code.n() * m, &gens)?;
    let prov = Provenance::derived("expand", &[code.provenance()], &[("m", m as i64)]);
    StabilizerCode::assemble(carrier, code.distance().value, code.pure_to(), None, prov)
}

/// ((nm, K, d))_q to ((n, K, ≥⌊d/m⌋))_{q^m} by inverting the expansion over
/// the extension of degree m.
pub fn contract_field(code: &StabilizerCode, m: u32, basis: Option<&[Elem]>) -> Result<StabilizerCode> {
    let f = code.field();
    let ext = Field::get(f.characteristic(), f.degree() * m)?;
    let exp = FieldExpansion::new(&ext, f.degree(), basis)?;
    let m = m as usize;
    if m == 0 || code.n() % m != 0 {
        return Err(Error::BadParameters(format!("length {} is not a multiple of {m}", code.n())));
    }
    let gens: Vec<Vec<Elem>> = code.carrier().generators().iter().map(|g| exp.invert(g)).collect();
    let carrier = symplectic(&ext, code.n() / m, &gens)?;
    let prov = Provenance::derived("contract", &[code.provenance()], &[("m", m as i64)]);
    StabilizerCode::assemble(carrier, (code.distance().value / m).max(1), None, None, prov)
}
