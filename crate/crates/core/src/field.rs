//! Finite fields F_{p^m} in polynomial-basis representation.
//!
//! An element is stored as a `u32` whose base-p digits are the coefficients of
//! its polynomial representative, lowest degree first. The defining polynomial
//! is the lexicographically smallest monic irreducible of degree m over F_p
//! (comparing coefficient vectors from the top coefficient down), so element
//! encodings are reproducible. This is not the Conway-polynomial convention.
//!
//! Fields are interned: [`Field::get`] returns the same `Arc` for the same
//! `(p, m)`, which keeps subfield embeddings and lazily built tables shared.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;
/// Largest degree for which the trial-division irreducibility test is run.
pub const MAX_DEGREE: u32 = 12;
const LOG_TABLE_LIMIT: u32 = 1 << 20;
const ADD_TABLE_LIMIT: u32 = 1 << 8;

/// Element of some [`Field`]; meaningful only together with its field.
pub type Elem = u32;

struct LogTables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    irreducible: Vec<u32>,
    pow_p: Vec<u32>,
    trace_basis: Vec<u32>,
    tables: OnceLock<Option<LogTables>>,
    add_table: OnceLock<Option<Vec<u32>>>,
    primitive: OnceLock<Elem>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.irreducible == other.irreducible
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.m)
    }
}

/// Serialized field description; coefficients low-to-high.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub irreducible: Vec<u32>,
}

fn registry() -> &'static Mutex<HashMap<(u32, u32), Arc<Field>>> {
    static REG: OnceLock<Mutex<HashMap<(u32, u32), Arc<Field>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    /// The field F_{p^m}, built on first use and shared afterwards.
    pub fn get(p: u32, m: u32) -> Result<Arc<Field>> {
        if !arith::is_prime(p as u64) {
            return Err(Error::NonPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64).checked_pow(m);
        if m > MAX_DEGREE || order.map_or(true, |o| o > MAX_FIELD_ORDER) {
            return Err(Error::FieldTooLarge { p: p as u64, m });
        }
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(f) = reg.get(&(p, m)) {
            return Ok(f.clone());
        }
        let field = Arc::new(Field::build(p, m));
        reg.insert((p, m), field.clone());
        Ok(field)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Arc<Field>> {
        let (p, m) = arith::prime_power(q)
            .ok_or_else(|| Error::BadParameters(format!("{q} is not a prime power")))?;
        Field::get(p as u32, m)
    }

    /// Rebuilds a field from its serialized form, checking the polynomial.
    pub fn from_spec(spec: &FieldSpec) -> Result<Arc<Field>> {
        let f = Field::get(spec.p, spec.m)?;
        if f.irreducible != spec.irreducible {
            return Err(Error::Malformed(format!(
                "field polynomial {:?} differs from the canonical {:?}",
                spec.irreducible, f.irreducible
            )));
        }
        Ok(f)
    }

    fn build(p: u32, m: u32) -> Field {
        let irreducible = smallest_irreducible(p, m);
        let mut pow_p = Vec::with_capacity(m as usize + 1);
        let mut acc = 1u32;
        for _ in 0..=m {
            pow_p.push(acc);
            acc = acc.wrapping_mul(p);
        }
        let q = pow_p[m as usize];
        let mut f = Field {
            p,
            m,
            q,
            irreducible,
            pow_p,
            trace_basis: Vec::new(),
            tables: OnceLock::new(),
            add_table: OnceLock::new(),
            primitive: OnceLock::new(),
        };
        let trace_basis = (0..m)
            .map(|t| {
                let x = f.pow_p[t as usize];
                let tr = f.frobenius_sum(x, 1, m);
                debug_assert!(tr < p, "absolute trace must lie in the prime field");
                tr
            })
            .collect();
        f.trace_basis = trace_basis;
        f
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            m: self.m,
            irreducible: self.irreducible.clone(),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn irreducible(&self) -> &[u32] {
        &self.irreducible
    }

    /// The polynomial-basis generator x (equal to 0 in a prime field, whose polynomial is x).
    pub fn generator(&self) -> Elem {
        if self.m == 1 {
            0
        } else {
            self.p
        }
    }

    /// The F_p-basis {1, x, ..., x^{m-1}} as elements.
    pub fn basis(&self) -> Vec<Elem> {
        self.pow_p[..self.m as usize].to_vec()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn digits(&self, a: Elem) -> impl Iterator<Item = u32> + '_ {
        let p = self.p;
        let mut rest = a;
        (0..self.m).map(move |_| {
            let d = rest % p;
            rest /= p;
            d
        })
    }

    pub fn write_digits(&self, a: Elem, out: &mut [u32]) {
        let mut rest = a;
        for slot in out.iter_mut().take(self.m as usize) {
            *slot = rest % self.p;
            rest /= self.p;
        }
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        digits
            .iter()
            .take(self.m as usize)
            .rev()
            .fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    /// Validates and converts a coefficient array to an element.
    pub fn elem_from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Malformed(format!(
                "{coeffs:?} is not an element of GF({}^{})",
                self.p, self.m
            )));
        }
        Ok(self.from_digits(coeffs))
    }

    pub fn elem_to_coeffs(&self, a: Elem) -> Vec<u32> {
        self.digits(a).collect()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if let Some(t) = self.add_table() {
            return t[(a * self.q + b) as usize];
        }
        self.add_digits(a, b)
    }

    fn add_digits(&self, a: Elem, b: Elem) -> Elem {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for t in 0..self.m as usize {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * self.pow_p[t];
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn add_table(&self) -> Option<&Vec<u32>> {
        self.add_table
            .get_or_init(|| {
                if self.q > ADD_TABLE_LIMIT {
                    return None;
                }
                let q = self.q;
                let mut t = vec![0; (q * q) as usize];
                for a in 0..q {
                    for b in 0..q {
                        t[(a * q + b) as usize] = self.add_digits(a, b);
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        self.scale(self.p - 1, a)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplies by a prime-field scalar.
    pub fn scale(&self, c: u32, a: Elem) -> Elem {
        let c = c % self.p;
        if c == 0 {
            return 0;
        }
        if c == 1 {
            return a;
        }
        if self.m == 1 {
            return ((c as u64 * a as u64) % self.p as u64) as u32;
        }
        let mut rest = a;
        let mut out = 0;
        for t in 0..self.m as usize {
            out += ((rest % self.p) * c % self.p) * self.pow_p[t];
            rest /= self.p;
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        match self.tables() {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => self.mul_slow(a, b),
        }
    }

    fn tables(&self) -> Option<&LogTables> {
        self.tables
            .get_or_init(|| {
                if self.q > LOG_TABLE_LIMIT {
                    return None;
                }
                let g = self.primitive_element();
                let n = (self.q - 1) as usize;
                let mut exp = vec![0u32; 2 * n];
                let mut log = vec![0u32; self.q as usize];
                let mut x = 1;
                for i in 0..n {
                    exp[i] = x;
                    exp[i + n] = x;
                    log[x as usize] = i as u32;
                    x = self.mul_slow(x, g);
                }
                Some(LogTables { log, exp })
            })
            .as_ref()
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let m = self.m as usize;
        let p = self.p as u64;
        let da: Vec<u64> = self.digits(a).map(u64::from).collect();
        let db: Vec<u64> = self.digits(b).map(u64::from).collect();
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (m..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            // x^m = -(f_0 + ... + f_{m-1} x^{m-1})
            for (t, &f) in self.irreducible[..m].iter().enumerate() {
                let idx = deg - m + t;
                prod[idx] = (prod[idx] + (p - c) * f as u64) % p;
            }
            prod[deg] = 0;
        }
        prod[..m]
            .iter()
            .enumerate()
            .map(|(t, &c)| c as u32 * self.pow_p[t])
            .sum()
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = self.tables() {
            let n = (self.q - 1) as u64;
            let l = (t.log[a as usize] as u64 * (e % n)) % n;
            return t.exp[l as usize];
        }
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        if let Some(t) = self.tables() {
            let n = self.q - 1;
            return Some(t.exp[((n - t.log[a as usize]) % n) as usize]);
        }
        Some(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// a^{p^k}.
    pub fn frobenius(&self, a: Elem, k: u32) -> Elem {
        let mut x = a;
        for _ in 0..k {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Sum of x^{p^{step*k}} for k = 0..count.
    pub fn frobenius_sum(&self, x: Elem, step: u32, count: u32) -> Elem {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..count {
            acc = self.add(acc, y);
            y = self.frobenius(y, step);
        }
        acc
    }

    /// tr_{F_{p^m}/F_{p^sub}}(x), returned as an element of this field lying in the subfield.
    pub fn trace(&self, x: Elem, sub: u32) -> Result<Elem> {
        if sub == 0 || self.m % sub != 0 {
            return Err(Error::NotASubfield { sub, m: self.m });
        }
        Ok(self.frobenius_sum(x, sub, self.m / sub))
    }

    /// Absolute trace tr_{q/p}(x) as an integer in [0, p).
    #[inline]
    pub fn trace_prime(&self, x: Elem) -> u32 {
        if self.m == 1 {
            return x;
        }
        let mut rest = x;
        let mut acc = 0u64;
        for &t in &self.trace_basis {
            acc += (rest % self.p) as u64 * t as u64;
            rest /= self.p;
        }
        (acc % self.p as u64) as u32
    }

    /// Whether `a` lies in the subfield of degree `sub`.
    pub fn in_subfield(&self, a: Elem, sub: u32) -> bool {
        self.frobenius(a, sub) == a
    }

    /// Smallest element (in encoding order) generating the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        *self.primitive.get_or_init(|| {
            if self.q == 2 {
                return 1;
            }
            let n = (self.q - 1) as u64;
            let factors = arith::prime_factors(n);
            (1..self.q)
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&r| self.pow_by_squaring(g, n / r) != 1)
                })
                .expect("a finite field has a primitive element")
        })
    }

    fn pow_by_squaring(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_any(acc, base);
            }
            base = self.mul_any(base, base);
            e >>= 1;
        }
        acc
    }

    fn mul_any(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else if self.m == 1 {
            ((a as u64 * b as u64) % self.p as u64) as u32
        } else {
            self.mul_slow(a, b)
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> u64 {
        assert!(a != 0, "zero has no multiplicative order");
        let n = (self.q - 1) as u64;
        let mut ord = n;
        for r in arith::prime_factors(n) {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// A primitive n-th root of unity in the smallest extension of this field that holds one.
    ///
    /// Returns the extension F_{q^t}, t = ord_n(q), and β = γ^{(q^t-1)/n} for the
    /// canonical primitive element γ of the extension.
    pub fn nth_root_of_unity(self: &Arc<Self>, n: u64) -> Result<(Arc<Field>, Elem)> {
        if n == 0 || arith::gcd(n, self.p as u64) != 1 {
            return Err(Error::NotCoprime {
                n,
                modulus: self.p as u64,
            });
        }
        let t = arith::multiplicative_order(self.q as u64 % n.max(1), n) as u32;
        let ext = Field::get(self.p, self.m * t)?;
        let gamma = ext.primitive_element();
        let beta = ext.pow(gamma, (ext.q as u64 - 1) / n);
        Ok((ext, beta))
    }

    /// Normal element β of F_{q²} over F_q, q = p^{m/2}: the smallest nonzero element
    /// with β, β^q linearly independent over F_q.
    pub fn normal_element(&self) -> Result<Elem> {
        if self.m % 2 != 0 {
            return Err(Error::NotASubfield { sub: self.m / 2, m: self.m });
        }
        let half = self.m / 2;
        let q = self.p.pow(half) as u64;
        Ok((1..self.q)
            .find(|&b| {
                let y = self.pow(b, q - 1);
                !self.in_subfield(y, half)
            })
            .expect("a normal basis always exists"))
    }
}

/// Embedding of a subfield F_{p^a} into F_{p^b}, a | b.
///
/// The base generator x is sent to the smallest root (in encoding order) of the
/// base field polynomial inside the extension.
pub struct Embedding {
    pub base: Arc<Field>,
    pub ext: Arc<Field>,
    images: Vec<Elem>,
    preimages: HashMap<Elem, Elem>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({:?} -> {:?})", self.base, self.ext)
    }
}

impl Embedding {
    pub fn new(base: &Arc<Field>, ext: &Arc<Field>) -> Result<Arc<Embedding>> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32, u32), Arc<Embedding>>>> = OnceLock::new();
        if base.p != ext.p {
            return Err(Error::MixedFields);
        }
        if ext.m % base.m != 0 {
            return Err(Error::NotASubfield {
                sub: base.m,
                m: ext.m,
            });
        }
        let key = (base.p, base.m, ext.m);
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(e) = cache.lock().expect("embedding cache poisoned").get(&key) {
            return Ok(e.clone());
        }
        let root = if base.m == 1 {
            0
        } else {
            (0..ext.q)
                .find(|&y| {
                    // base polynomial has prime-field coefficients, which embed as themselves
                    let mut acc = 0;
                    for &c in base.irreducible.iter().rev() {
                        acc = ext.add(ext.mul(acc, y), c);
                    }
                    acc == 0
                })
                .expect("the extension contains a root of every subfield polynomial")
        };
        let mut root_pows = Vec::with_capacity(base.m as usize);
        let mut x = 1;
        for _ in 0..base.m {
            root_pows.push(x);
            x = ext.mul(x, root);
        }
        let images: Vec<Elem> = (0..base.q)
            .map(|a| {
                base.digits(a)
                    .zip(&root_pows)
                    .fold(0, |acc, (d, &r)| ext.add(acc, ext.scale(d, r)))
            })
            .collect();
        let preimages = images.iter().enumerate().map(|(a, &y)| (y, a as Elem)).collect();
        let emb = Arc::new(Embedding {
            base: base.clone(),
            ext: ext.clone(),
            images,
            preimages,
        });
        cache
            .lock()
            .expect("embedding cache poisoned")
            .insert(key, emb.clone());
        Ok(emb)
    }

    #[inline]
    pub fn embed(&self, a: Elem) -> Elem {
        self.images[a as usize]
    }

    /// Pulls an extension element back to the subfield, if it lies there.
    #[inline]
    pub fn restrict(&self, y: Elem) -> Option<Elem> {
        self.preimages.get(&y).copied()
    }
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let total = (p as u64).pow(m);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut rest = idx;
        for _ in 0..m {
            coeffs.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        coeffs.push(1);
        if coeffs[0] != 0 && fp_is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree 1..=deg/2 over F_p.
pub(crate) fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                g.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            g.push(1);
            if fp_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn fp_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for top in (dg..r.len()).rev() {
        let c = r[top] % p;
        if c == 0 {
            continue;
        }
        for (t, &gc) in g.iter().enumerate() {
            let idx = top - dg + t;
            r[idx] = (r[idx] + (p - c) * gc as u64) % p;
        }
    }
    r[..dg].iter().all(|&c| c % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_polynomials() {
        assert_eq!(Field::get(2, 1).unwrap().irreducible(), &[0, 1]);
        assert_eq!(Field::get(2, 2).unwrap().irreducible(), &[1, 1, 1]);
        assert_eq!(Field::get(3, 2).unwrap().irreducible(), &[1, 0, 1]);
        assert_eq!(Field::get(2, 4).unwrap().irreducible(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn guards() {
        assert_eq!(Field::get(4, 1).unwrap_err(), Error::NonPrime(4));
        assert!(matches!(Field::get(2, 25), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(Field::get(3, 13), Err(Error::FieldTooLarge { .. })));
        assert_eq!(Field::get(2, 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn f4_trace_of_alpha_is_one() {
        let f = Field::get(2, 2).unwrap();
        let alpha = f.generator();
        assert_eq!(f.mul(alpha, alpha), f.add(alpha, 1));
        assert_eq!(f.trace(alpha, 1).unwrap(), 1);
        assert_eq!(f.trace(0, 1).unwrap(), 0);
        assert_eq!(f.trace_prime(alpha), 1);
        assert!(matches!(f.trace(alpha, 3), Err(Error::NotASubfield { .. })));
    }

    #[test]
    fn f9_trace_is_balanced() {
        let f = Field::get(3, 2).unwrap();
        let mut counts = [0; 3];
        for x in f.elements() {
            let t = f.trace(x, 1).unwrap();
            assert!(t < 3);
            counts[t as usize] += 1;
        }
        assert_eq!(counts, [3, 3, 3]);
    }

    #[test]
    fn normal_elements() {
        let f4 = Field::get(2, 2).unwrap();
        assert_eq!(f4.normal_element().unwrap(), f4.generator());
        let f9 = Field::get(3, 2).unwrap();
        let b = f9.normal_element().unwrap();
        // exhaustive check that it is the first independent pair
        for c in 1..b {
            let bq = f9.pow(c, 3);
            assert!((0..3).any(|l| f9.scale(l, c) == bq));
        }
        let bq = f9.pow(b, 3);
        assert!((0..3).all(|l| f9.scale(l, b) != bq));
        assert!(!f9.in_subfield(b, 1));
    }

    #[test]
    fn roots_of_unity() {
        let f4 = Field::get(2, 2).unwrap();
        let (ext, beta) = f4.nth_root_of_unity(5).unwrap();
        assert_eq!(ext.order(), 16);
        assert_eq!(ext.element_order(beta), 5);
        assert_eq!(beta, ext.pow(ext.primitive_element(), 3));
        let f2 = Field::get(2, 1).unwrap();
        let (ext, beta) = f2.nth_root_of_unity(1).unwrap();
        assert_eq!((ext.order(), beta), (2, 1));
        let f3 = Field::get(3, 1).unwrap();
        let (ext, beta) = f3.nth_root_of_unity(23).unwrap();
        assert_eq!(ext.degree(), 11);
        assert_eq!(ext.element_order(beta), 23);
        assert!(matches!(f3.nth_root_of_unity(6), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        let f4 = Field::get(2, 2).unwrap();
        let f16 = Field::get(2, 4).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(e.embed(f4.add(a, b)), f16.add(e.embed(a), e.embed(b)));
                assert_eq!(e.embed(f4.mul(a, b)), f16.mul(e.embed(a), e.embed(b)));
            }
            assert_eq!(e.restrict(e.embed(a)), Some(a));
        }
        let same = Embedding::new(&f4, &f4).unwrap();
        assert!(f4.elements().all(|a| same.embed(a) == a));
    }
}
