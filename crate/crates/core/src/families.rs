//! Constructors for the stabilizer code families.

use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::arith;
use crate::cyclic::{self, CyclicCode};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linear::LinearCode;
use crate::stabilizer::{ClassicalSource, Provenance, StabilizerCode};

fn field_of_order(q: u64) -> Result<Arc<Field>> {
    Field::of_order(q)
}

fn square_field(q: u64) -> Result<Arc<Field>> {
    let f = field_of_order(q)?;
    Field::get(f.characteristic(), 2 * f.degree())
}

fn upow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .ok_or_else(|| Error::TooLarge(format!("{q}^{e} overflows")))
}

/// The pure [[n, n-2m, 3]]_q code from the Hamming code over F_{q²} containing
/// its hermitian dual, n = (q^{2m}-1)/(q²-1).
pub fn quantum_hamming_hermitian(q: u64, m: u32) -> Result<StabilizerCode> {
    let f2 = square_field(q)?;
    if m < 2 || arith::gcd(m as u64, q * q - 1) != 1 {
        return Err(Error::BadParameters(format!(
            "need m ≥ 2 and gcd(m, q²-1) = 1, got q = {q}, m = {m}"
        )));
    }
    let n = (upow(q, 2 * m)? - 1) / (q * q - 1);
    let z = cyclic::coset_of(1, n, q * q);
    debug_assert!(cyclic::hermitian_self_orthogonal(&z, n, q));
    let b = CyclicCode::new(n as usize, &f2, &z)?.to_linear_code();
    let mut code = StabilizerCode::hermitian(
        &b,
        3,
        Provenance::new("hamming-h", &[("q", q as i64), ("m", m as i64)]),
    )?;
    code.set_pure_to(Some(3));
    Ok(code)
}

/// The pure [[n, n-2m, 3]]_q CSS code from a Hamming code containing its
/// euclidean dual, n = (q^m-1)/(q-1).
pub fn quantum_hamming_euclidean(q: u64, m: u32) -> Result<StabilizerCode> {
    let f = field_of_order(q)?;
    if m < 2 || arith::gcd(m as u64, q - 1) != 1 {
        return Err(Error::BadParameters(format!(
            "need m ≥ 2 and gcd(m, q-1) = 1, got q = {q}, m = {m}"
        )));
    }
    let n = (upow(q, m)? - 1) / (q - 1);
    let z = cyclic::coset_of(1, n, q);
    if !cyclic::euclidean_self_orthogonal(&z, n) {
        return Err(Error::BadParameters(format!(
            "the Hamming code of length {n} does not contain its euclidean dual"
        )));
    }
    let h = CyclicCode::new(n as usize, &f, &z)?.to_linear_code();
    let mut code = StabilizerCode::css(
        &h,
        &h,
        3,
        Provenance::new("hamming-e", &[("q", q as i64), ("m", m as i64)]),
    )?;
    code.set_pure_to(Some(3));
    Ok(code)
}

/// Smallest d with d² - d + 1 ≥ n.
fn qr_bound_3mod4(n: u64) -> usize {
    (1..).find(|&d: &u64| d * d - d + 1 >= n).unwrap() as usize
}

/// ⌈√n⌉.
fn ceil_sqrt(n: u64) -> usize {
    let r = arith::isqrt(n as u128) as u64;
    (if r * r == n { r } else { r + 1 }) as usize
}

/// Quadratic residue CSS code [[n, 1, d]]_q for a prime n with q a residue mod n.
pub fn quantum_qr(q: u64, n: u64) -> Result<StabilizerCode> {
    let f = field_of_order(q)?;
    if !arith::is_prime(n) || n == 2 {
        return Err(Error::NotPrime(n));
    }
    if n == f.characteristic() as u64 {
        return Err(Error::NotCoprime { n, modulus: q });
    }
    let residues = arith::quadratic_residues(n);
    if !residues.contains(&(q % n)) {
        return Err(Error::NotResidue { q, n });
    }
    let non_residues: Vec<u64> = (1..n).filter(|x| !residues.contains(x)).collect();
    let c_r = CyclicCode::new(n as usize, &f, &residues)?.to_linear_code();
    let prov = Provenance::new("qr", &[("q", q as i64), ("n", n as i64)]);
    if n % 4 == 3 {
        StabilizerCode::css(&c_r, &c_r, qr_bound_3mod4(n), prov)
    } else {
        let c_n = CyclicCode::new(n as usize, &f, &non_residues)?.to_linear_code();
        StabilizerCode::css(&c_r, &c_n, ceil_sqrt(n), prov)
    }
}

/// Quantum Melas code [[q^{2m}-1, q^{2m}-1-4m, ≥3]]_q for even q.
pub fn quantum_melas(q: u64, m: u32) -> Result<StabilizerCode> {
    let f2 = square_field(q)?;
    if q % 2 != 0 {
        return Err(Error::BadParameters(format!("Melas codes need even q, got {q}")));
    }
    let n = upow(q, 2 * m)? - 1;
    if m == 0 || n <= 4 * m as u64 {
        return Err(Error::BadParameters(format!("n - 4m must be positive (q = {q}, m = {m})")));
    }
    let z = cyclic::closure([1, n - 1], n, q * q);
    if !cyclic::hermitian_self_orthogonal(&z, n, q) {
        return Err(Error::BadParameters("Melas defining set is not disjoint from its conjugate".into()));
    }
    let b = CyclicCode::new(n as usize, &f2, &z)?.to_linear_code();
    let mut code = StabilizerCode::hermitian(
        &b,
        3,
        Provenance::new("melas", &[("q", q as i64), ("m", m as i64)]),
    )?;
    code.set_pure_to(Some(3));
    Ok(code)
}

/// Largest design distance for which the primitive narrow-sense BCH code of
/// length q^m - 1 contains its euclidean dual.
pub fn bch_euclidean_max_delta(q: u64, m: u32) -> Result<u64> {
    let odd = (m % 2) as u64;
    Ok(upow(q, m.div_ceil(2))? - 1 - (q - 2) * odd)
}

/// Narrow-sense defining set ∪_{x=1}^{δ-1} C_x.
pub fn bch_defining_set(n: u64, mult: u64, delta: u64) -> Vec<u64> {
    cyclic::closure(1..delta, n, mult)
}

/// Primitive narrow-sense BCH code B_q^m(δ) over F_q.
pub fn bch_code(q: u64, m: u32, delta: u64) -> Result<CyclicCode> {
    let f = field_of_order(q)?;
    let n = upow(q, m)? - 1;
    CyclicCode::new(n as usize, &f, &bch_defining_set(n, q, delta))
}

/// Euclidean BCH CSS code [[q^m-1, q^m-1-2m⌈(δ-1)(1-1/q)⌉, ≥δ]]_q.
pub fn quantum_bch_euclidean(q: u64, m: u32, delta: u64) -> Result<StabilizerCode> {
    field_of_order(q)?;
    if m < 2 {
        return Err(Error::BadParameters("euclidean BCH needs m ≥ 2".into()));
    }
    let hi = bch_euclidean_max_delta(q, m)?;
    if delta < 2 || delta > hi {
        return Err(Error::DeltaOutOfRange { delta, lo: 2, hi });
    }
    let bch = bch_code(q, m, delta)?;
    let n = bch.n() as u64;
    if !cyclic::euclidean_self_orthogonal(bch.defining_set(), n) {
        return Err(Error::DeltaOutOfRange { delta, lo: 2, hi });
    }
    let b = bch.to_linear_code();
    let mut code = StabilizerCode::css(
        &b,
        &b,
        delta as usize,
        Provenance::new(
            "bch-e",
            &[("q", q as i64), ("m", m as i64), ("delta", delta as i64)],
        ),
    )?;
    code.set_pure_to(Some(delta as usize));
    Ok(code)
}

/// Hermitian BCH code [[q^{2m}-1, q^{2m}-1-2m⌈(δ-1)(1-1/q²)⌉, ≥δ]]_q.
pub fn quantum_bch_hermitian(q: u64, m: u32, delta: u64) -> Result<StabilizerCode> {
    let f2 = square_field(q)?;
    let hi = upow(q, m)? - 1;
    if m == 0 || delta < 2 || delta > hi {
        return Err(Error::DeltaOutOfRange { delta, lo: 2, hi });
    }
    let n = upow(q, 2 * m)? - 1;
    let z = bch_defining_set(n, q * q, delta);
    if !cyclic::hermitian_self_orthogonal(&z, n, q) {
        return Err(Error::DeltaOutOfRange { delta, lo: 2, hi });
    }
    let b = CyclicCode::new(n as usize, &f2, &z)?.to_linear_code();
    let mut code = StabilizerCode::hermitian(
        &b,
        delta as usize,
        Provenance::new(
            "bch-h",
            &[("q", q as i64), ("m", m as i64), ("delta", delta as i64)],
        ),
    )?;
    code.set_pure_to(Some(delta as usize));
    Ok(code)
}

/// Extends a hermitian code by an overall parity coordinate: [[n+1, k-1, ≥d+1]].
pub fn extend_bch(code: &StabilizerCode) -> Result<StabilizerCode> {
    let Some(ClassicalSource::Hermitian { code: b, .. }) = code.source() else {
        return Err(Error::NotExtendable(
            "the code has no hermitian classical source".into(),
        ));
    };
    let f = b.field();
    let p = f.characteristic() as usize;
    let n = b.n();
    if (n + 1) % p != 0 {
        return Err(Error::NotExtendable(format!("length {n} is not -1 mod {p}")));
    }
    let rows: Vec<Vec<Elem>> = b
        .generator_matrix()
        .iter()
        .map(|r| {
            let s = r.iter().fold(0, |acc, &x| f.add(acc, x));
            let mut e = r.clone();
            e.push(f.neg(s));
            e
        })
        .collect();
    let be = LinearCode::new(f.clone(), n + 1, &rows)?;
    let mut prov = code.provenance().clone();
    prov.history.push(prov.construction.clone());
    prov.construction = "bch-ext".into();
    let claimed = code.d_claimed() + 1;
    let mut ext = StabilizerCode::hermitian(&be, claimed, prov).map_err(|e| match e {
        Error::NestingViolated { .. } => {
            Error::NotExtendable("the extended code does not contain its hermitian dual".into())
        }
        other => other,
    })?;
    ext.set_pure_to(code.pure_to().map(|t| t + 1));
    Ok(ext)
}

/// k(r) = Σ_{j ≤ r} C(m, j).
pub fn character_dim(m: u32, r: u32) -> u64 {
    (0..=r.min(m))
        .map(|j| arith::binomial(m as i64, j as i64).to_u64().unwrap())
        .sum()
}

/// The character code C_q(r, m) of length 2^m spanned by y ↦ (-1)^{x·y}, wt(y) ≤ r.
pub fn character_code(q: u64, r: u32, m: u32) -> Result<LinearCode> {
    let f = field_of_order(q)?;
    if q % 2 == 0 {
        return Err(Error::BadParameters("character codes need odd q".into()));
    }
    if r > m || m > 20 {
        return Err(Error::BadParameters(format!("need 0 ≤ r ≤ m ≤ 20, got r = {r}, m = {m}")));
    }
    let n = 1usize << m;
    let minus = f.neg(1);
    let rows: Vec<Vec<Elem>> = (0..n as u32)
        .filter(|y| y.count_ones() <= r)
        .map(|y| {
            (0..n as u32)
                .map(|x| if (x & y).count_ones() % 2 == 0 { 1 } else { minus })
                .collect()
        })
        .collect();
    LinearCode::new(f, n, &rows)
}

/// [[2^m, k(r2) - k(r1), min{2^{m-r2}, 2^{r1+1}}]]_q from nested character codes.
pub fn quantum_character(q: u64, m: u32, r1: u32, r2: u32) -> Result<StabilizerCode> {
    if r1 >= r2 || r2 > m {
        return Err(Error::BadParameters(format!(
            "need 0 ≤ r1 < r2 ≤ m, got r1 = {r1}, r2 = {r2}, m = {m}"
        )));
    }
    let c1 = character_code(q, r2, m)?;
    let c2 = character_code(q, r1, m)?.euclidean_dual();
    let d = (1usize << (m - r2)).min(1usize << (r1 + 1));
    let mut code = StabilizerCode::css(
        &c1,
        &c2,
        d,
        Provenance::new(
            "character",
            &[("q", q as i64), ("m", m as i64), ("r1", r1 as i64), ("r2", r2 as i64)],
        ),
    )?;
    code.set_pure_to(Some(d));
    Ok(code)
}
