//! Krawtchouk polynomials, the symplectic MacWilliams transform and exact
//! bound predicates for stabilizer code parameters.
//!
//! Every check works with exact integers or rationals. A code with parameters
//! ((n, K, d))_q is described by its length, K = p^k_exp and d; the alphabet is
//! given as q, a prime power.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::additive::WeightEnumerator;
use crate::arith;
use crate::error::{Error, Result};
use crate::simplex;

/// Largest length accepted by the exact linear program.
pub const LP_MAX_LENGTH: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Singleton,
    HammingD3,
    HammingPure,
    Gv,
    GvLinear,
    MdsGv,
    Lp,
    Carlitz,
    MdsLength,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundKind::Singleton => "singleton",
            BoundKind::HammingD3 => "hamming-d3",
            BoundKind::HammingPure => "hamming-pure",
            BoundKind::Gv => "gv",
            BoundKind::GvLinear => "gv-linear",
            BoundKind::MdsGv => "mds-gv",
            BoundKind::Lp => "lp",
            BoundKind::Carlitz => "carlitz",
            BoundKind::MdsLength => "mds-length",
        };
        f.write_str(s)
    }
}

/// Outcome of a bound check.
///
/// `slack` is the bound's value minus the quantity it constrains, so a
/// satisfied non-strict bound has slack ≥ 0 and a satisfied strict one has
/// slack > 0. Predicates without a numeric margin carry no slack.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundVerdict {
    pub bound: BoundKind,
    pub satisfied: bool,
    #[serde(serialize_with = "ser_slack")]
    pub slack: Option<BigRational>,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn ser_slack<S: Serializer>(v: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl BoundVerdict {
    fn new(bound: BoundKind, satisfied: bool, slack: Option<BigRational>, inputs: &[(&str, String)]) -> Self {
        BoundVerdict {
            bound,
            satisfied,
            slack,
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Whether the bound is met with equality.
    pub fn is_tight(&self) -> bool {
        self.slack.as_ref().is_some_and(|s| s.is_zero())
    }
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// b^e for a possibly negative exponent.
fn rpow(b: u64, e: i64) -> BigRational {
    let base = BigInt::from(b);
    if e >= 0 {
        int(num_traits::pow(base, e as usize))
    } else {
        int(num_traits::pow(base, (-e) as usize)).recip()
    }
}

fn split_q(q: u64) -> Result<(u64, u32)> {
    arith::prime_power(q).ok_or_else(|| Error::BadParameters(format!("{q} is not a prime power")))
}

/// K_j(x) = Σ_s (-1)^s (q²-1)^{j-s} C(x,s) C(n-x, j-s), the Krawtchouk
/// polynomial of the Hamming scheme over an alphabet of size q².
pub fn krawtchouk(n: usize, q: u64, j: usize, x: usize) -> Result<BigInt> {
    if j > n || x > n {
        return Err(Error::OutOfRange(format!("need j, x ≤ n = {n}, got j = {j}, x = {x}")));
    }
    let qq = BigInt::from(q * q - 1);
    let mut sum = BigInt::zero();
    for s in 0..=j {
        let term = num_traits::pow(qq.clone(), j - s)
            * arith::binomial(x as i64, s as i64)
            * arith::binomial((n - x) as i64, (j - s) as i64);
        if s % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// All K_j(x), indexed [j][x].
pub fn krawtchouk_table(n: usize, q: u64) -> Vec<Vec<BigInt>> {
    (0..=n)
        .map(|j| (0..=n).map(|x| krawtchouk(n, q, j, x).expect("indices in range")).collect())
        .collect()
}

/// Symplectic weight enumerator of C^⊥s from that of C: B_j = |C|^{-1} Σ_x K_j(x) A_x.
pub fn macwilliams(a: &WeightEnumerator, n: usize, q: u64, size: u128) -> Result<WeightEnumerator> {
    let coeffs = a.coeffs();
    if coeffs.len() != n + 1 {
        return Err(Error::InconsistentSize {
            expected: format!("{} coefficients", n + 1),
            actual: format!("{} coefficients", coeffs.len()),
        });
    }
    if a.size() != size {
        return Err(Error::InconsistentSize {
            expected: size.to_string(),
            actual: a.size().to_string(),
        });
    }
    if size == 0 {
        return Err(Error::BadParameters("a code has at least one word".into()));
    }
    let table = krawtchouk_table(n, q);
    let size = BigInt::from(size);
    let mut out = Vec::with_capacity(n + 1);
    for (j, row) in table.iter().enumerate() {
        let s: BigInt = row.iter().zip(coeffs).map(|(k, &c)| k * BigInt::from(c)).sum();
        if !(&s % &size).is_zero() {
            return Err(Error::NonIntegerResult(j));
        }
        let b = s / &size;
        if b.is_negative() {
            return Err(Error::BadParameters(format!("transform is negative at weight {j}")));
        }
        out.push(b.to_u64().ok_or_else(|| Error::TooLarge(format!("coefficient at weight {j}")))?);
    }
    Ok(WeightEnumerator(out))
}

fn code_inputs(n: usize, k_exp: usize, d: usize, q: u64) -> Vec<(&'static str, String)> {
    vec![
        ("n", n.to_string()),
        ("K", format!("{}^{}", split_q(q).map_or(q, |(p, _)| p), k_exp)),
        ("d", d.to_string()),
        ("q", q.to_string()),
    ]
}

/// For K = 1 the bound is vacuous; a negative margin is then dropped.
fn vacuous_slack(k_exp: usize, slack: BigRational) -> Option<BigRational> {
    (k_exp > 0 || !slack.is_negative()).then_some(slack)
}

/// Quantum Singleton bound K ≤ q^{n-2d+2}; the code is MDS on equality.
///
/// Codes with K = 1 pass vacuously, but still count as MDS when K = q^{n-2d+2}.
pub fn singleton_check(n: usize, k_exp: usize, d: usize, q: u64) -> Result<BoundVerdict> {
    let (p, _) = split_q(q)?;
    let bound = rpow(q, n as i64 - 2 * d as i64 + 2);
    let k = rpow(p, k_exp as i64);
    let slack = vacuous_slack(k_exp, &bound - &k);
    let v = BoundVerdict::new(
        BoundKind::Singleton,
        slack.as_ref().map_or(true, |s| !s.is_negative()),
        slack,
        &code_inputs(n, k_exp, d, q),
    );
    Ok(if k_exp == 0 { v.with_note("K = 1: the bound does not constrain the code") } else { v })
}

/// (Singleton satisfied, MDS) for K = p^k_exp over F_{p^m}.
pub fn singleton_holds(n: usize, k_exp: usize, d: usize, p: u32, m: u32) -> (bool, bool) {
    let q = (p as u64).pow(m);
    let v = singleton_check(n, k_exp, d, q).expect("p^m is a prime power");
    (v.satisfied, v.is_tight())
}

/// Hamming bound for single-error-correcting codes: K ≤ q^n / (n(q²-1) + 1).
pub fn hamming_check_d3(n: usize, k_exp: usize, q: u64) -> Result<BoundVerdict> {
    let (p, _) = split_q(q)?;
    let bound = rpow(q, n as i64) / int(n as u64 * (q * q - 1) + 1);
    let slack = vacuous_slack(k_exp, &bound - rpow(p, k_exp as i64));
    let v = BoundVerdict::new(
        BoundKind::HammingD3,
        slack.as_ref().map_or(true, |s| !s.is_negative()),
        slack,
        &code_inputs(n, k_exp, 3, q),
    );
    Ok(if k_exp == 0 { v.with_note("K = 1: the bound does not constrain the code") } else { v })
}

/// Sphere packing for pure codes: Σ_{i ≤ ⌊(d-1)/2⌋} C(n,i)(q²-1)^i ≤ q^n / K.
pub fn hamming_pure(n: usize, k_exp: usize, d: usize, q: u64) -> Result<BoundVerdict> {
    let (p, _) = split_q(q)?;
    let t = d.saturating_sub(1) / 2;
    let volume: BigInt = (0..=t.min(n))
        .map(|i| arith::binomial(n as i64, i as i64) * num_traits::pow(BigInt::from(q * q - 1), i))
        .sum();
    let bound = rpow(q, n as i64) / rpow(p, k_exp as i64);
    let slack = bound - int(volume);
    Ok(BoundVerdict::new(
        BoundKind::HammingPure,
        !slack.is_negative(),
        Some(slack),
        &code_inputs(n, k_exp, d, q),
    ))
}

/// Σ_{j=1}^{d-1} C(n,j) (q²-1)^{j-shift}.
fn ball_sum(n: usize, d: usize, q: u64, shift: usize) -> BigInt {
    (1..d.min(n + 1))
        .map(|j| arith::binomial(n as i64, j as i64) * num_traits::pow(BigInt::from(q * q - 1), j - shift))
        .sum()
}

/// Gilbert-Varshamov existence test for ((n, K, ≥d))_q codes, K = p^k_exp > 1:
/// (q^n K - q^n/K) Σ_{j<d} C(n,j)(q²-1)^j < (q^{2n} - 1)(p - 1).
pub fn gv_exists(n: usize, k_exp: usize, d: usize, q: u64) -> Result<BoundVerdict> {
    let (p, m) = split_q(q)?;
    if k_exp == 0 || k_exp > n * m as usize {
        return Err(Error::BadParameters(format!("need 1 ≤ k_exp ≤ nm, got {k_exp}")));
    }
    let qn = rpow(q, n as i64);
    let k = rpow(p, k_exp as i64);
    let lhs = (&qn * &k - &qn / &k) * int(ball_sum(n, d, q, 0));
    let rhs = (rpow(q, 2 * n as i64) - int(1)) * int(p - 1);
    let slack = rhs - lhs;
    Ok(BoundVerdict::new(
        BoundKind::Gv,
        slack.is_positive(),
        Some(slack),
        &code_inputs(n, k_exp, d, q),
    ))
}

/// Existence test for F_{q²}-linear [[n, k, d]]_q codes, k ≥ 1 and n ≡ k mod 2:
/// (q^{n+k} - q^{n-k}) Σ_{j<d} C(n,j)(q²-1)^{j-1} < q^{2n} - 1.
pub fn gv_linear_exists(n: usize, k: usize, d: usize, q: u64) -> Result<BoundVerdict> {
    split_q(q)?;
    if k == 0 || k > n || (n - k) % 2 != 0 {
        return Err(Error::BadParameters(format!(
            "need 1 ≤ k ≤ n and n ≡ k mod 2, got n = {n}, k = {k}"
        )));
    }
    let lhs = (rpow(q, (n + k) as i64) - rpow(q, n as i64 - k as i64)) * int(ball_sum(n, d, q, 1));
    let rhs = rpow(q, 2 * n as i64) - int(1);
    let slack = rhs - lhs;
    Ok(BoundVerdict::new(
        BoundKind::GvLinear,
        slack.is_positive(),
        Some(slack),
        &[
            ("n", n.to_string()),
            ("k", k.to_string()),
            ("d", d.to_string()),
            ("q", q.to_string()),
        ],
    ))
}

/// Existence of a linear [[n, n-2d+2, d]]_q code when 2 ≤ d ≤ ⌈n/2⌉ and q²-1 ≥ C(n,d).
pub fn mds_gv_exists(n: usize, d: usize, q: u64) -> Result<BoundVerdict> {
    split_q(q)?;
    if d < 2 || d > n.div_ceil(2) {
        return Err(Error::BadParameters(format!("need 2 ≤ d ≤ ⌈n/2⌉, got n = {n}, d = {d}")));
    }
    let slack = int(q * q - 1) - int(arith::binomial(n as i64, d as i64));
    Ok(BoundVerdict::new(
        BoundKind::MdsGv,
        !slack.is_negative(),
        Some(slack),
        &[("n", n.to_string()), ("d", d.to_string()), ("q", q.to_string())],
    ))
}

/// Result of the linear-programming test.
#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    /// A rational enumerator A_0..A_n meeting every linear constraint.
    Feasible(Vec<BigRational>),
    /// No stabilizer code with these parameters exists.
    Infeasible,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }

    /// For an integral witness, whether every A_j (j ≥ 1) is a multiple of p - 1.
    pub fn witness_divisible(&self, p: u64) -> Option<bool> {
        match self {
            LpOutcome::Feasible(w) if w.iter().all(|a| a.is_integer()) => Some(
                w.iter()
                    .skip(1)
                    .all(|a| (a.to_integer() % BigInt::from(p - 1)).is_zero()),
            ),
            _ => None,
        }
    }
}

/// The linear constraints on the stabilizer's enumerator A_1..A_n, with slack
/// variables s_j (j ≥ max(d,1)) for the inequalities A_j ≤ B_j.
fn lp_system(n: usize, k_exp: usize, d: usize, q: u64) -> Result<(Vec<Vec<BigRational>>, Vec<BigRational>)> {
    let (p, m) = split_q(q)?;
    if k_exp > n * m as usize {
        return Err(Error::BadParameters(format!("K = {p}^{k_exp} exceeds q^n")));
    }
    let size = rpow(p, (n * m as usize - k_exp) as i64);
    let table = krawtchouk_table(n, q);
    let first_ineq = d.max(1);
    let nslack = (n + 1).saturating_sub(first_ineq);
    let width = n + nslack;
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut total = vec![BigRational::zero(); width];
    for v in total.iter_mut().take(n) {
        *v = BigRational::one();
    }
    a.push(total);
    b.push(&size - int(1));
    for j in 1..=n {
        let mut row = vec![BigRational::zero(); width];
        for r in 1..=n {
            row[r - 1] = -int(table[j][r].clone());
        }
        row[j - 1] += &size;
        if j >= first_ineq {
            row[n + j - first_ineq] = BigRational::one();
        }
        a.push(row);
        b.push(int(table[j][0].clone()));
    }
    Ok((a, b))
}

/// Exact feasibility of the linear program on the weight distribution of the
/// stabilizer of an ((n, p^k_exp, d))_q code.
///
/// Infeasibility proves that no such code exists; feasibility proves nothing.
/// The divisibility of A_j by p - 1 is not imposed; see
/// [`LpOutcome::witness_divisible`]. For K = 1 the distance is the minimum
/// weight of the stabilizer, under which the same constraints still hold.
pub fn lp_feasible(n: usize, k_exp: usize, d: usize, q: u64) -> Result<LpOutcome> {
    if n > LP_MAX_LENGTH {
        return Err(Error::TooLarge(format!("length {n} exceeds {LP_MAX_LENGTH}")));
    }
    let (a, b) = lp_system(n, k_exp, d, q)?;
    Ok(match simplex::feasible_point(&a, &b) {
        Some(x) => {
            let mut w = vec![BigRational::one()];
            w.extend(x.into_iter().take(n));
            LpOutcome::Feasible(w)
        }
        None => LpOutcome::Infeasible,
    })
}

/// Whether a given enumerator A_0..A_n meets the linear constraints.
pub fn lp_admits(n: usize, k_exp: usize, d: usize, q: u64, a: &[BigRational]) -> Result<bool> {
    if a.len() != n + 1 || a[0] != BigRational::one() || a.iter().any(|x| x.is_negative()) {
        return Ok(false);
    }
    let (rows, rhs) = lp_system(n, k_exp, d, q)?;
    let first_ineq = d.max(1);
    Ok(rows.iter().zip(&rhs).enumerate().all(|(i, (row, bi))| {
        let s: BigRational = row.iter().zip(&a[1..]).map(|(u, v)| u * v).sum();
        let gap = bi - s;
        if i == 0 || i < first_ineq {
            gap.is_zero()
        } else {
            !gap.is_negative()
        }
    }))
}

pub fn lp_check(n: usize, k_exp: usize, d: usize, q: u64) -> Result<BoundVerdict> {
    let (p, _) = split_q(q)?;
    let out = lp_feasible(n, k_exp, d, q)?;
    let note = match out.witness_divisible(p) {
        Some(true) => "feasible with an integral witness divisible by p-1; not a proof of existence",
        Some(false) => "feasible; the integral witness found is not divisible by p-1",
        None if out.is_feasible() => "feasible over the rationals; not a proof of existence",
        None => "infeasible: no stabilizer code with these parameters exists",
    };
    Ok(BoundVerdict::new(BoundKind::Lp, out.is_feasible(), None, &code_inputs(n, k_exp, d, q)).with_note(note))
}

/// Lower bound on the minimum distance of the euclidean dual of a narrow-sense
/// primitive BCH code over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarlitzBound {
    /// The right-hand side evaluated exactly.
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    /// ⌈max(value, 0)⌉, the certified integer bound.
    pub bound: u64,
    /// The formula gives nothing (value ≤ 0).
    pub trivial: bool,
}

fn ser_rational<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// (1 - 1/p)(p^m - ((δ - 2 - [δ-1 ≡ 0 mod p]) / 2) ⌊2 p^{m/2}⌋) for odd δ ≥ 3.
pub fn carlitz_uchiyama(p: u64, m: u32, delta: u64) -> Result<CarlitzBound> {
    if !arith::is_prime(p) {
        return Err(Error::BadParameters(format!("{p} is not prime")));
    }
    if m == 0 || delta < 3 || delta % 2 == 0 {
        return Err(Error::BadParameters(format!("need m ≥ 1 and odd δ ≥ 3, got m = {m}, δ = {delta}")));
    }
    let pm = (p as u128)
        .checked_pow(m)
        .filter(|&v| v < (1u128 << 100))
        .ok_or_else(|| Error::BadParameters(format!("{p}^{m} is too large")))?;
    let bracket = u64::from((delta - 1) % p == 0);
    let root = arith::isqrt(4 * pm);
    let coeff = BigRational::new(BigInt::from(delta - 2 - bracket), BigInt::from(2));
    let value = (int(1) - BigRational::new(1.into(), BigInt::from(p)))
        * (int(BigInt::from(pm)) - coeff * int(BigInt::from(root)));
    let trivial = !value.is_positive();
    let bound = if trivial { 0 } else { value.ceil().to_integer().to_u64().unwrap_or(u64::MAX) };
    Ok(CarlitzBound { value, bound, trivial })
}

/// Whether an [[n, n-2d+2, d]]_q MDS code is permitted by the length and
/// distance constraints, optionally sharpened by the classical MDS conjecture.
/// Codes with d ≤ 2 are trivial and always permitted.
pub fn mds_constraints(n: usize, d: usize, q: u64, assume_conjecture: bool) -> Result<BoundVerdict> {
    let (p, _) = split_q(q)?;
    let (n_i, d_i, q2) = (n as i64, d as i64, (q * q) as i64);
    let inputs = [
        ("n", n.to_string()),
        ("d", d.to_string()),
        ("q", q.to_string()),
        ("conjecture", assume_conjecture.to_string()),
    ];
    if n_i - 2 * d_i + 2 < 0 {
        return Ok(BoundVerdict::new(BoundKind::MdsLength, false, None, &inputs).with_note("n < 2d - 2"));
    }
    if d <= 2 {
        return Ok(BoundVerdict::new(BoundKind::MdsLength, true, None, &inputs).with_note("trivial code"));
    }
    let mut failed = Vec::new();
    if !(4 <= n_i && n_i <= q2 + d_i - 2) {
        failed.push("4 ≤ n ≤ q²+d-2");
    }
    if !(d_i >= 3.max(n_i - q2 + 2) && d_i <= (n_i - 1).min(q2)) {
        failed.push("max{3, n-q²+2} ≤ d ≤ min{n-1, q²}");
    }
    if assume_conjecture {
        let exception = p == 2 && (d_i == 4 || d_i == q2);
        let max_len = if exception { q2 + 2 } else { q2 + 1 };
        if n_i > max_len {
            failed.push(if exception { "n ≤ q²+2" } else { "n ≤ q²+1" });
        }
    }
    let v = BoundVerdict::new(BoundKind::MdsLength, failed.is_empty(), None, &inputs);
    Ok(if failed.is_empty() { v } else { v.with_note(format!("violates {}", failed.join("; "))) })
}
