//! Puncture codes and puncturing of stabilizer codes to shorter lengths.
//!
//! For an additive C ⊆ F_q^{2n} the puncture code P_s(C) ⊆ F_q^n is the trace
//! dual of the span of the cross products (b_k a'_k - b'_k a_k)_k. Any word x
//! of weight r in it shortens the stabilizer code to length r: the carrier
//! {(a | bx)} restricted to supp(x) stays self-orthogonal.

use std::sync::Arc;

use serde::Serialize;

use crate::additive::{AdditiveCode, Flavor, Form};
use crate::enumerate::{self, Execution};
use crate::error::{Error, Result};
use crate::families;
use crate::field::{Elem, Field};
use crate::grm;
use crate::linalg::Echelon;
use crate::linear::LinearCode;
use crate::stabilizer::{ClassicalSource, Provenance, StabilizerCode};

/// Largest number of generator pairs multiplied out when forming a product span.
const MAX_PAIRS: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PunctureKind {
    /// P_s(C) of a symplectic carrier.
    Symplectic,
    /// pc_e(C) = {ab | a, b ∈ C}^⊥ of a code over F_q.
    Euclidean,
}

/// The BCH parameters a puncture code was derived from, enabling the
/// structured search through generalized Reed-Muller words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct BchOrigin {
    q: u64,
    m: u32,
    mu_max: u64,
}

#[derive(Clone, Debug)]
pub struct PunctureCode {
    code: AdditiveCode,
    kind: PunctureKind,
    origin: Option<BchOrigin>,
}

impl PunctureCode {
    /// The puncture code as an additive code in the plain ambient F_q^n.
    pub fn code(&self) -> &AdditiveCode {
        &self.code
    }

    pub fn kind(&self) -> PunctureKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn contains(&self, x: &[Elem]) -> Result<bool> {
        self.code.contains(x)
    }
}

fn pair_guard(rank: usize) -> Result<()> {
    if rank.saturating_mul(rank) > MAX_PAIRS {
        return Err(Error::CodeTooLarge {
            bits: (2.0 * (rank as f64).log2()).ceil() as u32,
        });
    }
    Ok(())
}

/// Trace dual of the F_p-span of the given words of F_q^n.
fn trace_dual_of_span(field: &Arc<Field>, n: usize, words: impl IntoIterator<Item = Vec<Elem>>) -> Result<AdditiveCode> {
    let span = AdditiveCode::zero(field.clone(), Flavor::Plain, n, None)?;
    let mut ech = Echelon::new(span.prime_field().clone(), n * field.degree() as usize);
    for w in words {
        if ech.rank() == ech.ncols() {
            break;
        }
        ech.insert(span.expand(&w));
    }
    span.from_fp_rows(ech.rows().to_vec()).dual(Form::TraceEuclidean)
}

/// P_s(C) for a symplectic additive code.
///
/// The cross product is bilinear, so pairs of F_p-basis vectors span the same
/// space as all pairs of codewords.
pub fn puncture_code(c: &AdditiveCode) -> Result<PunctureCode> {
    if c.flavor() != Flavor::Symplectic {
        return Err(Error::MixedAmbient);
    }
    let f = c.field();
    let n = c.n();
    let gens = c.generators();
    pair_guard(gens.len())?;
    let mut words = Vec::new();
    for (i, u) in gens.iter().enumerate() {
        for v in &gens[i + 1..] {
            words.push(
                (0..n)
                    .map(|k| f.sub(f.mul(u[n + k], v[k]), f.mul(v[n + k], u[k])))
                    .collect(),
            );
        }
    }
    Ok(PunctureCode {
        code: trace_dual_of_span(f, n, words)?,
        kind: PunctureKind::Symplectic,
        origin: None,
    })
}

/// {ab | a ∈ C1, b ∈ C2}^⊥, the puncture code of C1 × C2.
pub fn product_puncture_code(c1: &AdditiveCode, c2: &AdditiveCode) -> Result<PunctureCode> {
    c1.same_ambient(c2)?;
    if c1.flavor() != Flavor::Plain {
        return Err(Error::MixedAmbient);
    }
    let f = c1.field();
    let (g1, g2) = (c1.generators(), c2.generators());
    pair_guard(g1.len().max(g2.len()))?;
    let words = g1
        .iter()
        .flat_map(|a| g2.iter().map(move |b| a.iter().zip(b).map(|(&x, &y)| f.mul(x, y)).collect()));
    Ok(PunctureCode {
        code: trace_dual_of_span(f, c1.n(), words)?,
        kind: PunctureKind::Euclidean,
        origin: None,
    })
}

/// pc_e(C) = {ab | a, b ∈ C}^⊥ for a linear code over F_q.
pub fn euclidean_puncture_code(c: &LinearCode) -> Result<PunctureCode> {
    let a = c.to_additive();
    product_puncture_code(&a, &a)
}

/// (Q, R, largest certified GRM order) for the BCH code B_q^m(δ), or an error
/// when δ is outside the range where the BCH code contains its dual or the
/// certified order range is empty.
fn bch_orders(q: u64, m: u32, delta: u64) -> Result<(u64, u64, u64)> {
    let hi = families::bch_euclidean_max_delta(q, m)?;
    if m < 2 || delta < 2 || delta > hi {
        return Err(Error::DeltaOutOfRange { delta, lo: 2, hi });
    }
    let (qq, r) = grm::log_split(q, delta);
    let mu_max = (m as i64) * (q as i64 - 1) - 2 * (r as i64 + (q as i64 - 1) * qq as i64) + 1;
    if mu_max < 0 {
        return Err(Error::DeltaOutOfRange { delta, lo: 2, hi });
    }
    Ok((qq, r, mu_max as u64))
}

/// pc_e(B^⊥) for the primitive narrow-sense BCH code B = B_q^m(δ).
pub fn bch_puncture_code(q: u64, m: u32, delta: u64) -> Result<PunctureCode> {
    let (_, _, mu_max) = bch_orders(q, m, delta)?;
    let b = families::bch_code(q, m, delta)?.to_linear_code();
    let mut pc = euclidean_puncture_code(&b.euclidean_dual())?;
    pc.origin = Some(BchOrigin { q, m, mu_max });
    Ok(pc)
}

/// One row of the BCH puncturing menu.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MenuEntry {
    pub mu: u64,
    /// d*(μ), the length of the punctured code.
    pub length: u64,
    /// Lower bound d*(μ) - 2m⌈(δ-1)(1-1/q)⌉ on k; may be negative.
    pub k_at_least: i64,
    pub d_at_least: u64,
}

/// Punctured code parameters reachable from the euclidean BCH code through
/// minimum-weight words of the certified GRM subcodes of pc_e(B^⊥).
///
/// δ must lie in the range where B contains its euclidean dual, and the
/// certified order range 0 ≤ μ ≤ m(q-1) - 2(R + (q-1)Q) + 1 must be nonempty.
pub fn bch_puncture_menu(q: u64, m: u32, delta: u64) -> Result<Vec<MenuEntry>> {
    let (_, _, mu_max) = bch_orders(q, m, delta)?;
    let loss = 2 * m as i64 * ((delta - 1) * (q - 1)).div_ceil(q) as i64;
    (0..=mu_max)
        .map(|mu| {
            let (_, d) = grm::grm_params(q, mu, m)?;
            Ok(MenuEntry {
                mu,
                length: d,
                k_at_least: d as i64 - loss,
                d_at_least: delta,
            })
        })
        .collect()
}

/// A word of Hamming weight r in the puncture code.
///
/// Searches exhaustively when the code has at most 2^24 words, returning the
/// lexicographically smallest hit. Larger codes derived from BCH codes are
/// searched through minimum-weight words of the certified GRM subcodes, each
/// checked for membership and weight.
pub fn find_weight_word(pc: &PunctureCode, r: usize, exec: Execution) -> Result<Option<Vec<Elem>>> {
    if r > pc.n() {
        return Ok(None);
    }
    let p = pc.code.field().characteristic();
    if enumerate::word_count(p, pc.code.rank()).is_ok() {
        return pc.code.find_weight_word(r, exec);
    }
    let Some(origin) = pc.origin else {
        return Err(Error::SearchSpaceTooLarge);
    };
    for mu in 0..=origin.mu_max {
        let (_, d) = grm::grm_params(origin.q, mu, origin.m)?;
        if d as usize != r {
            continue;
        }
        let w = grm::grm_min_weight_word(origin.q, mu, origin.m, grm::Ordering::Cyclic)?;
        if w.iter().filter(|&&x| x != 0).count() == r && pc.contains(&w)? {
            return Ok(Some(w));
        }
    }
    Err(Error::SearchSpaceTooLarge)
}

fn restrict_scaled(c: &LinearCode, x: Option<&[Elem]>, support: &[usize]) -> LinearCode {
    match x {
        Some(x) => c.scale(x).restrict(support),
        None => c.restrict(support),
    }
}

/// Punctures `code` with a word x of its puncture code: the carrier becomes
/// {(a | bx)} restricted to supp(x).
///
/// The claimed distance is the input's when the new code encodes more than
/// one state, and purity to that distance is claimed when the input is pure.
/// CSS codes stay CSS: the new classical pair has duals C1^⊥|S and (x C2^⊥)|S.
pub fn puncture_to(code: &StabilizerCode, x: &[Elem]) -> Result<StabilizerCode> {
    let n = code.n();
    if x.len() != n {
        return Err(Error::MixedAmbient);
    }
    let pc = puncture_code(code.carrier())?;
    if !pc.contains(x)? {
        return Err(Error::NotInPunctureCode);
    }
    let support: Vec<usize> = (0..n).filter(|&k| x[k] != 0).collect();
    if support.is_empty() {
        return Err(Error::ZeroWeightWord);
    }
    let r = support.len();
    let f = code.field().clone();
    let d = code.distance().value;
    let prov = Provenance::derived("puncture", &[code.provenance()], &[("r", r as i64)]);
    let mut out = match code.source() {
        Some(ClassicalSource::Css { c1, c2 }) => {
            let d1 = restrict_scaled(&c1.euclidean_dual(), None, &support);
            let d2 = restrict_scaled(&c2.euclidean_dual(), Some(x), &support);
            StabilizerCode::css(&d1.euclidean_dual(), &d2.euclidean_dual(), d, prov)?
        }
        _ => {
            let gens: Vec<Vec<Elem>> = code
                .carrier()
                .generators()
                .iter()
                .map(|g| {
                    let mut w: Vec<Elem> = support.iter().map(|&k| g[k]).collect();
                    w.extend(support.iter().map(|&k| f.mul(g[n + k], x[k])));
                    w
                })
                .collect();
            let carrier = AdditiveCode::new(f.clone(), Flavor::Symplectic, r, None, &gens)?;
            StabilizerCode::assemble(carrier, d, None, None, prov)?
        }
    };
    if out.k_exp() == 0 {
        out.set_claimed_distance(1);
    } else if code.is_pure() == Some(true) {
        out.set_pure_to(Some(d));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn f(p: u32, m: u32) -> Arc<Field> {
        Field::get(p, m).unwrap()
    }

    #[test]
    fn puncture_code_of_zero_is_everything() {
        let z = LinearCode::zero(f(2, 1), 4);
        assert_eq!(euclidean_puncture_code(&z).unwrap().code().rank(), 4);
        let z = AdditiveCode::zero(f(3, 2), Flavor::Symplectic, 3, None).unwrap();
        assert_eq!(puncture_code(&z).unwrap().code().rank(), 6);
    }

    #[test]
    fn repetition_code_gives_even_weight() {
        let rep = LinearCode::new(f(2, 1), 4, &[vec![1, 1, 1, 1]]).unwrap();
        let pc = euclidean_puncture_code(&rep).unwrap();
        assert_eq!(pc.code().rank(), 3);
        assert!(pc.contains(&[1, 1, 0, 0]).unwrap());
        assert!(!pc.contains(&[1, 0, 0, 0]).unwrap());
        let ex = Execution::Sequential;
        assert_eq!(find_weight_word(&pc, 2, ex).unwrap(), Some(vec![0, 0, 1, 1]));
        assert_eq!(find_weight_word(&pc, 3, ex).unwrap(), None);
        let full = euclidean_puncture_code(&LinearCode::zero(f(2, 1), 4)).unwrap();
        for r in 1..=4 {
            assert!(find_weight_word(&full, r, ex).unwrap().is_some());
        }
    }

    #[test]
    fn menu_examples() {
        let menu = bch_puncture_menu(2, 4, 3).unwrap();
        let lengths: Vec<u64> = menu.iter().map(|e| e.length).collect();
        assert_eq!(lengths, vec![15, 7]);
        assert_eq!(menu[0].k_at_least, 7);
        assert_eq!(menu[1].k_at_least, -1);
        let menu = bch_puncture_menu(3, 4, 2).unwrap();
        assert_eq!(menu.len(), 6);
        assert!(matches!(bch_puncture_menu(2, 4, 9), Err(Error::DeltaOutOfRange { .. })));
        assert!(matches!(bch_puncture_menu(2, 4, 1), Err(Error::DeltaOutOfRange { .. })));
    }

    #[test]
    fn all_ones_puncture_is_identity() {
        let code = families::quantum_hamming_hermitian(2, 2).unwrap();
        let pc = puncture_code(code.carrier()).unwrap();
        let ones = vec![1; 5];
        if pc.contains(&ones).unwrap() {
            let out = puncture_to(&code, &ones).unwrap();
            assert_eq!(out.carrier(), code.carrier());
        }
        assert_eq!(
            puncture_to(&code, &[0; 5]).unwrap_err(),
            if pc.contains(&[0; 5]).unwrap() { Error::ZeroWeightWord } else { Error::NotInPunctureCode }
        );
    }
}
