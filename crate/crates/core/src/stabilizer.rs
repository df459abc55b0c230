//! Stabilizer codes as self-orthogonal symplectic additive codes.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::additive::{AdditiveCode, CodeJson, Flavor, Form};
use crate::enumerate::{self, Execution};
use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldSpec};
use crate::linear::LinearCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceStatus {
    Exact,
    LowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance {
    pub value: usize,
    pub status: DistanceStatus,
}

impl Distance {
    pub fn exact(value: usize) -> Self {
        Distance {
            value,
            status: DistanceStatus::Exact,
        }
    }

    pub fn at_least(value: usize) -> Self {
        Distance {
            value,
            status: DistanceStatus::LowerBound,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == DistanceStatus::Exact
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    /// Enumerate when the dual fits under the guard.
    Exact,
    /// Keep the claimed bound.
    Skip,
}

/// Classical codes a stabilizer code was built from.
#[derive(Clone, Debug)]
pub enum ClassicalSource {
    /// Carrier C1^⊥ × C2^⊥ with C2^⊥ ⊆ C1.
    Css { c1: LinearCode, c2: LinearCode },
    /// Carrier φ^{-1}(B^⊥h) for an F_{q²}-linear B ⊇ B^⊥h.
    Hermitian { code: LinearCode, beta: Elem },
}

/// Which construction produced a code, with its integer parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    #[serde(default)]
    pub params: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub history: Vec<String>,
}

impl Provenance {
    pub fn new(construction: &str, params: &[(&str, i64)]) -> Self {
        Provenance {
            construction: construction.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            history: Vec::new(),
        }
    }

    /// Records a derivation step on top of the inputs' provenance.
    pub fn derived(rule: &str, inputs: &[&Provenance], params: &[(&str, i64)]) -> Self {
        let mut history = Vec::new();
        for p in inputs {
            history.extend(p.history.iter().cloned());
            history.push(p.construction.clone());
        }
        Provenance {
            construction: rule.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            history,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    carrier: AdditiveCode,
    k_exp: usize,
    d_claimed: usize,
    distance: Distance,
    pure_to: Option<usize>,
    source: Option<ClassicalSource>,
    provenance: Provenance,
}

/// Result of re-checking a code from its carrier.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub self_orthogonal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize, u32)>,
    pub size_ok: bool,
    pub source_ok: bool,
    pub distance: Distance,
    pub distance_method: String,
    pub distance_ok: bool,
    pub pure_to: Option<usize>,
    pub singleton_ok: bool,
    pub mds: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.self_orthogonal && self.size_ok && self.source_ok && self.distance_ok && self.singleton_ok
    }
}

struct Exhaustive {
    d: usize,
    pure_to: usize,
    method: &'static str,
}

fn css_carrier(c1: &LinearCode, c2: &LinearCode) -> Result<AdditiveCode> {
    let f = c1.field();
    let n = c1.n();
    let mut gens = Vec::new();
    for x in f.basis() {
        for r in c1.euclidean_dual().generator_matrix() {
            let mut g: Vec<Elem> = r.iter().map(|&a| f.mul(a, x)).collect();
            g.extend(std::iter::repeat(0).take(n));
            gens.push(g);
        }
        for r in c2.euclidean_dual().generator_matrix() {
            let mut g = vec![0; n];
            g.extend(r.iter().map(|&a| f.mul(a, x)));
            gens.push(g);
        }
    }
    AdditiveCode::new(f.clone(), Flavor::Symplectic, n, None, &gens)
}

fn hermitian_carrier(b: &LinearCode, beta: Elem) -> Result<AdditiveCode> {
    b.hermitian_dual()?
        .to_additive_flavor(Flavor::Qsquare)
        .and_then(|d| {
            let d = AdditiveCode::new(d.field().clone(), Flavor::Qsquare, d.n(), Some(beta), &d.generators())?;
            d.to_symplectic()
        })
}

impl StabilizerCode {
    /// Wraps a self-orthogonal symplectic carrier.
    pub fn from_symplectic(carrier: AdditiveCode, mode: DistanceMode, exec: Execution) -> Result<Self> {
        let mut code = StabilizerCode::assemble(carrier, 1, None, None, Provenance::new("symplectic", &[]))?;
        if mode == DistanceMode::Exact {
            code.upgrade_distance(exec)?;
        }
        Ok(code)
    }

    /// Wraps a code over F_{q²} that is self-orthogonal under the trace-alternating form.
    pub fn from_alternating(d: &AdditiveCode, mode: DistanceMode, exec: Execution) -> Result<Self> {
        if d.flavor() != Flavor::Qsquare {
            return Err(Error::MixedAmbient);
        }
        if let Some((first, second, value)) = d.self_orthogonality_witness(Form::Alternating)? {
            return Err(Error::NotSelfOrthogonal { first, second, value });
        }
        let carrier = d.to_symplectic()?;
        let mut code = StabilizerCode::assemble(carrier, 1, None, None, Provenance::new("alternating", &[]))?;
        if mode == DistanceMode::Exact {
            code.upgrade_distance(exec)?;
        }
        Ok(code)
    }

    /// CSS code from C1, C2 with C2^⊥ ⊆ C1; parameters [[n, k1 + k2 - n]].
    pub fn css(c1: &LinearCode, c2: &LinearCode, claimed_d: usize, provenance: Provenance) -> Result<Self> {
        if c1.field() != c2.field() {
            return Err(Error::MixedFields);
        }
        if c1.n() != c2.n() {
            return Err(Error::MixedAmbient);
        }
        let c2_perp = c2.euclidean_dual();
        if let Some(w) = c2_perp.witness_outside(c1) {
            return Err(Error::NestingViolated { witness: w });
        }
        let carrier = css_carrier(c1, c2)?;
        let source = ClassicalSource::Css {
            c1: c1.clone(),
            c2: c2.clone(),
        };
        StabilizerCode::assemble(carrier, claimed_d, None, Some(source), provenance)
    }

    /// Code from an F_{q²}-linear B containing its hermitian dual.
    pub fn hermitian(b: &LinearCode, claimed_d: usize, provenance: Provenance) -> Result<Self> {
        let f = b.field();
        let b_perp = b.hermitian_dual()?;
        if let Some(w) = b_perp.witness_outside(b) {
            return Err(Error::NestingViolated { witness: w });
        }
        let beta = f.normal_element()?;
        let carrier = hermitian_carrier(b, beta)?;
        let source = ClassicalSource::Hermitian { code: b.clone(), beta };
        StabilizerCode::assemble(carrier, claimed_d, None, Some(source), provenance)
    }

    /// Builds the record, checking self-orthogonality.
    pub fn assemble(
        carrier: AdditiveCode,
        claimed_d: usize,
        claimed_pure: Option<usize>,
        source: Option<ClassicalSource>,
        provenance: Provenance,
    ) -> Result<Self> {
        if carrier.flavor() != Flavor::Symplectic {
            return Err(Error::MixedAmbient);
        }
        if let Some((first, second, value)) = carrier.self_orthogonality_witness(Form::Symplectic)? {
            return Err(Error::NotSelfOrthogonal { first, second, value });
        }
        let nm = carrier.n() * carrier.field().degree() as usize;
        let k_exp = nm - carrier.rank();
        Ok(StabilizerCode {
            carrier,
            k_exp,
            d_claimed: claimed_d,
            distance: Distance::at_least(claimed_d),
            pure_to: claimed_pure,
            source,
            provenance,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        self.carrier.field()
    }

    pub fn q(&self) -> u32 {
        self.field().order()
    }

    pub fn n(&self) -> usize {
        self.carrier.n()
    }

    /// K = p^k_exp.
    pub fn k_exp(&self) -> usize {
        self.k_exp
    }

    /// log_q K, when integral.
    pub fn k(&self) -> Option<usize> {
        let m = self.field().degree() as usize;
        (self.k_exp % m == 0).then(|| self.k_exp / m)
    }

    pub fn distance(&self) -> Distance {
        self.distance
    }

    pub fn d_claimed(&self) -> usize {
        self.d_claimed
    }

    pub fn pure_to(&self) -> Option<usize> {
        self.pure_to
    }

    /// Pure when no nonzero stabilizer word is lighter than the distance.
    pub fn is_pure(&self) -> Option<bool> {
        self.pure_to.map(|t| t >= self.distance.value)
    }

    pub fn carrier(&self) -> &AdditiveCode {
        &self.carrier
    }

    pub fn source(&self) -> Option<&ClassicalSource> {
        self.source.as_ref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn set_provenance(&mut self, provenance: Provenance) {
        self.provenance = provenance;
    }

    pub fn set_pure_to(&mut self, t: Option<usize>) {
        self.pure_to = t;
    }

    pub fn set_claimed_distance(&mut self, d: usize) {
        self.d_claimed = d;
        if !self.distance.is_exact() {
            self.distance = Distance::at_least(d);
        }
    }

    /// The carrier's symplectic dual.
    pub fn dual(&self) -> AdditiveCode {
        self.carrier.dual(Form::Symplectic).expect("carrier is symplectic")
    }

    pub fn params(&self) -> String {
        let d = match self.distance.status {
            DistanceStatus::Exact => self.distance.value.to_string(),
            DistanceStatus::LowerBound => format!("≥{}", self.distance.value),
        };
        match self.k() {
            Some(k) => format!("[[{},{},{}]]_{}", self.n(), k, d, self.q()),
            None => format!(
                "(({},{}^{},{}))_{}",
                self.n(),
                self.field().characteristic(),
                self.k_exp,
                d,
                self.q()
            ),
        }
    }

    fn css_sizes(&self) -> Option<(&LinearCode, &LinearCode)> {
        match &self.source {
            Some(ClassicalSource::Css { c1, c2 }) => Some((c1, c2)),
            _ => None,
        }
    }

    /// Whether an exhaustive distance computation fits under the guard.
    pub fn exhaustive_feasible(&self) -> bool {
        let p = self.field().characteristic();
        let m = self.field().degree() as usize;
        if let Some((c1, c2)) = self.css_sizes() {
            if enumerate::word_count(p, c1.dim() * m).is_ok()
                && enumerate::word_count(p, c2.dim() * m).is_ok()
            {
                return true;
            }
        }
        enumerate::word_count(p, 2 * self.n() * m - self.carrier.rank()).is_ok()
    }

    fn exhaustive(&self, exec: Execution) -> Result<Exhaustive> {
        let p = self.field().characteristic();
        let m = self.field().degree() as usize;
        if let Some((c1, c2)) = self.css_sizes() {
            let fits = |c: &LinearCode| enumerate::word_count(p, c.dim() * m).is_ok();
            if fits(c1) && fits(c2) {
                let r1 = c1.to_additive().scan_difference(&c2.euclidean_dual().to_additive(), exec)?;
                let r2 = c2.to_additive().scan_difference(&c1.euclidean_dual().to_additive(), exec)?;
                let outer = [r1.min_outer(), r2.min_outer()].into_iter().flatten().min();
                let any = |r: &enumerate::ScanResult| {
                    r.total().iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
                };
                let nonzero = [any(&r1), any(&r2)].into_iter().flatten().min();
                let d = outer.or(nonzero).unwrap_or(self.n() + 1);
                let pure_to = nonzero.map_or(d, |w| w.min(d));
                return Ok(Exhaustive {
                    d,
                    pure_to,
                    method: "exhaustive-css",
                });
            }
        }
        let dual = self.dual();
        let res = dual.scan_difference(&self.carrier, exec)?;
        let inner = res.min_inner_nonzero();
        let d = if self.k_exp > 0 {
            res.min_outer().unwrap_or(self.n() + 1)
        } else {
            inner.unwrap_or(self.n() + 1)
        };
        let pure_to = inner.map_or(d, |w| w.min(d));
        Ok(Exhaustive {
            d,
            pure_to,
            method: "exhaustive-symplectic",
        })
    }

    /// Replaces the claimed distance by the exact one when enumeration is feasible.
    pub fn upgrade_distance(&mut self, exec: Execution) -> Result<bool> {
        if !self.exhaustive_feasible() {
            return Ok(false);
        }
        let ex = self.exhaustive(exec)?;
        self.distance = Distance::exact(ex.d);
        self.pure_to = Some(ex.pure_to);
        Ok(true)
    }

    fn source_consistent(&self) -> bool {
        match &self.source {
            None => true,
            Some(ClassicalSource::Css { c1, c2 }) => css_carrier(c1, c2)
                .map(|c| c == self.carrier)
                .unwrap_or(false),
            Some(ClassicalSource::Hermitian { code, beta }) => hermitian_carrier(code, *beta)
                .map(|c| c == self.carrier)
                .unwrap_or(false),
        }
    }

    /// Recomputes every invariant from the carrier.
    pub fn verify(&self, exact: bool, exec: Execution) -> VerificationReport {
        let start = Instant::now();
        let witness = self
            .carrier
            .self_orthogonality_witness(Form::Symplectic)
            .unwrap_or(None);
        let nm = self.n() * self.field().degree() as usize;
        let size_ok = self.carrier.rank() + self.k_exp == nm;
        let source_ok = self.source_consistent();
        let (distance, method, pure_to) = match (exact && witness.is_none(), self.exhaustive_feasible()) {
            (true, true) => match self.exhaustive(exec) {
                Ok(ex) => (Distance::exact(ex.d), ex.method.to_string(), Some(ex.pure_to)),
                Err(_) => (Distance::at_least(self.d_claimed), "claimed".to_string(), self.pure_to),
            },
            _ => (self.distance, "claimed".to_string(), self.pure_to),
        };
        let distance_ok = distance.value >= self.d_claimed;
        let (singleton_ok, mds) = crate::bounds::singleton_holds(
            self.n(),
            self.k_exp,
            distance.value,
            self.field().characteristic(),
            self.field().degree(),
        );
        VerificationReport {
            self_orthogonal: witness.is_none(),
            witness,
            size_ok,
            source_ok,
            distance,
            distance_method: method,
            distance_ok,
            pure_to,
            singleton_ok,
            mds,
            elapsed: start.elapsed(),
        }
    }

    pub fn to_json(&self) -> StabilizerJson {
        let f = self.field();
        StabilizerJson {
            q: QSpec {
                p: f.characteristic(),
                m: f.degree(),
            },
            params: self.params(),
            n: self.n(),
            k_exp: self.k_exp,
            k: self.k(),
            d_claimed: self.d_claimed,
            distance: self.distance,
            pure_to: self.pure_to,
            carrier: self.carrier.to_json(),
            source: self.source.as_ref().map(|s| match s {
                ClassicalSource::Css { c1, c2 } => SourceJson::Css {
                    c1: LinearJson::from_code(c1),
                    c2: LinearJson::from_code(c2),
                },
                ClassicalSource::Hermitian { code, beta } => SourceJson::Hermitian {
                    code: LinearJson::from_code(code),
                    beta: code.field().elem_to_coeffs(*beta),
                },
            }),
            provenance: self.provenance.clone(),
        }
    }

    /// Rebuilds a code, re-checking self-orthogonality and the recorded size.
    pub fn from_json(j: &StabilizerJson) -> Result<Self> {
        let carrier = AdditiveCode::from_json(&j.carrier)?;
        let source = match &j.source {
            None => None,
            Some(SourceJson::Css { c1, c2 }) => Some(ClassicalSource::Css {
                c1: c1.to_code()?,
                c2: c2.to_code()?,
            }),
            Some(SourceJson::Hermitian { code, beta }) => {
                let code = code.to_code()?;
                let beta = code.field().elem_from_coeffs(beta)?;
                Some(ClassicalSource::Hermitian { code, beta })
            }
        };
        let mut code = StabilizerCode::assemble(carrier, j.d_claimed, j.pure_to, source, j.provenance.clone())?;
        if code.k_exp != j.k_exp {
            return Err(Error::Malformed(format!(
                "carrier gives K = p^{} but the record says p^{}",
                code.k_exp, j.k_exp
            )));
        }
        code.distance = j.distance;
        Ok(code)
    }
}

impl fmt::Display for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.params())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSpec {
    pub p: u32,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearJson {
    pub field: FieldSpec,
    pub n: usize,
    pub generators: Vec<Vec<Vec<u32>>>,
}

impl LinearJson {
    pub fn from_code(c: &LinearCode) -> Self {
        let f = c.field();
        LinearJson {
            field: f.spec(),
            n: c.n(),
            generators: c
                .generator_matrix()
                .iter()
                .map(|r| r.iter().map(|&a| f.elem_to_coeffs(a)).collect())
                .collect(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        let f = Field::from_spec(&self.field)?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(|c| f.elem_from_coeffs(c)).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        LinearCode::new(f, self.n, &gens)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SourceJson {
    Css { c1: LinearJson, c2: LinearJson },
    Hermitian { code: LinearJson, beta: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerJson {
    pub q: QSpec,
    pub params: String,
    pub n: usize,
    pub k_exp: usize,
    pub k: Option<usize>,
    pub d_claimed: usize,
    pub distance: Distance,
    pub pure_to: Option<usize>,
    pub carrier: CodeJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceJson>,
    pub provenance: Provenance,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_single_qubit_code() {
        let f = Field::get(2, 1).unwrap();
        let c = AdditiveCode::zero(f, Flavor::Symplectic, 1, None).unwrap();
        let code = StabilizerCode::from_symplectic(c, DistanceMode::Exact, Execution::Sequential).unwrap();
        assert_eq!(code.params(), "[[1,1,1]]_2");
    }

    #[test]
    fn rejects_non_commuting_generators() {
        let f = Field::get(2, 1).unwrap();
        let c = AdditiveCode::new(f, Flavor::Symplectic, 1, None, &[vec![1, 0], vec![0, 1]]).unwrap();
        let err = StabilizerCode::from_symplectic(c, DistanceMode::Skip, Execution::Sequential).unwrap_err();
        assert!(matches!(err, Error::NotSelfOrthogonal { first: 0, second: 1, value: 1 }));
    }

    #[test]
    fn full_space_css() {
        let f = Field::get(3, 1).unwrap();
        let full = LinearCode::full(f, 4);
        let mut code = StabilizerCode::css(&full, &full, 1, Provenance::new("css", &[])).unwrap();
        code.upgrade_distance(Execution::Sequential).unwrap();
        assert_eq!(code.params(), "[[4,4,1]]_3");
    }
}
