//! Quantum stabilizer codes over prime-power fields, handled through their classical additive codes.
//!
//! A stabilizer code over F_q of length n is described by an additive code
//! C ⊆ F_q^{2n} that is self-orthogonal under the trace-symplectic form. This
//! crate builds such codes from classical families (Hamming, quadratic residue,
//! Melas, BCH, character codes), checks their parameters by exhaustive
//! enumeration where feasible, evaluates the standard bounds, punctures codes
//! and derives new codes from old ones.
//!
//! ```
//! use nbstab::families;
//! use nbstab::enumerate::Execution;
//!
//! let code = families::quantum_hamming_hermitian(2, 2).unwrap();
//! let report = code.verify(true, Execution::default());
//! assert_eq!((code.n(), report.distance.value), (5, 3));
//! ```

pub mod additive;
pub mod arith;
pub mod bounds;
pub mod cyclic;
pub mod derive;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod field;
pub mod grm;
pub mod linalg;
pub mod linear;
pub mod poly;
pub mod puncture;
pub mod simplex;
pub mod stabilizer;

pub use additive::{AdditiveCode, Flavor, Form, MinWeight, WeightEnumerator};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use linear::LinearCode;
pub use stabilizer::StabilizerCode;
