use thiserror::Error;

/// Errors raised by field arithmetic, code constructions, bounds and derivations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field of order {p}^{m} exceeds the supported size")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("degree {sub} does not divide the field degree {m}")]
    NotASubfield { sub: u32, m: u32 },
    #[error("{n} is not coprime to {modulus}")]
    NotCoprime { n: u64, modulus: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("operands live in different fields")]
    MixedFields,
    #[error("operands live in different ambient spaces")]
    MixedAmbient,
    #[error("code is not linear over the required field")]
    NotLinear,
    #[error("exhaustive scan over about 2^{bits} codewords exceeds the guard")]
    CodeTooLarge { bits: u32 },
    #[error("second code is not contained in the first")]
    NotASubcode,
    #[error("carrier is not self-orthogonal: generators {first} and {second} pair to {value}")]
    NotSelfOrthogonal { first: usize, second: usize, value: u32 },
    #[error("nesting violated: a vector of the dual is missing from the larger code")]
    NestingViolated { witness: Vec<u32> },
    #[error("defining set is not closed under multiplication by {multiplier} mod {n}")]
    NotCosetClosed { n: u64, multiplier: u64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{q} is not a quadratic residue mod {n}")]
    NotResidue { q: u64, n: u64 },
    #[error("design distance {delta} outside {lo}..={hi}")]
    DeltaOutOfRange { delta: u64, lo: u64, hi: u64 },
    #[error("code cannot be extended: {0}")]
    NotExtendable(String),
    #[error("order {nu} outside 0..={max}")]
    OrderOutOfRange { nu: u64, max: u64 },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("enumerator sums to {actual}, expected {expected}")]
    InconsistentSize { expected: String, actual: String },
    #[error("transform produced a non-integral coefficient at weight {0}")]
    NonIntegerResult(usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("word is not in the puncture code")]
    NotInPunctureCode,
    #[error("puncturing word has weight zero")]
    ZeroWeightWord,
    #[error("search space too large for exhaustive search and no structured path applies")]
    SearchSpaceTooLarge,
    #[error("code has no logical qudits")]
    ZeroDimensional,
    #[error("code is not pure")]
    NotPure,
    #[error("code is too short for this rule")]
    TooShort,
    #[error("no room to reduce the dimension")]
    NoRoom,
    #[error("codes are not nested")]
    NotNested,
    #[error("rule requires even characteristic")]
    OddCharacteristic,
    #[error("elements do not form a basis")]
    NotABasis,
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPrime(_) => "NonPrime",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::ZeroDegree => "ZeroDegree",
            Error::NotASubfield { .. } => "NotASubfield",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::MixedFields => "MixedFields",
            Error::MixedAmbient => "MixedAmbient",
            Error::NotLinear => "NotLinear",
            Error::CodeTooLarge { .. } => "CodeTooLarge",
            Error::NotASubcode => "NotASubcode",
            Error::NotSelfOrthogonal { .. } => "NotSelfOrthogonal",
            Error::NestingViolated { .. } => "NestingViolated",
            Error::NotCosetClosed { .. } => "NotCosetClosed",
            Error::BadParameters(_) => "BadParameters",
            Error::NotPrime(_) => "NotPrime",
            Error::NotResidue { .. } => "NotResidue",
            Error::DeltaOutOfRange { .. } => "DeltaOutOfRange",
            Error::NotExtendable(_) => "NotExtendable",
            Error::OrderOutOfRange { .. } => "OrderOutOfRange",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InconsistentSize { .. } => "InconsistentSize",
            Error::NonIntegerResult(_) => "NonIntegerResult",
            Error::TooLarge(_) => "TooLarge",
            Error::NotInPunctureCode => "NotInPunctureCode",
            Error::ZeroWeightWord => "ZeroWeightWord",
            Error::SearchSpaceTooLarge => "SearchSpaceTooLarge",
            Error::ZeroDimensional => "ZeroDimensional",
            Error::NotPure => "NotPure",
            Error::TooShort => "TooShort",
            Error::NoRoom => "NoRoom",
            Error::NotNested => "NotNested",
            Error::OddCharacteristic => "OddCharacteristic",
            Error::NotABasis => "NotABasis",
            Error::Malformed(_) => "Malformed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
