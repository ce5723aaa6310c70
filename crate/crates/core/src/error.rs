use alloc::string::String;
use core::fmt;

use crate::report::AxiomReport;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure mode surfaced by the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    NonPrimeModulus(u64),
    Parse(String),
    DivisionByZero,
    FieldMismatch,
    ArityMismatch { expected: String, found: String },
    IndexOutOfRange { index: usize, bound: usize },
    InvalidPermutation,
    InvalidShape(String),
    /// A structure was handed to a constructor that requires a passing audit.
    AuditFailed(AxiomReport),
    NotCocommutative,
    NotModuleBialgebra(AxiomReport),
    HypothesisViolated { hypothesis: String, report: AxiomReport },
    CocycleInvalid(AxiomReport),
    MatchedInvalid(AxiomReport),
    NotGroupAlgebraBrace,
    NotInvertible,
    ArityTooLarge(usize),
    NotAnAction,
    InvalidGroup(String),
    SkewBraceInvalid(AxiomReport),
    OrderTooLarge(usize),
    CapExceeded { degree: usize, cap: usize },
    NotDerivation(AxiomReport),
    CharacteristicMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrimeModulus(p) => write!(f, "modulus {p} is not a prime below 2^31"),
            Error::Parse(s) => write!(f, "cannot parse scalar {s:?}"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::FieldMismatch => f.write_str("operands live over different fields"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "basis index {index} out of range (dimension {bound})")
            }
            Error::InvalidPermutation => f.write_str("not a permutation"),
            Error::InvalidShape(s) => write!(f, "invalid shape: {s}"),
            Error::AuditFailed(r) => write!(f, "audit failed: {}", r.summary()),
            Error::NotCocommutative => f.write_str("coalgebra is not cocommutative"),
            Error::NotModuleBialgebra(r) => write!(f, "not a module bialgebra: {}", r.summary()),
            Error::HypothesisViolated { hypothesis, report } => {
                write!(f, "hypothesis {hypothesis} violated: {}", report.summary())
            }
            Error::CocycleInvalid(r) => write!(f, "invalid 1-cocycle: {}", r.summary()),
            Error::MatchedInvalid(r) => write!(f, "invalid matched pair: {}", r.summary()),
            Error::NotGroupAlgebraBrace => f.write_str("brace does not have a group-like basis"),
            Error::NotInvertible => f.write_str("map is not invertible"),
            Error::ArityTooLarge(n) => write!(f, "arity {n} outside the supported range"),
            Error::NotAnAction => f.write_str("table is not an action by automorphisms"),
            Error::InvalidGroup(s) => write!(f, "not a group table: {s}"),
            Error::SkewBraceInvalid(r) => write!(f, "not a skew brace: {}", r.summary()),
            Error::OrderTooLarge(n) => write!(f, "order {n} exceeds the search budget"),
            Error::CapExceeded { degree, cap } => {
                write!(f, "degree {degree} exceeds the truncation cap {cap}")
            }
            Error::NotDerivation(r) => write!(f, "not a derivation-valued Lie map: {}", r.summary()),
            Error::CharacteristicMismatch => f.write_str("example requires characteristic 3"),
        }
    }
}

impl core::error::Error for Error {}
