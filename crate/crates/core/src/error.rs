use alloc::string::String;
use core::fmt;

/// Every fallible operation in the crate reports one of these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A permutation or generator list is malformed.
    InvalidPermutation(String),
    /// Degree or element count exceeds the enumeration bound.
    GroupTooLarge { what: &'static str, limit: usize, got: usize },
    /// A named parameter is outside its allowed range.
    InvalidParameter(String),
    /// Two objects over different groups or primes were combined.
    Mismatch(String),
    /// A subgroup argument is not contained in the expected overgroup.
    NotASubgroup(String),
    /// L is not normal in K for a section L ◁ K.
    NotNormal,
    /// A marks vector does not come from a G-set; `class` is the offending class id.
    NotGenuineGSet { class: usize },
    /// An exact integer computation left the representable range.
    Overflow,
    /// Values supplied for a superclass function have the wrong length.
    Arity { expected: usize, got: usize },
    /// Generator matrices do not define a representation.
    NotARepresentation(String),
    /// A matrix was expected to be invertible.
    Singular,
    /// A dimension or cell count exceeds the configured bound.
    DimensionBound { what: &'static str, limit: usize, got: usize },
    /// The module is not p-permutation, so the requested predicate is undefined.
    NotPPermutation,
    /// The exact p-permutation test does not apply and no provenance was supplied.
    Undecidable(String),
    /// A character average over a subgroup was not an integer.
    NotACharacter(String),
    /// A map expected to intertwine two modules does not.
    NotEquivariant(String),
    /// An identity that must hold failed; the string names it.
    IdentityFailed(String),
    /// No realization exists within the generator family.
    NotRealizable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPermutation(s) => write!(f, "invalid permutation: {s}"),
            Error::GroupTooLarge { what, limit, got } => {
                write!(f, "group too large: {what} {got} exceeds bound {limit}")
            }
            Error::InvalidParameter(s) => write!(f, "invalid parameter: {s}"),
            Error::Mismatch(s) => write!(f, "mismatch: {s}"),
            Error::NotASubgroup(s) => write!(f, "not a subgroup: {s}"),
            Error::NotNormal => write!(f, "lower subgroup is not normal in upper subgroup"),
            Error::NotGenuineGSet { class } => {
                write!(f, "not a genuine G-set (failure at class {class})")
            }
            Error::Overflow => write!(f, "integer overflow in exact arithmetic"),
            Error::Arity { expected, got } => {
                write!(f, "arity mismatch: expected {expected} values, got {got}")
            }
            Error::NotARepresentation(s) => write!(f, "not a representation: {s}"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::DimensionBound { what, limit, got } => {
                write!(f, "{what} {got} exceeds configured bound {limit}")
            }
            Error::NotPPermutation => write!(f, "module is not p-permutation"),
            Error::Undecidable(s) => write!(f, "undecidable in this build: {s}"),
            Error::NotACharacter(s) => write!(f, "not a character: {s}"),
            Error::NotEquivariant(why) => write!(f, "invalid module map: {why}"),
            Error::IdentityFailed(s) => write!(f, "identity failed: {s}"),
            Error::NotRealizable(s) => write!(f, "not realizable: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
