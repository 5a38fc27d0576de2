use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoxError {
    /// A generator name not declared by the system.
    UnknownGenerator(String),
    /// Elements of two different systems were combined.
    MixedSystems,
    /// The Coxeter matrix fails a structural requirement.
    InvalidMatrix(String),
    /// A parabolic subgroup turned out not to be finite within the
    /// configured enumeration bound.
    InfiniteParabolic,
    /// An enumeration of an infinite (or too large) set was requested
    /// without a bound.
    Unbounded,
    /// A word is not reduced, or not equal to the required element.
    NotLongestWord,
    /// The element is not in the required parabolic quotient.
    NotInQuotient,
    /// The triple `[I, a, b]` fails `a` being a minimal coset representative.
    InvalidTriple,
    /// The element does not lie in `Omega` (its minimal double-coset
    /// representative is not one of the `z_I`).
    NotInOmega,
    /// A Laurent polynomial is not a valid KL normal form (odd exponents or
    /// negative exponents after shifting).
    NotKlNormalForm,
    /// A hat-system bond order violates `m(r, theta(r)) >= 3`.
    InvalidHatBond(String),
    /// A memo table failed an internal consistency identity; carries a
    /// description naming the offending pair.
    TableInconsistent(String),
    /// A recursion exceeded its configured depth bound (indicates an input
    /// outside the domain of the recursion).
    DepthExceeded,
}

impl fmt::Display for CoxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxError::UnknownGenerator(name) => write!(f, "unknown generator `{name}`"),
            CoxError::MixedSystems => write!(f, "elements belong to different Coxeter systems"),
            CoxError::InvalidMatrix(msg) => write!(f, "invalid Coxeter matrix: {msg}"),
            CoxError::InfiniteParabolic => write!(f, "infinite parabolic subgroup"),
            CoxError::Unbounded => write!(f, "unbounded enumeration of an infinite group"),
            CoxError::NotLongestWord => {
                write!(f, "word is not a reduced expression of the longest element")
            }
            CoxError::NotInQuotient => write!(f, "element is not a minimal coset representative"),
            CoxError::InvalidTriple => {
                write!(f, "invalid triple: `a` is not a minimal coset representative for `I`")
            }
            CoxError::NotInOmega => write!(f, "element does not lie in Omega"),
            CoxError::NotKlNormalForm => write!(f, "not a valid KL normal form"),
            CoxError::InvalidHatBond(msg) => write!(f, "invalid hat bond: {msg}"),
            CoxError::TableInconsistent(msg) => write!(f, "polynomial table inconsistent: {msg}"),
            CoxError::DepthExceeded => write!(f, "recursion depth bound exceeded"),
        }
    }
}
