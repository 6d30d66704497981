use alloc::boxed::Box;

use crate::smoothness::AdequacyReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Why a row of a candidate matrix is not an atomic monomial shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialDefect {
    /// The row has more than two nonzero exponents.
    TooManyMonomialFactors { row: usize },
    /// A two-variable row without a slot of exponent exactly 1, or with both
    /// exponents equal to 1.
    NoPointerSlot { row: usize },
    /// No assignment of rows to variables makes every row atomic.
    NoMatching,
    /// Two rows point at the same variable.
    SharedTarget { variable: usize },
}

impl core::fmt::Display for PotentialDefect {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PotentialDefect::TooManyMonomialFactors { row } => {
                write!(f, "row {row} has more than two nonzero exponents")
            }
            PotentialDefect::NoPointerSlot { row } => {
                write!(f, "row {row} is not of the form y_i^e y_j with e >= 2")
            }
            PotentialDefect::NoMatching => f.write_str("no row-to-variable matching exists"),
            PotentialDefect::SharedTarget { variable } => {
                write!(f, "variable {variable} is the pointer target of two rows")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("{a} is not coprime to {m}")]
    NotCoprime { a: i64, m: u64 },
    #[error("{0} is not 0 or a prime")]
    NotPrime(u64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("entry ({row}, {col}) is negative (every exponent must be nonnegative)")]
    NegativeEntry { row: usize, col: usize },
    #[error("row {row} has no zero entry (every row needs at least one zero)")]
    RowWithoutZero { row: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("characteristic {p} divides det(A) = {det}")]
    CharDividesDet { p: u64, det: i64 },
    #[error("entry {index} of A^-1 (1,1,1,1)^T is not positive")]
    NonpositiveWeight { index: usize },
    #[error("matrix does not satisfy the Calabi-Yau condition h = q0 + q1 + q2 + q3")]
    NotCalabiYau,

    #[error("not an invertible potential: {0}")]
    NotInvertiblePotential(PotentialDefect),

    #[error("group order exceeds {limit}")]
    GroupTooLarge { limit: usize },
    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("element does not lie in the required group")]
    NotInGroup,
    #[error("group does not contain J")]
    MissingJ,
    #[error("group is not contained in SL")]
    NotInSl,

    #[error("the pair is not adequate")]
    PairNotAdequate(Box<AdequacyReport>),
    #[error("the mirror pair is not adequate")]
    MirrorNotAdequate(Box<AdequacyReport>),

    #[error("element has a zero coordinate")]
    ZeroCoordinate,
    #[error("coordinate sum is not divisible by the modulus")]
    NonintegralAge,
    #[error("group is not contained in the sum-zero subgroup M_d")]
    HNotInMd,
    #[error("characteristic {p} divides d = {d}")]
    CharDividesD { p: u64, d: u64 },

    #[error("cross-check failed: {0}")]
    MethodMismatch(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl Error {
    /// Errors that indicate a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::MethodMismatch(_) | Error::Internal(_))
    }
}
