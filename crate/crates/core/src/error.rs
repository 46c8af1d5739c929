use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),
    #[error("relation {0} is not admissible")]
    BadRelation(String),
    #[error("quiver algebra is not finite dimensional within path length {max_len}")]
    NotFiniteDimensional { max_len: usize },
    #[error("basis is not radical adapted: {0}")]
    NotBasisAdapted(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("endomorphism ring of dimension {dim} over F_{modulus} exceeds the enumeration threshold")]
    EndTooLarge { dim: usize, modulus: u32 },
    #[error("indecomposable with non-split endomorphism ring (End/rad has dimension {0})")]
    NotAbsolutelyIndecomposable(usize),
    #[error("isomorphism search was truncated: {0}")]
    Indeterminate(String),
    #[error("module is not projective")]
    NotProjective,
    #[error("module is not in the image subcategory of F")]
    NotInH,
    #[error("no element found: {0}")]
    NotFound(String),
    #[error("element is not unique: {0}")]
    NotUnique(String),
    #[error("sequence is not a maximal chain: {0}")]
    NotMaximalChain(String),
    #[error("dimension bound too small: {0}")]
    BoundTooSmall(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal assertion failed: {0}")]
    AssertionFailure(String),
    #[error("malformed input: {0}")]
    Parse(String),
}
