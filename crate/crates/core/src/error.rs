use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("the zero ideal has no {0}")]
    ZeroIdeal(&'static str),
    #[error("unit ideal is not supported")]
    UnitIdeal,
    #[error("generator {0} is not homogeneous")]
    Inhomogeneous(usize),
    #[error("variable index {index} out of range 1..={nvars}")]
    VariableIndex { index: usize, nvars: usize },
    #[error("ideal power exponent must be positive")]
    ZeroPower,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("no invertible matrix after {0} draws")]
    NoInvertibleDraw(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("monomial ideal is not strongly stable")]
    NotStronglyStable,
    #[error("finite pure powers are not contiguous; ideal is not Borel-fixed")]
    NotBorelFixed,
    #[error("variable x{0} is not almost regular on the quotient")]
    NotAlmostRegular(usize),
    #[error("Hilbert series recursion exceeded depth {0}")]
    RecursionDepth(usize),
    #[error("invariant infinite along powers at n = {0}")]
    InfiniteAlongPowers(u64),
    #[error("sequence too short to fit")]
    SequenceTooShort,
    #[error("not certified: {0}")]
    Uncertified(String),
    #[error("internal error: {0}")]
    Internal(String),
}
