use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid signature ({p},{q}): at least one generator is required")]
    EmptySignature { p: usize, q: usize },
    #[error("signature has {0} generators; at most 30 are supported")]
    TooManyGenerators(usize),
    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(String, String),
    #[error("arity mismatch: basis has {basis} generators, element has {element}")]
    ArityMismatch { basis: usize, element: usize },
    #[error("operation requires an odd number of generators, got {0}")]
    NeedsOdd(usize),
    #[error("operation requires an even number of generators, got {0}")]
    NeedsEven(usize),
    #[error("operation requires a complex context")]
    NeedsComplex,
    #[error("(εω)² = -1 in this context, so there is no central idempotent split")]
    NoCentralSplit,
    #[error("negative Radon–Hurwitz argument {0}")]
    NegativeIndex(i64),
    #[error("p−q ≡ {0} (mod 8) is odd; use the quotient classification")]
    OddType(usize),
    #[error("p−q ≡ {0} (mod 8) is outside the domain of this operation")]
    WrongType(usize),
    #[error("representation ({l0},{l1}) is not finite-dimensional")]
    InfiniteRep { l0: String, l1: String },
    #[error("generator indices must be distinct, in range and ordered c<a<b")]
    BadIndices,
    #[error("dimension {0} exceeds the configured cap {1}; raise --max-n")]
    CapExceeded(usize, usize),
    #[error("p+q = {0} exceeds the search limit {1}")]
    SearchLimit(usize, usize),
    #[error("no matrix satisfies the defining relations: {0}")]
    NoSolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
