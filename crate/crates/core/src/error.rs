use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("parity violation: central value {central} and coordinate sum {sum} differ mod 2")]
    ParityViolation { sum: i64, central: i64 },
    #[error("weight {0} is not dominant (need a_g >= ... >= a_1 >= 0)")]
    NotDominant(String),
    #[error("genus mismatch: expected {expected}, got {got}")]
    GenusMismatch { expected: usize, got: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("size budget exceeded for {what}: {size} > {budget}")]
    SizeBudget { what: String, size: u128, budget: u128 },
    #[error("Weyl group of genus {g} too large to enumerate (limit {limit})")]
    GroupTooLarge { g: usize, limit: usize },
    #[error("invalid parabolic P_{r} for genus {g}")]
    InvalidParabolic { g: usize, r: usize },
    #[error("tensor index pair ({i}, {j}) out of range for degree {s}")]
    IndexOutOfRange { i: usize, j: usize, s: usize },
    #[error("chain element {index} does not lie in the nested subgroup W(G_{level})")]
    NotInSubgroup { index: usize, level: usize },
    #[error("coset of W_P contains {count} elements of minimal length")]
    AmbiguousCoset { count: usize },
    #[error("partition/weight mismatch: {0}")]
    PartitionMismatch(String),
    #[error("prime {p} must exceed the tensor degree {s}")]
    PrimeTooSmall { p: u64, s: usize },
    #[error("prime {p} divides 2g = {two_g}")]
    PrimeDividesTwoG { p: u64, two_g: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("malformed torus double coset: {0}")]
    MalformedCoset(String),
    #[error("central value {central} differs from a_g + ... + a_1 = {sum}")]
    NonStandardCentral { central: i64, sum: i64 },
    #[error("chain depth {depth} exceeds genus {g}")]
    DepthTooLarge { depth: usize, g: usize },
    #[error("invalid element: {0}")]
    InvalidElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
