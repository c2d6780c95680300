use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("characteristic {0} is even, but 2 must be invertible")]
    EvenCharacteristic(u32),
    #[error("modulus has degree {found}, expected degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus is not monic")]
    NonMonicModulus,
    #[error("modulus is reducible over Z_{0}")]
    ReducibleModulus(u32),
    #[error("residue {value} is out of range for characteristic {p}")]
    ResidueOutOfRange { value: u64, p: u32 },
    #[error("field of order {p}^{m} is too large")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("value does not belong to this field")]
    FieldMismatch,
    #[error("automorphism exponent {i} must be positive and divide {m}")]
    InvalidExponent { i: u32, m: u32 },
    #[error("enumerating {size} items exceeds the bound {bound}")]
    EnumerationTooLarge { size: u128, bound: u128 },
    #[error("vector of length {0} is not divisible by 3")]
    LengthNotDivisibleBy3(usize),
    #[error("polynomials use different automorphisms")]
    AutMismatch,
    #[error("divisor does not have a unit leading coefficient")]
    NonMonicDivisor,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor search space of {size} exceeds the bound {bound}")]
    SearchSpaceTooLarge { size: u128, bound: u128 },
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("generator is not a right divisor of x^{0} - 1")]
    NotRightDivisor(usize),
    #[error("generator is not monic")]
    NotMonic,
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("generator and check polynomial are not coprime")]
    NotCoprime,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
