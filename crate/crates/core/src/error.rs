use thiserror::Error;

/// Errors raised by the arithmetic substrate, the curve machinery and the certifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(usize),

    #[error("field F_{p}^{degree} does not fit the packed 64-bit element encoding")]
    FieldTooLarge { p: u64, degree: usize },

    #[error("modulus is not a monic irreducible polynomial of degree {degree} over F_{p}")]
    ReducibleModulus { p: u64, degree: usize },

    #[error("zero has no multiplicative order")]
    ZeroElement,

    #[error("division by zero in F_{p}^{degree}")]
    DivisionByZero { p: u64, degree: usize },

    #[error("no elements of order {r} in a field with {order} elements")]
    NoRootsOfUnity { r: u64, order: u64 },

    #[error("operands live in incompatible fields ({0})")]
    FieldMismatch(String),

    #[error("characteristic mismatch: expected {expected}, got {actual}")]
    CharacteristicMismatch { expected: u64, actual: u64 },

    #[error("index r = {r} coincides with the residue characteristic")]
    Ramified { r: u64 },

    #[error("{0} is not an odd prime index")]
    InvalidIndex(u64),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not {p}-integral (denominator divisible by {p})")]
    NotPIntegral { p: u64 },

    #[error("polynomial has a non-trivial denominator; integer coefficients required")]
    NonIntegral,

    #[error("singular curve (discriminant vanishes)")]
    SingularCurve,

    #[error("{what}: size {size} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, size: u64, cap: u64 },

    #[error("degree bound {d} exceeds the enumeration limit {limit}")]
    DegreeBoundTooLarge { d: usize, limit: usize },

    #[error("invalid signature {0:?}: entries must be pairwise distinct and positive")]
    InvalidSignature(Vec<u32>),

    #[error("parameter pair ({a}, {b}) is divisible by 3 in both entries")]
    InvalidClass { a: i64, b: i64 },

    #[error("no good-reduction guarantee is available for p = {p}")]
    NoGoodReductionGuarantee { p: u64 },

    #[error("good-reduction guarantee contradicted: {0}")]
    Inconsistency(String),

    #[error("malformed family descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("supersingular data is invalid: {0}")]
    InvalidSupersingularData(String),

    #[error("malformed cache record: {0}")]
    CacheRecord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
