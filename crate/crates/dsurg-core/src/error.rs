use thiserror::Error;

/// Errors raised when an input violates one of the documented invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial must have at least one coefficient")]
    EmptyPolynomial,

    #[error("leading coefficient a_{genus} must be nonzero")]
    ZeroLeadingCoefficient { genus: u64 },

    #[error("normalization failed: a_0 + 2*sum(a_j) = {value}, expected 1")]
    NotNormalized { value: i128 },

    #[error("pretzel parameter m = {m} is out of range, need m >= 3")]
    PretzelParamOutOfRange { m: u64 },

    #[error("torsion coefficient t_{index} = {value} is negative; not an L-space knot polynomial")]
    NegativeTorsion { index: u64, value: i64 },

    #[error("torsion table must end with t_g = 0, got t_{index} = {value}")]
    NonzeroTrailingTorsion { index: u64, value: i64 },

    #[error("torsion table must have at least one entry")]
    EmptyTorsion,

    #[error("surgery slope must be positive")]
    ZeroSlope,

    #[error("delta = |H_1| must be positive")]
    ZeroDelta,

    #[error("spin^c index i = {i} is out of range for slope n = {n}, need |i| <= n/2")]
    SpinCIndexOutOfRange { n: u64, i: i64 },

    #[error("interval [{lower}, {upper}) is empty, need lower < upper")]
    EmptyInterval { lower: u64, upper: u64 },

    #[error("coefficient arithmetic overflowed")]
    Overflow,

    #[error("cannot parse rational from {input:?}")]
    RationalParse { input: String },

    #[error("rational denominator must be nonzero")]
    ZeroDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
