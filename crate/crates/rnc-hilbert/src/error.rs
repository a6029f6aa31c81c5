use thiserror::Error;

/// Errors reported by the scheme constructors, the combinatorial engine and
/// the rank oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A raw multiplicity list contained a negative entry.
    #[error("multiplicity {0} is negative")]
    NegativeMultiplicity(i64),

    /// An operation that needs at least one point was given an empty scheme.
    #[error("operation requires a nonempty scheme")]
    EmptyScheme,

    /// The projection step needs at least two points.
    #[error("projection requires at least 2 points, scheme has {0}")]
    TooFewPoints(usize),

    /// The curve-containment criterion only applies when the ideal has a
    /// nonzero graded piece in the queried degree.
    #[error("containment criterion inapplicable: the ideal is zero in degree {t}")]
    CriterionInapplicable { t: u32 },

    /// Two interpolation points were given the same curve parameter.
    #[error("duplicate curve parameter {0}")]
    DuplicateParameter(u64),

    /// The oracle modulus is not prime.
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    /// The oracle modulus is too small for the queried degree/multiplicities:
    /// derivative coefficients must stay nonzero mod p.
    #[error("modulus {modulus} too small: this query needs a prime > {required}")]
    ModulusTooSmall { modulus: u64, required: u64 },

    /// The cubic oracle disagreed with itself across seeds on every
    /// configured prime; the query cannot be certified.
    #[error(
        "oracle disagreement for scheme {mults:?} at t={t}: \
         values {values:?} across seeds persisted after retrying {primes_tried} prime(s)"
    )]
    OracleDisagreement {
        mults: Vec<u32>,
        t: u32,
        values: Vec<u64>,
        primes_tried: usize,
    },
}
