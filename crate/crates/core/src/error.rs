use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("modulus must be a nonconstant polynomial")]
    ConstantModulus,
    #[error("expected a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial does not annihilate the matrix")]
    InvalidAnnihilator,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("multiplicity must be at least 1")]
    InvalidMultiplicity,
    #[error("duplicate root in congruence system")]
    DuplicateRoot,
    #[error("Newton iteration did not converge within {bound} steps")]
    NoConvergence { bound: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}
