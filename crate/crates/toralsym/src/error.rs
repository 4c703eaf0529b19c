use thiserror::Error;

/// Errors shared across the library and reported by the CLI as domain failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not unimodular: determinant must be +1 or -1, got {0}")]
    NotUnimodular(String),
    #[error("matrix is scalar (+1 or -1 times the identity); its commutant is the full matrix ring")]
    ScalarMatrix,
    #[error("matrix has finite order; there is no infinite-order symmetry generator")]
    FiniteOrder,
    #[error("bad discriminant {0}: need a positive non-square integer congruent to 0 or 1 mod 4")]
    BadDiscriminant(String),
    #[error("form is not indefinite with non-square discriminant")]
    NotIndefinite,
    #[error("form is imprimitive (content {0} > 1)")]
    ImprimitiveForm(String),
    #[error("fixed-point set is infinite (some eigenvalue of the power equals 1)")]
    InfiniteFixedSet,
    #[error("cannot parse matrix from {0:?}: expected four integers \"a11 a12 a21 a22\" or \"a11,a12;a21,a22\"")]
    ParseMatrix(String),
    #[error("{0}")]
    Unsupported(String),
}
