//! Exact construction of the graded fork diagram algebras `A_{n,k}`.
//!
//! The algebras are assembled from first principles: quotients of
//! polynomial rings by complete symmetric ideals, Kazhdan-Lusztig
//! canonical bases of the Hecke algebra, and the combinatorics of
//! oriented fork diagrams. Each layer carries checks for the structural
//! properties it is expected to satisfy.
//!
//! All arithmetic is exact. The core types are generic over an integer
//! coefficient ring (see [`Scalar`]); the aliases below fix it to
//! arbitrary precision integers.

pub mod algebra;
pub mod diagrams;
pub mod error;
pub mod functors;
pub mod hecke;
pub mod linalg;
pub mod polyring;
pub mod quotient;
pub mod repr;
pub mod scalar;
pub mod weights;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Coefficient ring used throughout the command line tool and the tests.
pub type Int = num_bigint::BigInt;

pub type IntPolynomial = polyring::Polynomial<Int>;
pub type LaurentV = polyring::Laurent<Int>;
pub type IntQuotientRing = quotient::QuotientRing<Int>;
pub type IntHeckeElement = hecke::HeckeElement<Int>;
pub type IntKlTable = hecke::KlTable<Int>;
pub type IntDiagramAlgebra = algebra::DiagramAlgebra<Int>;
pub type IntElement = algebra::Element<Int>;
pub type IntGradedModule = repr::GradedModule<Int>;

/// Largest `n` accepted by builders unless `FORKALG_CAP` says otherwise.
pub const DEFAULT_CAP: usize = 7;

/// Current cap on `n`, read from the `FORKALG_CAP` environment variable.
pub fn size_cap() -> usize {
    std::env::var("FORKALG_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}
