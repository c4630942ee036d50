//! Exact generalized Pascal and Zhang-Liu matrices over GF(p), GF(p^k)
//! and ℚ.
//!
//! The matrix, Pascal-family, spectral and order code is generic over
//! [`Scalar`]. Two scalar types are provided: [`FieldElement`], whose field
//! is chosen at runtime from a spec string such as `gf:3^2` or `qq`, and
//! [`num_rational::BigRational`]. The aliases below name the common
//! instantiations.

pub mod arith;
pub mod census;
pub mod error;
pub mod field;
pub mod io;
pub mod matrix;
pub mod order;
pub mod pascal;
pub mod poly;
pub mod scalar;
pub mod selftest;
pub mod spectral;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldKind};
pub use matrix::SquareMatrix;
pub use order::{default_cap, p1_order, p2_order, q_order, q_order_bruteforce};
pub use pascal::{binomial, d_matrix, p1_matrix, p2_matrix, q_matrix, BinomialTable};
pub use scalar::{OrderResult, Rationals, Scalar, SearchResult};
pub use spectral::{
    diagonalizable_oracle, eigenpairs, factorize_q, is_diagonalizable, verify_factorization,
    z_parameter, Decomposition, Eigenpair,
};

/// Matrix over a runtime-selected field.
pub type Matrix = SquareMatrix<FieldElement>;
/// Matrix over ℚ with native big-rational entries.
pub type RationalMatrix = SquareMatrix<num_rational::BigRational>;
/// Factorization over a runtime-selected field.
pub type FieldDecomposition = Decomposition<FieldElement>;
