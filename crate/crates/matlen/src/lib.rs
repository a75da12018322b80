//! Exact computation of lengths of generating sets of matrix algebras.
//!
//! Given a finite set `S` of n×n matrices over an exact field (arbitrary
//! precision rationals or a prime field GF(p)), this crate computes the
//! filtration of vector spaces spanned by products of elements of `S` of
//! bounded length, with or without the identity matrix assumed present as
//! a word of length zero. The stabilization point of that filtration is
//! the length of the generating set.
//!
//! The crate is organized as:
//!
//! - [`field`]: exact scalars over ℚ and GF(p);
//! - [`matrix`]: dense square matrices, characteristic and minimal
//!   polynomials, invertibility and derogatory tests;
//! - [`span`]: the incremental layered span engine, length profiles,
//!   word witnesses, and a brute-force enumeration oracle;
//! - [`constructions`]: the Jordan-block generator families and the
//!   k-diagonal calculus;
//! - [`verify`]: a check harness that recomputes the quantitative
//!   statements the engine is expected to reproduce, plus seeded
//!   randomized searches.

pub mod constructions;
pub mod error;
pub mod field;
pub mod matrix;
pub mod rng;
pub mod span;
pub mod verify;

pub use error::{FieldError, MatrixError, SpanError};
pub use field::{Field, Scalar};
pub use matrix::{IdentityBound, Polynomial, SquareMatrix};
pub use span::{LengthProfile, SpanBasis, Word};
