//! Exact scalar arithmetic and the Dirac matrix apparatus.

pub mod dirac;
pub mod linalg;
pub mod matrix;
pub mod scalar;

pub use dirac::{
    anticommutator, canonical_conjugate, commutator, dirac_matrix, hermiticity, pauli,
    primed_reference, primed_transform, CovariantClass, Hermiticity, MatrixKind,
};
pub use linalg::{null_space, rank};
pub use matrix::{dot, Matrix2, Matrix4, Vec4};
pub use scalar::{ratio, ExactComplex, QSqrt2, Scalar, FLOAT_TOL};
