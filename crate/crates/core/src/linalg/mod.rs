//! Exact linear algebra over ℚ and 𝔽_p.

pub mod field;
pub mod matrix;

pub use field::{parse_ratio, Field, PrimeField, Rationals};
pub use matrix::{
    axpy, column_space, densify, homology_dim, kernel_basis, rank, solve, sparsify, Echelon, ExactMatrix, SparseVec,
};
