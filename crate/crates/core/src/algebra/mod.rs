//! Structure-constant model of n-ary Hom-algebras.

mod hom_algebra;
mod linear_map;
pub mod tuples;
mod vector;

use thiserror::Error;

use crate::exactnum::ScalarError;

pub use hom_algebra::HomAlgebra;
pub use linear_map::LinearMap;
pub use vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("arity must be at least 2, got {0}")]
    ArityTooSmall(usize),
    #[error("dimension^arity overflows")]
    TooLarge,
    #[error("expected {expected} basis products, got {found}")]
    WrongProductCount { expected: usize, found: usize },
    #[error("expected {expected} arguments, got {found}")]
    WrongArgCount { expected: usize, found: usize },
    #[error("expected dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("product for tuple {0:?} given twice")]
    DuplicateProduct(Vec<usize>),
    #[error("expected {expected} twist maps, got {found}")]
    WrongAlphaCount { expected: usize, found: usize },
    #[error("twist map {index} is not dim x dim")]
    AlphaShape { index: usize },
    #[error("matrix rows have unequal or zero length")]
    RaggedMatrix,
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("twist requires a classical algebra (identity twist maps)")]
    NotClassical,
    #[error("sign pattern entries must be +1 or -1")]
    BadSigns,
    #[error("map must be square")]
    NotSquare,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
