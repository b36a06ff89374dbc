//! Exact toolkit for finite-dimensional n-ary Hom-algebras.
//!
//! Algebras are stored as structure-constant tensors over a generic
//! [`Scalar`]. Every identity checker enumerates basis tuples, which decides
//! the identity exactly because both sides are multilinear. Constructions
//! cover Yau twisting along an endomorphism and tensor products.

pub mod algebra;
pub mod catalog;
pub mod checks;
pub mod cli;
pub mod construct;
pub mod exactnum;
pub mod nambu_poly;

pub use algebra::{AlgebraError, HomAlgebra, LinearMap, Vector};
pub use checks::{
    check, check_hom_jacobi, check_hom_nambu, check_on_vectors, check_partial_assoc,
    check_partial_assoc_signed, check_symmetry, check_total_assoc, is_morphism, CheckReport,
    Identity, Law, SignPattern, SymmetryKind, Verdict, Witness,
};
pub use construct::{tensor_product, yau_twist, yau_twist_forced};
pub use exactnum::{FieldContext, QuadScalar, Rational, Scalar, ScalarError};

/// Exact algebra over ℚ or ℚ(√d); the type used by the catalog and the CLI.
pub type ExactAlgebra = HomAlgebra<QuadScalar>;
pub type ExactMap = LinearMap<QuadScalar>;
pub type ExactVector = Vector<QuadScalar>;
pub type ExactReport = CheckReport<QuadScalar>;

/// Algebra over plain rationals.
pub type RationalAlgebra = HomAlgebra<Rational>;
pub type RationalMap = LinearMap<Rational>;

/// Floating point approximations, compared with a relative tolerance.
pub type FloatAlgebra = HomAlgebra<f64>;
pub type FloatMap = LinearMap<f64>;
pub type Float32Algebra = HomAlgebra<f32>;
