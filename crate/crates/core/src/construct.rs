//! Constructions producing new Hom-algebras: Yau twisting and tensor products.

use crate::algebra::{AlgebraError, HomAlgebra, LinearMap, Vector};
use crate::exactnum::Scalar;

/// Twists a classical algebra along `rho`: the result has product
/// `ρ ∘ m` and twist family `(ρ, …, ρ)`.
///
/// When `rho` is an endomorphism of `alg` (see [`crate::checks::is_morphism`])
/// the twisted algebra satisfies the Hom-version of every identity the
/// classical one satisfies. That hypothesis is not checked here.
pub fn yau_twist<T: Scalar>(
    alg: &HomAlgebra<T>,
    rho: &LinearMap<T>,
) -> Result<HomAlgebra<T>, AlgebraError> {
    if !alg.is_classical() {
        return Err(AlgebraError::NotClassical);
    }
    yau_twist_forced(alg, rho)
}

/// [`yau_twist`] without requiring identity twist maps on the input; the
/// existing twist family is discarded.
pub fn yau_twist_forced<T: Scalar>(
    alg: &HomAlgebra<T>,
    rho: &LinearMap<T>,
) -> Result<HomAlgebra<T>, AlgebraError> {
    if !rho.is_square() {
        return Err(AlgebraError::NotSquare);
    }
    if rho.cols() != alg.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: alg.dim(),
            found: rho.cols(),
        });
    }
    let products = alg
        .products()
        .iter()
        .map(|v| rho.apply_unchecked(v))
        .collect();
    HomAlgebra::new(
        format!("{}_twisted", alg.name()),
        alg.dim(),
        alg.arity(),
        products,
    )?
    .with_context(alg.context())?
    .with_alphas(vec![rho.clone(); alg.arity() - 1])
}

/// `A ⊗ B` with product `m ⊗ m'` and twist maps `α_i ⊗ α'_i`.
///
/// The basis vector `e_p ⊗ f_q` gets index `p · dim_B + q` (0-based).
pub fn tensor_product<T: Scalar>(
    a: &HomAlgebra<T>,
    b: &HomAlgebra<T>,
) -> Result<HomAlgebra<T>, AlgebraError> {
    if a.arity() != b.arity() {
        return Err(AlgebraError::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    let ctx = a.context().join(b.context())?;
    let n = a.arity();
    let dim = a.dim() * b.dim();
    let mut entries = Vec::new();
    for (ta, va) in a.nonzero_products() {
        for (tb, vb) in b.nonzero_products() {
            let tuple: Vec<usize> = ta.iter().zip(&tb).map(|(p, q)| p * b.dim() + q).collect();
            let mut coords = vec![T::zero(); dim];
            for (p, x) in va.support() {
                for (q, y) in vb.support() {
                    coords[p * b.dim() + q] = x.mul_ref(y);
                }
            }
            entries.push((tuple, Vector::new(coords)));
        }
    }
    let alphas = a
        .alphas()
        .iter()
        .zip(b.alphas())
        .map(|(x, y)| x.kron(y))
        .collect();
    HomAlgebra::from_products(format!("{}_x_{}", a.name(), b.name()), dim, n, entries)?
        .with_context(ctx)?
        .with_alphas(alphas)
}
