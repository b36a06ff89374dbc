use super::tuples::{decode, encode, tuple_count};
use super::{AlgebraError, LinearMap, Vector};
use crate::exactnum::{context_of, FieldContext, Scalar};

/// A finite-dimensional n-ary Hom-algebra `(V, m, α)` given by structure
/// constants: `m(e_{i1}, …, e_{in}) = Σ_k C[i1…in][k] e_k`.
///
/// The twist family `α = (α_1, …, α_{n−1})` defaults to identities, which is
/// the classical (untwisted) algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct HomAlgebra<T> {
    name: String,
    dim: usize,
    arity: usize,
    ctx: FieldContext,
    // indexed by the lexicographic tuple index
    products: Vec<Vector<T>>,
    nonzero: Vec<bool>,
    alphas: Vec<LinearMap<T>>,
}

impl<T: Scalar> HomAlgebra<T> {
    /// Classical algebra from the full table of basis products, listed in
    /// lexicographic tuple order.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        arity: usize,
        products: Vec<Vector<T>>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if arity < 2 {
            return Err(AlgebraError::ArityTooSmall(arity));
        }
        let count = tuple_count(dim, arity).ok_or(AlgebraError::TooLarge)?;
        if products.len() != count {
            return Err(AlgebraError::WrongProductCount {
                expected: count,
                found: products.len(),
            });
        }
        if let Some(bad) = products.iter().find(|v| v.dim() != dim) {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        let ctx = context_of(products.iter().flat_map(|v| v.coords()))?;
        let nonzero = products.iter().map(|v| !v.is_zero()).collect();
        Ok(HomAlgebra {
            name: name.into(),
            dim,
            arity,
            ctx,
            products,
            nonzero,
            alphas: vec![LinearMap::identity(dim); arity - 1],
        })
    }

    /// Classical algebra from flat structure constants `C[t·dim + k]`.
    pub fn from_constants(
        name: impl Into<String>,
        dim: usize,
        arity: usize,
        constants: Vec<T>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let count = tuple_count(dim, arity).ok_or(AlgebraError::TooLarge)?;
        if constants.len() != count * dim {
            return Err(AlgebraError::WrongProductCount {
                expected: count * dim,
                found: constants.len(),
            });
        }
        let mut it = constants.into_iter();
        let products = (0..count)
            .map(|_| Vector::new(it.by_ref().take(dim).collect()))
            .collect();
        Self::new(name, dim, arity, products)
    }

    /// Classical algebra from a sparse list of nonzero products (0-based
    /// tuples); unlisted products are zero, repeated tuples are rejected.
    pub fn from_products<I>(
        name: impl Into<String>,
        dim: usize,
        arity: usize,
        entries: I,
    ) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Vec<usize>, Vector<T>)>,
    {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if arity < 2 {
            return Err(AlgebraError::ArityTooSmall(arity));
        }
        let count = tuple_count(dim, arity).ok_or(AlgebraError::TooLarge)?;
        let mut products = vec![Vector::zero(dim); count];
        let mut seen = vec![false; count];
        for (tuple, value) in entries {
            if tuple.len() != arity {
                return Err(AlgebraError::WrongArgCount {
                    expected: arity,
                    found: tuple.len(),
                });
            }
            if let Some(&i) = tuple.iter().find(|&&i| i >= dim) {
                return Err(AlgebraError::IndexOutOfRange { index: i, dim });
            }
            let t = encode(&tuple, dim);
            if std::mem::replace(&mut seen[t], true) {
                return Err(AlgebraError::DuplicateProduct(tuple));
            }
            products[t] = value;
        }
        Self::new(name, dim, arity, products)
    }

    /// Replaces the twist family.
    pub fn with_alphas(mut self, alphas: Vec<LinearMap<T>>) -> Result<Self, AlgebraError> {
        if alphas.len() != self.arity - 1 {
            return Err(AlgebraError::WrongAlphaCount {
                expected: self.arity - 1,
                found: alphas.len(),
            });
        }
        for (i, a) in alphas.iter().enumerate() {
            if a.rows() != self.dim || a.cols() != self.dim {
                return Err(AlgebraError::AlphaShape { index: i + 1 });
            }
            self.ctx = self.ctx.join(a.context())?;
        }
        self.alphas = alphas;
        Ok(self)
    }

    /// Declares a larger ground field than the constants need.
    pub fn with_context(mut self, ctx: FieldContext) -> Result<Self, AlgebraError> {
        self.ctx = self.ctx.join(ctx)?;
        Ok(self)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn alphas(&self) -> &[LinearMap<T>] {
        &self.alphas
    }

    /// True when every twist map is the identity.
    pub fn is_classical(&self) -> bool {
        self.alphas.iter().all(LinearMap::is_identity)
    }

    /// Product of basis vectors, 0-based tuple.
    pub fn product(&self, tuple: &[usize]) -> &Vector<T> {
        &self.products[encode(tuple, self.dim)]
    }

    /// All basis products in lexicographic tuple order.
    pub fn products(&self) -> &[Vector<T>] {
        &self.products
    }

    /// `(tuple, value)` for every nonzero basis product.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (Vec<usize>, &Vector<T>)> {
        self.products
            .iter()
            .enumerate()
            .filter(|(t, _)| self.nonzero[*t])
            .map(|(t, v)| (decode(t, self.dim, self.arity), v))
    }

    pub fn constant(&self, tuple: &[usize], k: usize) -> &T {
        &self.product(tuple)[k]
    }

    pub fn evaluate(&self, args: &[Vector<T>]) -> Result<Vector<T>, AlgebraError> {
        if args.len() != self.arity {
            return Err(AlgebraError::WrongArgCount {
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            if a.dim() != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim,
                    found: a.dim(),
                });
            }
            self.ctx.join(context_of(a.coords())?)?;
        }
        let refs: Vec<&Vector<T>> = args.iter().collect();
        Ok(self.eval(&refs))
    }

    /// Multilinear extension of the structure constants; arguments are
    /// assumed to be validated.
    pub(crate) fn eval(&self, args: &[&Vector<T>]) -> Vector<T> {
        let supports: Vec<Vec<(usize, &T)>> = args.iter().map(|a| a.support().collect()).collect();
        let mut out = Vector::zero(self.dim);
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        self.accumulate(&supports, 0, 0, None, &mut out);
        out
    }

    fn accumulate(
        &self,
        supports: &[Vec<(usize, &T)>],
        level: usize,
        prefix: usize,
        coeff: Option<&T>,
        out: &mut Vector<T>,
    ) {
        if level == supports.len() {
            if self.nonzero[prefix] {
                match coeff {
                    Some(c) => out.add_scaled(c, &self.products[prefix]),
                    None => out.add_scaled(&T::one(), &self.products[prefix]),
                }
            }
            return;
        }
        for &(i, x) in &supports[level] {
            let next = prefix * self.dim + i;
            let c = match coeff {
                Some(c) => c.mul_ref(x),
                None => x.clone(),
            };
            self.accumulate(supports, level + 1, next, Some(&c), out);
        }
    }

    /// Matrix of `L_x: y ↦ m(x_1, …, x_{n−1}, y)`.
    pub fn adjoint_map(&self, x: &[Vector<T>]) -> Result<LinearMap<T>, AlgebraError> {
        if x.len() + 1 != self.arity {
            return Err(AlgebraError::WrongArgCount {
                expected: self.arity - 1,
                found: x.len(),
            });
        }
        let columns = (0..self.dim)
            .map(|j| {
                let mut args = x.to_vec();
                args.push(Vector::basis(self.dim, j));
                self.evaluate(&args)
            })
            .collect::<Result<Vec<_>, _>>()?;
        LinearMap::from_columns(columns)
    }

    /// Converts every scalar, e.g. exact constants to `f64`.
    pub fn map_scalars<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> HomAlgebra<U> {
        HomAlgebra {
            name: self.name.clone(),
            dim: self.dim,
            arity: self.arity,
            ctx: self.ctx,
            products: self.products.iter().map(|v| v.map(f)).collect(),
            nonzero: self.nonzero.clone(),
            alphas: self.alphas.iter().map(|a| a.map_scalars(f)).collect(),
        }
    }
}
