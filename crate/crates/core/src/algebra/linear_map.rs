use std::fmt;

use super::{AlgebraError, Vector};
use crate::exactnum::{context_of, FieldContext, Scalar};

/// Matrix of a linear map `V → W`.
///
/// Column `j` holds the coordinates of the image of `e_{j+1}`, so a matrix
/// written row by row as `[[1, 1], [0, -1]]` sends `e_1 ↦ e_1` and
/// `e_2 ↦ e_1 − e_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap<T> {
    rows: usize,
    cols: usize,
    // row-major
    entries: Vec<T>,
}

impl<T: Scalar> LinearMap<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::RaggedMatrix);
        }
        let entries: Vec<T> = rows.into_iter().flatten().collect();
        context_of(&entries)?;
        Ok(LinearMap {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds the map from the images of the basis vectors.
    pub fn from_columns(columns: Vec<Vector<T>>) -> Result<Self, AlgebraError> {
        let ncols = columns.len();
        let nrows = columns.first().map_or(0, Vector::dim);
        if ncols == 0 || nrows == 0 || columns.iter().any(|c| c.dim() != nrows) {
            return Err(AlgebraError::RaggedMatrix);
        }
        let rows = (0..nrows)
            .map(|r| columns.iter().map(|c| c[r].clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, T::one())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn scalar(dim: usize, value: T) -> Self {
        let mut m = Self::zero(dim, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = value.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.entries.iter()
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn context(&self) -> FieldContext {
        // validated on construction
        context_of(&self.entries).unwrap_or_default()
    }

    pub fn column(&self, col: usize) -> Vector<T> {
        Vector::new((0..self.rows).map(|r| self.get(r, col).clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.approx_eq(&T::one())
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn apply(&self, v: &Vector<T>) -> Result<Vector<T>, AlgebraError> {
        if v.dim() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector<T>) -> Vector<T> {
        let mut coords = vec![T::zero(); self.rows];
        for (j, x) in v.support() {
            for (r, c) in coords.iter_mut().enumerate() {
                let e = self.get(r, j);
                if !e.is_zero() {
                    *c += &e.mul_ref(x);
                }
            }
        }
        Vector::new(coords)
    }

    /// Matrix product `self · other`, i.e. the composition `self ∘ other`.
    pub fn compose(&self, other: &LinearMap<T>) -> Result<LinearMap<T>, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    let b = other.get(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &a.mul_ref(b);
                    }
                }
                out.entries[r * other.cols + c] = acc;
            }
        }
        Ok(out)
    }

    /// Kronecker product; basis `e_p ⊗ f_q` is index `p · other.dim + q`.
    pub fn kron(&self, other: &LinearMap<T>) -> LinearMap<T> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (p, q) = (r / other.rows, r % other.rows);
            for c in 0..cols {
                let (pp, qq) = (c / other.cols, c % other.cols);
                entries.push(self.get(p, pp).mul_ref(other.get(q, qq)));
            }
        }
        LinearMap {
            rows,
            cols,
            entries,
        }
    }

    pub fn approx_eq(&self, other: &LinearMap<T>) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn map_scalars<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LinearMap<U> {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for LinearMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
