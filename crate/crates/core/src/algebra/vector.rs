use std::fmt;

use crate::exactnum::Scalar;

/// Coordinates of an element of `V` in the basis `e_1, …, e_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![T::zero(); dim],
        }
    }

    /// The basis vector `e_{index+1}`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[index] = T::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Nonzero coordinates with their indices.
    pub fn support(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, scale: &T, other: &Vector<T>) {
        for (c, o) in self.coords.iter_mut().zip(&other.coords) {
            if !o.is_zero() {
                *c += &scale.mul_ref(o);
            }
        }
    }

    pub fn add(&self, other: &Vector<T>) -> Vector<T> {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn scaled(&self, scale: &T) -> Vector<T> {
        Vector {
            coords: self.coords.iter().map(|c| c.mul_ref(scale)).collect(),
        }
    }

    pub fn neg(&self) -> Vector<T> {
        Vector {
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Coordinate-wise [`Scalar::approx_eq`]; plain equality for exact scalars.
    pub fn approx_eq(&self, other: &Vector<T>) -> bool {
        self.coords.len() == other.coords.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Vector<U> {
        Vector {
            coords: self.coords.iter().map(f).collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<T> std::ops::Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}
