use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::PolyError;
use crate::exactnum::{format_rational, parse_rational, Rational, Scalar};

/// Exponent triple `(k1, k2, k3)` of `x1^k1 · x2^k2 · x3^k3`.
pub type Exponents = [u32; 3];

/// One of the three variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X1,
    X2,
    X3,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X1, Var::X2, Var::X3];

    pub fn index(self) -> usize {
        match self {
            Var::X1 => 0,
            Var::X2 => 1,
            Var::X3 => 2,
        }
    }
}

/// Polynomial in `x1, x2, x3`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly3<T> {
    terms: BTreeMap<Exponents, T>,
}

impl<T: Scalar> Poly3<T> {
    pub fn zero() -> Self {
        Poly3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::monomial(T::one(), e)
    }

    pub fn monomial(c: T, exponents: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, T)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<T> {
        match self.terms.len() {
            0 => Some(T::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn coefficient(&self, e: Exponents) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lexicographic order, highest first.
    pub fn terms(&self) -> Vec<(Exponents, &T)> {
        let mut out: Vec<(Exponents, &T)> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        out.sort_by(|a, b| grlex(&b.0, &a.0));
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly3 {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x.mul_ref(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative.
    pub fn partial(&self, var: Var) -> Self {
        let i = var.index();
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut d = *e;
            d[i] -= 1;
            (d, c.mul_ref(&T::from_i64(i64::from(e[i]))))
        }))
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[T; 3]) -> T {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x;
                }
            }
            acc += &term;
        }
        acc
    }

    pub fn map_coefficients<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly3<U> {
        Poly3::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

fn grlex(a: &Exponents, b: &Exponents) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl<T: Scalar> Add for &Poly3<T> {
    type Output = Poly3<T>;
    fn add(self, rhs: &Poly3<T>) -> Poly3<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &Poly3<T> {
    type Output = Poly3<T>;
    fn sub(self, rhs: &Poly3<T>) -> Poly3<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &Poly3<T> {
    type Output = Poly3<T>;
    fn mul(self, rhs: &Poly3<T>) -> Poly3<T> {
        let mut out = Poly3::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Poly3<T> {
    type Output = Poly3<T>;
    fn neg(self) -> Poly3<T> {
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl<T: Scalar> $trait for Poly3<T> {
            type Output = Poly3<T>;
            fn $method(self, rhs: Poly3<T>) -> Poly3<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Rational polynomials print as `2*x1^2*x3 - 1/3*x2`, highest graded-lex
/// term first; unit coefficients are omitted on non-constant terms.
impl fmt::Display for Poly3<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            let mut factors = Vec::new();
            let constant = e == [0, 0, 0];
            if constant || !magnitude.is_one() {
                factors.push(format_rational(&magnitude));
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Poly3<Rational> {
    /// Parses the report format, e.g. `x1 + x2^2`, `2*x1^2*x3 - 1/3*x2`.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let bad = |msg: &str| PolyError::Parse(format!("{msg} in `{text}`"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let mut poly = Poly3::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(bad("expected + or -")),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = Rational::one();
            let mut exps = [0u32; 3];
            for factor in term.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, power) = match var.split_once('^') {
                        Some((i, p)) => (i, p.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (var, 1),
                    };
                    let slot = match idx {
                        "1" => 0,
                        "2" => 1,
                        "3" => 2,
                        _ => return Err(bad("unknown variable")),
                    };
                    exps[slot] += power;
                } else {
                    let c = parse_rational(factor).map_err(|_| bad("bad coefficient"))?;
                    coeff *= c;
                }
            }
            if negative {
                coeff = -coeff;
            }
            poly.add_term(exps, coeff);
        }
        Ok(poly)
    }
}
