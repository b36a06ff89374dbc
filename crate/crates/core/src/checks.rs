//! Exhaustive identity checkers.
//!
//! Both sides of every identity are multilinear in their arguments, so a
//! verdict over all basis tuples decides the identity on the whole space.
//! Basis tuples are visited in lexicographic order and the reported witness
//! is always the least failing tuple, also when the scan runs in parallel.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::tuples::{decode, permutations, tuple_count, SignedPermutation};
use crate::algebra::{AlgebraError, HomAlgebra, LinearMap, Vector};
use crate::exactnum::{context_of, Scalar};

/// Which identity a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Symmetric,
    Skew,
    HomNambu,
    HomJacobi,
    TotalAssoc,
    WeakTotalAssoc,
    PartialAssoc,
    Morphism,
}

impl Identity {
    /// Short tag used in report lines.
    pub fn tag(self) -> &'static str {
        match self {
            Identity::Symmetric => "symmetric",
            Identity::Skew => "skew",
            Identity::HomNambu => "nambu",
            Identity::HomJacobi => "jacobi",
            Identity::TotalAssoc => "total",
            Identity::WeakTotalAssoc => "weak-total",
            Identity::PartialAssoc => "partial",
            Identity::Morphism => "morphism",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// A failing instance: 0-based basis indices of the arguments (empty when
/// the arguments were general vectors) and the two sides that differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<T> {
    pub tuple: Vec<usize>,
    pub lhs: Vector<T>,
    pub rhs: Vector<T>,
    /// Which part of the identity failed, when it has several.
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport<T> {
    identity: Identity,
    witness: Option<Witness<T>>,
    tuples_checked: usize,
}

impl<T> CheckReport<T> {
    pub fn identity(&self) -> Identity {
        self.identity
    }

    pub fn verdict(&self) -> Verdict {
        if self.witness.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness<T>> {
        self.witness.as_ref()
    }

    /// Basis tuples examined; on failure, up to and including the witness.
    pub fn tuples_checked(&self) -> usize {
        self.tuples_checked
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    Symmetric,
    Skew,
}

/// Per-placement weights `±1` for the alternate partially associative identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern(Vec<i8>);

impl SignPattern {
    pub fn new(signs: Vec<i8>) -> Result<Self, AlgebraError> {
        if signs.iter().all(|&s| s == 1 || s == -1) {
            Ok(SignPattern(signs))
        } else {
            Err(AlgebraError::BadSigns)
        }
    }

    pub fn all_plus(n: usize) -> Self {
        SignPattern(vec![1; n])
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }
}

/// A multilinear identity that can be evaluated on an argument tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Law {
    Symmetry(SymmetryKind),
    HomNambu,
    HomJacobi,
    TotalAssoc { weak: bool },
    PartialAssoc(SignPattern),
}

type Failure<T> = (Vector<T>, Vector<T>, Option<String>);

impl Law {
    pub fn identity(&self) -> Identity {
        match self {
            Law::Symmetry(SymmetryKind::Symmetric) => Identity::Symmetric,
            Law::Symmetry(SymmetryKind::Skew) => Identity::Skew,
            Law::HomNambu => Identity::HomNambu,
            Law::HomJacobi => Identity::HomJacobi,
            Law::TotalAssoc { weak: false } => Identity::TotalAssoc,
            Law::TotalAssoc { weak: true } => Identity::WeakTotalAssoc,
            Law::PartialAssoc(_) => Identity::PartialAssoc,
        }
    }

    /// Number of arguments the identity takes for an `arity`-ary product.
    pub fn arguments(&self, arity: usize) -> usize {
        match self {
            Law::Symmetry(_) => arity,
            _ => 2 * arity - 1,
        }
    }

    fn validate<T: Scalar>(&self, alg: &HomAlgebra<T>) -> Result<(), AlgebraError> {
        match self {
            Law::PartialAssoc(signs) if signs.0.len() != alg.arity() => {
                Err(AlgebraError::WrongArgCount {
                    expected: alg.arity(),
                    found: signs.0.len(),
                })
            }
            _ => Ok(()),
        }
    }

    /// Permutations needed by the residual, built once per check.
    fn permutations(&self, arity: usize) -> Vec<SignedPermutation> {
        match self {
            Law::HomJacobi => permutations(self.arguments(arity)),
            _ => Vec::new(),
        }
    }

    fn residual<T: Scalar>(
        &self,
        alg: &HomAlgebra<T>,
        perms: &[SignedPermutation],
        xs: &[&Vector<T>],
    ) -> Option<Failure<T>> {
        match self {
            Law::Symmetry(kind) => symmetry_residual(alg, *kind, xs),
            Law::HomNambu => nambu_residual(alg, xs),
            Law::HomJacobi => jacobi_residual(alg, perms, xs),
            Law::TotalAssoc { weak } => total_residual(alg, *weak, xs),
            Law::PartialAssoc(signs) => partial_residual(alg, signs, xs),
        }
    }
}

/// Runs `law` over every basis tuple of `alg`.
pub fn check<T: Scalar>(alg: &HomAlgebra<T>, law: &Law) -> Result<CheckReport<T>, AlgebraError> {
    law.validate(alg)?;
    let basis: Vec<Vector<T>> = (0..alg.dim())
        .map(|i| Vector::basis(alg.dim(), i))
        .collect();
    let len = law.arguments(alg.arity());
    let perms = law.permutations(alg.arity());
    let (witness, tuples_checked) = scan(alg.dim(), len, |tuple| {
        let args: Vec<&Vector<T>> = tuple.iter().map(|&i| &basis[i]).collect();
        law.residual(alg, &perms, &args)
    })?;
    Ok(CheckReport {
        identity: law.identity(),
        witness,
        tuples_checked,
    })
}

/// Evaluates `law` on one tuple of arbitrary vectors.
pub fn check_on_vectors<T: Scalar>(
    alg: &HomAlgebra<T>,
    law: &Law,
    xs: &[Vector<T>],
) -> Result<Option<Witness<T>>, AlgebraError> {
    law.validate(alg)?;
    let len = law.arguments(alg.arity());
    if xs.len() != len {
        return Err(AlgebraError::WrongArgCount {
            expected: len,
            found: xs.len(),
        });
    }
    for x in xs {
        if x.dim() != alg.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: alg.dim(),
                found: x.dim(),
            });
        }
        alg.context().join(context_of(x.coords())?)?;
    }
    let refs: Vec<&Vector<T>> = xs.iter().collect();
    Ok(law
        .residual(alg, &law.permutations(alg.arity()), &refs)
        .map(|(lhs, rhs, note)| Witness {
            tuple: Vec::new(),
            lhs,
            rhs,
            note,
        }))
}

pub fn check_symmetry<T: Scalar>(alg: &HomAlgebra<T>, kind: SymmetryKind) -> CheckReport<T> {
    check(alg, &Law::Symmetry(kind)).expect("symmetry law has no preconditions")
}

pub fn check_hom_nambu<T: Scalar>(alg: &HomAlgebra<T>) -> CheckReport<T> {
    check(alg, &Law::HomNambu).expect("Hom-Nambu law has no preconditions")
}

pub fn check_hom_jacobi<T: Scalar>(alg: &HomAlgebra<T>) -> CheckReport<T> {
    check(alg, &Law::HomJacobi).expect("Hom-Jacobi law has no preconditions")
}

pub fn check_total_assoc<T: Scalar>(alg: &HomAlgebra<T>, weak: bool) -> CheckReport<T> {
    check(alg, &Law::TotalAssoc { weak }).expect("associativity law has no preconditions")
}

/// The partially associative identity with all signs `+1`.
pub fn check_partial_assoc<T: Scalar>(alg: &HomAlgebra<T>) -> CheckReport<T> {
    check(alg, &Law::PartialAssoc(SignPattern::all_plus(alg.arity())))
        .expect("sign pattern matches arity")
}

pub fn check_partial_assoc_signed<T: Scalar>(
    alg: &HomAlgebra<T>,
    signs: &SignPattern,
) -> Result<CheckReport<T>, AlgebraError> {
    check(alg, &Law::PartialAssoc(signs.clone()))
}

/// Decides whether `f: A → B` is a morphism of n-ary Hom-algebras:
/// `f(m(x_1, …, x_n)) = m'(f(x_1), …, f(x_n))` and `f ∘ α_i = α'_i ∘ f`.
pub fn is_morphism<T: Scalar>(
    f: &LinearMap<T>,
    a: &HomAlgebra<T>,
    b: &HomAlgebra<T>,
) -> Result<CheckReport<T>, AlgebraError> {
    if a.arity() != b.arity() {
        return Err(AlgebraError::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    if f.cols() != a.dim() || f.rows() != b.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.dim(),
            found: f.cols(),
        });
    }
    a.context().join(b.context())?.join(f.context())?;

    let images: Vec<Vector<T>> = (0..a.dim()).map(|j| f.column(j)).collect();
    let (witness, tuples_checked) = scan(a.dim(), a.arity(), |tuple| {
        let lhs = f.apply_unchecked(a.product(tuple));
        let args: Vec<&Vector<T>> = tuple.iter().map(|&i| &images[i]).collect();
        let rhs = b.eval(&args);
        (!lhs.approx_eq(&rhs)).then_some((lhs, rhs, None))
    })?;
    let witness = witness.or_else(|| {
        a.alphas()
            .iter()
            .zip(b.alphas())
            .enumerate()
            .find_map(|(i, (alpha, alpha_b))| {
                let left = f.compose(alpha).ok()?;
                let right = alpha_b.compose(f).ok()?;
                (0..a.dim()).find_map(|j| {
                    let (l, r) = (left.column(j), right.column(j));
                    (!l.approx_eq(&r)).then(|| Witness {
                        tuple: vec![j],
                        lhs: l,
                        rhs: r,
                        note: Some(format!("alpha {}", i + 1)),
                    })
                })
            })
    });
    Ok(CheckReport {
        identity: Identity::Morphism,
        witness,
        tuples_checked,
    })
}

/// Finds the lexicographically least tuple for which `residual` reports a
/// failure.
fn scan<T, F>(
    dim: usize,
    len: usize,
    residual: F,
) -> Result<(Option<Witness<T>>, usize), AlgebraError>
where
    T: Scalar,
    F: Fn(&[usize]) -> Option<Failure<T>> + Sync,
{
    let total = tuple_count(dim, len).ok_or(AlgebraError::TooLarge)?;
    let found = (0..total).into_par_iter().find_map_first(|t| {
        let tuple = decode(t, dim, len);
        residual(&tuple).map(|(lhs, rhs, note)| {
            (
                t,
                Witness {
                    tuple,
                    lhs,
                    rhs,
                    note,
                },
            )
        })
    });
    Ok(match found {
        Some((t, w)) => (Some(w), t + 1),
        None => (None, total),
    })
}

fn differ<T: Scalar>(lhs: Vector<T>, rhs: Vector<T>, note: Option<String>) -> Option<Failure<T>> {
    (!lhs.approx_eq(&rhs)).then_some((lhs, rhs, note))
}

fn symmetry_residual<T: Scalar>(
    alg: &HomAlgebra<T>,
    kind: SymmetryKind,
    xs: &[&Vector<T>],
) -> Option<Failure<T>> {
    let base = alg.eval(xs);
    let expected = match kind {
        SymmetryKind::Symmetric => base,
        SymmetryKind::Skew => base.neg(),
    };
    // adjacent transpositions generate the symmetric group
    (0..xs.len() - 1).find_map(|p| {
        let mut swapped = xs.to_vec();
        swapped.swap(p, p + 1);
        differ(
            alg.eval(&swapped),
            expected.clone(),
            Some(format!("swap {},{}", p + 1, p + 2)),
        )
    })
}

fn twisted<T: Scalar>(alg: &HomAlgebra<T>, alpha: usize, x: &Vector<T>) -> Vector<T> {
    alg.alphas()[alpha].apply_unchecked(x)
}

// [α_1 x_1, …, α_{n−1} x_{n−1}, [x_n, …, x_{2n−1}]]
//   = Σ_s [α_1 x_n, …, α_s x_{n+s−1}, [x_1, …, x_{n−1}, x_{n+s}], α_{s+1} x_{n+s+1}, …]
fn nambu_residual<T: Scalar>(alg: &HomAlgebra<T>, xs: &[&Vector<T>]) -> Option<Failure<T>> {
    let n = alg.arity();
    let inner = alg.eval(&xs[n - 1..]);
    let mut lhs_args: Vec<Vector<T>> = (0..n - 1).map(|a| twisted(alg, a, xs[a])).collect();
    lhs_args.push(inner);
    let lhs = alg.eval(&lhs_args.iter().collect::<Vec<_>>());

    let head = &xs[..n - 1];
    let mut rhs = Vector::zero(alg.dim());
    for s in 0..n {
        let mut inner_args = head.to_vec();
        inner_args.push(xs[n - 1 + s]);
        let inner = alg.eval(&inner_args);
        if inner.is_zero() {
            continue;
        }
        let mut args = Vec::with_capacity(n);
        for a in 0..s {
            args.push(twisted(alg, a, xs[n - 1 + a]));
        }
        args.push(inner);
        for a in s..n - 1 {
            args.push(twisted(alg, a, xs[a + n]));
        }
        rhs.add_scaled(&T::one(), &alg.eval(&args.iter().collect::<Vec<_>>()));
    }
    differ(lhs, rhs, None)
}

// Σ_{σ ∈ S_{2n−1}} sgn(σ) [α_1 x_σ(1), …, α_{n−1} x_σ(n−1), [x_σ(n), …, x_σ(2n−1)]] = 0
fn jacobi_residual<T: Scalar>(
    alg: &HomAlgebra<T>,
    perms: &[SignedPermutation],
    xs: &[&Vector<T>],
) -> Option<Failure<T>> {
    let n = alg.arity();
    let k = xs.len();
    let twisted_args: Vec<Vec<Vector<T>>> = (0..n - 1)
        .map(|a| xs.iter().map(|x| twisted(alg, a, x)).collect())
        .collect();
    let mut inner_cache: Vec<Option<Vector<T>>> = vec![None; k.pow(n as u32)];
    let mut sum = Vector::zero(alg.dim());
    let one = T::one();
    let minus_one = -T::one();
    for perm in perms {
        let tail = &perm.images[n - 1..];
        let key = tail.iter().fold(0, |acc, &i| acc * k + i);
        let inner = inner_cache[key].get_or_insert_with(|| {
            let args: Vec<&Vector<T>> = tail.iter().map(|&i| xs[i]).collect();
            alg.eval(&args)
        });
        if inner.is_zero() {
            continue;
        }
        let mut args: Vec<&Vector<T>> = (0..n - 1)
            .map(|a| &twisted_args[a][perm.images[a]])
            .collect();
        args.push(inner);
        let term = alg.eval(&args);
        sum.add_scaled(if perm.sign > 0 { &one } else { &minus_one }, &term);
    }
    differ(sum, Vector::zero(alg.dim()), None)
}

// m(α_1 x_1, …, α_i x_i, m(x_{i+1}, …, x_{i+n}), α_{i+1} x_{i+n+1}, …, α_{n−1} x_{2n−1})
fn placement<T: Scalar>(alg: &HomAlgebra<T>, i: usize, xs: &[&Vector<T>]) -> Vector<T> {
    let n = alg.arity();
    let inner = alg.eval(&xs[i..i + n]);
    if inner.is_zero() {
        return inner;
    }
    let mut args = Vec::with_capacity(n);
    for (a, x) in xs.iter().enumerate().take(i) {
        args.push(twisted(alg, a, x));
    }
    args.push(inner);
    for a in i..n - 1 {
        args.push(twisted(alg, a, xs[a + n]));
    }
    alg.eval(&args.iter().collect::<Vec<_>>())
}

fn total_residual<T: Scalar>(
    alg: &HomAlgebra<T>,
    weak: bool,
    xs: &[&Vector<T>],
) -> Option<Failure<T>> {
    let n = alg.arity();
    let first = placement(alg, 0, xs);
    let others: Vec<usize> = if weak { vec![n - 1] } else { (1..n).collect() };
    others.into_iter().find_map(|i| {
        differ(
            first.clone(),
            placement(alg, i, xs),
            Some(format!("placement {i}")),
        )
    })
}

fn partial_residual<T: Scalar>(
    alg: &HomAlgebra<T>,
    signs: &SignPattern,
    xs: &[&Vector<T>],
) -> Option<Failure<T>> {
    let mut sum = Vector::zero(alg.dim());
    for (i, &s) in signs.signs().iter().enumerate() {
        sum.add_scaled(&T::from_i64(s.into()), &placement(alg, i, xs));
    }
    differ(sum, Vector::zero(alg.dim()), None)
}
