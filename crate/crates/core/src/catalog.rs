//! Built-in exact fixtures.
//!
//! The two-dimensional ternary algebras, their endomorphisms and the twisted
//! product tables are the standard reference examples, entered by hand.
//! `filippov4`, `heis4`, `sym1`, `abelian` and the two extra maps on
//! `filippov4`/`heis4` are invented fixtures that exercise the Lie-type
//! checkers and tensor products.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::exactnum::{FieldContext, QuadScalar, Rational, ScalarError};
use crate::{ExactAlgebra, ExactMap, ExactVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error("fixture `{name}` takes {expected} parameters, got {found}")]
    ParamCount {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("parameter out of domain for `{name}`: {reason}")]
    ParamDomain { name: String, reason: String },
    #[error("malformed fixture spec `{0}`")]
    Spec(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Algebra classes a fixture is known to belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTag {
    TotallyAssociative,
    PartiallyAssociative,
    /// Skew-symmetric and satisfies the (Hom-)Nambu identity.
    NambuLie,
    /// Skew-symmetric and satisfies the (Hom-)Jacobi identity.
    Lie,
    Symmetric,
    /// A map fixture that is an endomorphism of its base algebra.
    Endomorphism,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::TotallyAssociative => "totally-associative",
            ClassTag::PartiallyAssociative => "partially-associative",
            ClassTag::NambuLie => "nambu-lie",
            ClassTag::Lie => "lie",
            ClassTag::Symmetric => "symmetric",
            ClassTag::Endomorphism => "endomorphism",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureInfo {
    pub name: &'static str,
    /// Parameter names; empty for fixed fixtures.
    pub params: &'static [&'static str],
    /// Values used when a parameterized fixture is requested without parameters.
    pub defaults: &'static [i64],
    pub tags: &'static [ClassTag],
    /// Constructed here rather than taken from the reference examples.
    pub invented: bool,
}

impl FixtureInfo {
    /// `name` or `name(p1,p2)`.
    pub fn signature(&self) -> String {
        if self.params.is_empty() {
            self.name.to_string()
        } else {
            format!("{}({})", self.name, self.params.join(","))
        }
    }

    pub fn default_params(&self) -> Vec<QuadScalar> {
        self.defaults
            .iter()
            .map(|&v| QuadScalar::integer(v))
            .collect()
    }
}

/// A fixture is either an algebra or a linear map on a base algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum Fixture {
    Algebra(ExactAlgebra),
    Map { map: ExactMap, base: ExactAlgebra },
}

impl Fixture {
    pub fn algebra(&self) -> &ExactAlgebra {
        match self {
            Fixture::Algebra(a) => a,
            Fixture::Map { base, .. } => base,
        }
    }
}

use ClassTag::*;

const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo {
        name: "abelian",
        params: &["dim", "n"],
        defaults: &[2, 3],
        tags: &[
            TotallyAssociative,
            PartiallyAssociative,
            NambuLie,
            Lie,
            Symmetric,
        ],
        invented: true,
    },
    FixtureInfo {
        name: "filippov4",
        params: &[],
        defaults: &[],
        tags: &[NambuLie, Lie],
        invented: true,
    },
    FixtureInfo {
        name: "filippov4_cycle",
        params: &[],
        defaults: &[],
        tags: &[Endomorphism],
        invented: true,
    },
    FixtureInfo {
        name: "heis4",
        params: &[],
        defaults: &[],
        tags: &[NambuLie, Lie],
        invented: true,
    },
    FixtureInfo {
        name: "heis4_diag",
        params: &["a", "b", "c"],
        defaults: &[2, 3, 5],
        tags: &[Endomorphism],
        invented: true,
    },
    FixtureInfo {
        name: "partial_assoc_2dim",
        params: &[],
        defaults: &[],
        tags: &[PartiallyAssociative],
        invented: false,
    },
    FixtureInfo {
        name: "partial_endo",
        params: &["a", "b"],
        defaults: &[2, 3],
        tags: &[Endomorphism],
        invented: false,
    },
    FixtureInfo {
        name: "sym1",
        params: &[],
        defaults: &[],
        tags: &[TotallyAssociative, Symmetric],
        invented: true,
    },
    FixtureInfo {
        name: "total_assoc_2dim",
        params: &[],
        defaults: &[],
        tags: &[TotallyAssociative, Symmetric],
        invented: false,
    },
    FixtureInfo {
        name: "total_auto_1",
        params: &[],
        defaults: &[],
        tags: &[Endomorphism],
        invented: false,
    },
    FixtureInfo {
        name: "total_auto_2",
        params: &[],
        defaults: &[],
        tags: &[Endomorphism],
        invented: false,
    },
    FixtureInfo {
        name: "total_auto_3",
        params: &[],
        defaults: &[],
        tags: &[Endomorphism],
        invented: false,
    },
    FixtureInfo {
        name: "total_auto_4",
        params: &[],
        defaults: &[],
        tags: &[Endomorphism],
        invented: false,
    },
    FixtureInfo {
        name: "total_auto_5",
        params: &[],
        defaults: &[],
        tags: &[Endomorphism],
        invented: false,
    },
    FixtureInfo {
        name: "total_auto_6",
        params: &[],
        defaults: &[],
        tags: &[Endomorphism],
        invented: false,
    },
    FixtureInfo {
        name: "twisted_partial",
        params: &["a", "b"],
        defaults: &[2, 3],
        tags: &[PartiallyAssociative],
        invented: false,
    },
    FixtureInfo {
        name: "twisted_total_1",
        params: &[],
        defaults: &[],
        tags: &[TotallyAssociative],
        invented: false,
    },
    FixtureInfo {
        name: "twisted_total_2",
        params: &[],
        defaults: &[],
        tags: &[TotallyAssociative],
        invented: false,
    },
];

/// Every fixture, ordered by name.
pub fn list_fixtures() -> Vec<FixtureInfo> {
    let mut out = FIXTURES.to_vec();
    out.sort_by_key(|f| f.name);
    out
}

pub fn fixture_info(name: &str) -> Option<&'static FixtureInfo> {
    FIXTURES.iter().find(|f| f.name == name)
}

/// Splits `name(p1, p2)` into the name and parsed scalar parameters.
pub fn parse_fixture_spec(spec: &str) -> Result<(String, Vec<QuadScalar>), CatalogError> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else {
        return Ok((spec.to_string(), Vec::new()));
    };
    let inner = spec[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| CatalogError::Spec(spec.to_string()))?;
    let params = inner
        .split(',')
        .map(|p| QuadScalar::parse(p, FieldContext::Rational))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((spec[..open].trim().to_string(), params))
}

/// Builds a fixture; parameterized fixtures fall back to their defaults when
/// `params` is empty.
pub fn get_fixture(name: &str, params: &[QuadScalar]) -> Result<Fixture, CatalogError> {
    let info = fixture_info(name).ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
    let defaults = info.default_params();
    let params = if params.is_empty() {
        &defaults[..]
    } else {
        params
    };
    if params.len() != info.params.len() {
        return Err(CatalogError::ParamCount {
            name: name.to_string(),
            expected: info.params.len(),
            found: params.len(),
        });
    }
    let domain = |reason: &str| CatalogError::ParamDomain {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    let fixture = match name {
        "abelian" => {
            let dim = small_int(&params[0])
                .filter(|&d| d >= 1)
                .ok_or_else(|| domain("dim must be a positive integer"))?;
            let n = small_int(&params[1])
                .filter(|&n| n >= 2)
                .ok_or_else(|| domain("n must be an integer >= 2"))?;
            Fixture::Algebra(abelian(dim, n)?)
        }
        "filippov4" => Fixture::Algebra(filippov4()?),
        "filippov4_cycle" => Fixture::Map {
            map: permutation_map(&[1, 2, 0, 3])?,
            base: filippov4()?,
        },
        "heis4" => Fixture::Algebra(heis4()?),
        "heis4_diag" => {
            let (a, b, c) = (&params[0], &params[1], &params[2]);
            let abc = a * b * c;
            Fixture::Map {
                map: diagonal(&[a.clone(), b.clone(), c.clone(), abc])?,
                base: heis4()?,
            }
        }
        "partial_assoc_2dim" => Fixture::Algebra(partial_assoc_2dim()?),
        "partial_endo" => {
            if params[0].is_zero() {
                return Err(domain("a must be nonzero"));
            }
            Fixture::Map {
                map: partial_endo(&params[0], &params[1])?,
                base: partial_assoc_2dim()?,
            }
        }
        "sym1" => Fixture::Algebra(sym1()?),
        "total_assoc_2dim" => Fixture::Algebra(total_assoc_2dim()?),
        "total_auto_1" | "total_auto_2" | "total_auto_3" | "total_auto_4" | "total_auto_5"
        | "total_auto_6" => {
            let k: usize = name["total_auto_".len()..].parse().expect("static name");
            Fixture::Map {
                map: total_auto(k)?,
                base: total_assoc_2dim()?,
            }
        }
        "twisted_partial" => {
            if params[0].is_zero() {
                return Err(domain("a must be nonzero"));
            }
            Fixture::Algebra(twisted_partial(&params[0], &params[1])?)
        }
        "twisted_total_1" => Fixture::Algebra(twisted_total_1()?),
        "twisted_total_2" => Fixture::Algebra(twisted_total_2()?),
        _ => unreachable!("every listed fixture is handled"),
    };
    Ok(fixture)
}

/// Shorthand for algebra fixtures with default parameters.
pub fn algebra(name: &str) -> Result<ExactAlgebra, CatalogError> {
    match get_fixture(name, &[])? {
        Fixture::Algebra(a) => Ok(a),
        Fixture::Map { .. } => Err(CatalogError::Unknown(format!("{name} is a map"))),
    }
}

/// Shorthand for map fixtures with default parameters, with their base.
pub fn map(name: &str) -> Result<(ExactMap, ExactAlgebra), CatalogError> {
    match get_fixture(name, &[])? {
        Fixture::Map { map, base } => Ok((map, base)),
        Fixture::Algebra(_) => Err(CatalogError::Unknown(format!("{name} is an algebra"))),
    }
}

fn small_int(x: &QuadScalar) -> Option<usize> {
    let r = x.rational_part();
    (x.is_rational() && r.is_integer()).then(|| r.to_integer().try_into().ok())?
}

fn q(v: i64) -> QuadScalar {
    QuadScalar::integer(v)
}

/// `k/√5`, stored as `(k/5)·√5`.
fn over_sqrt5(k: i64) -> QuadScalar {
    QuadScalar::new(
        Rational::zero(),
        Rational::new(k.into(), 5.into()),
        FieldContext::Quadratic(5),
    )
    .expect("5 is square-free")
}

fn vec_of(coords: &[QuadScalar]) -> ExactVector {
    ExactVector::new(coords.to_vec())
}

fn ints(coords: &[i64]) -> ExactVector {
    ExactVector::new(coords.iter().map(|&c| q(c)).collect())
}

/// Product table with 1-based tuples.
fn table(
    name: &str,
    dim: usize,
    arity: usize,
    rows: Vec<(&[usize], ExactVector)>,
) -> Result<ExactAlgebra, CatalogError> {
    let entries = rows
        .into_iter()
        .map(|(t, v)| (t.iter().map(|i| i - 1).collect(), v));
    Ok(ExactAlgebra::from_products(name, dim, arity, entries)?)
}

fn rows(entries: &[&[QuadScalar]]) -> Result<ExactMap, CatalogError> {
    Ok(ExactMap::from_rows(
        entries.iter().map(|r| r.to_vec()).collect(),
    )?)
}

fn int_rows(entries: &[&[i64]]) -> Result<ExactMap, CatalogError> {
    Ok(ExactMap::from_rows(
        entries
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect(),
    )?)
}

fn diagonal(values: &[QuadScalar]) -> Result<ExactMap, CatalogError> {
    let n = values.len();
    Ok(ExactMap::from_rows(
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            values[r].clone()
                        } else {
                            QuadScalar::zero()
                        }
                    })
                    .collect()
            })
            .collect(),
    )?)
}

/// Sends `e_{j+1}` to `e_{images[j]+1}`.
fn permutation_map(images: &[usize]) -> Result<ExactMap, CatalogError> {
    let n = images.len();
    Ok(ExactMap::from_columns(
        images.iter().map(|&i| ExactVector::basis(n, i)).collect(),
    )?)
}

pub fn abelian(dim: usize, n: usize) -> Result<ExactAlgebra, CatalogError> {
    Ok(ExactAlgebra::from_products(
        format!("abelian({dim},{n})"),
        dim,
        n,
        Vec::new(),
    )?)
}

/// `m(e1,e1,e1) = e2`, all other basis products zero.
pub fn partial_assoc_2dim() -> Result<ExactAlgebra, CatalogError> {
    table(
        "partial_assoc_2dim",
        2,
        3,
        vec![(&[1, 1, 1], ints(&[0, 1]))],
    )
}

/// `e1 ↦ a e1 + b e2`, `e2 ↦ a³ e2`.
pub fn partial_endo(a: &QuadScalar, b: &QuadScalar) -> Result<ExactMap, CatalogError> {
    let a3 = a * a * a;
    rows(&[&[a.clone(), QuadScalar::zero()], &[b.clone(), a3]])
}

/// Twist of `partial_assoc_2dim` by `partial_endo(a, b)`: `m̃(e1,e1,e1) = a³ e2`.
pub fn twisted_partial(a: &QuadScalar, b: &QuadScalar) -> Result<ExactAlgebra, CatalogError> {
    let a3 = a * a * a;
    let base = table(
        "twisted_partial",
        2,
        3,
        vec![(&[1, 1, 1], vec_of(&[QuadScalar::zero(), a3]))],
    )?;
    let rho = partial_endo(a, b)?;
    Ok(base.with_alphas(vec![rho.clone(), rho])?)
}

pub fn total_assoc_2dim() -> Result<ExactAlgebra, CatalogError> {
    table(
        "total_assoc_2dim",
        2,
        3,
        vec![
            (&[1, 1, 1], ints(&[1, 0])),
            (&[1, 1, 2], ints(&[0, 1])),
            (&[1, 2, 2], ints(&[1, 1])),
            (&[2, 1, 1], ints(&[0, 1])),
            (&[2, 2, 1], ints(&[1, 1])),
            (&[2, 2, 2], ints(&[1, 2])),
            (&[1, 2, 1], ints(&[0, 1])),
            (&[2, 1, 2], ints(&[1, 1])),
        ],
    )
}

/// The six listed automorphisms of `total_assoc_2dim`, matrices read row by
/// row with columns as images.
pub fn total_auto(k: usize) -> Result<ExactMap, CatalogError> {
    let s = over_sqrt5;
    match k {
        1 => int_rows(&[&[1, 0], &[0, 1]]),
        2 => int_rows(&[&[-1, 0], &[0, -1]]),
        3 => int_rows(&[&[-1, -1], &[0, 1]]),
        4 => rows(&[&[s(-1), s(-3)], &[s(2), s(1)]]),
        5 => int_rows(&[&[1, 1], &[0, -1]]),
        6 => rows(&[&[s(1), s(3)], &[s(-2), s(-1)]]),
        _ => Err(CatalogError::Unknown(format!("total_auto_{k}"))),
    }
}

/// `m̃_1` with `ρ_1(e1) = e1`, `ρ_1(e2) = e1 − e2`.
pub fn twisted_total_1() -> Result<ExactAlgebra, CatalogError> {
    let alg = table(
        "twisted_total_1",
        2,
        3,
        vec![
            (&[1, 1, 1], ints(&[1, 0])),
            (&[1, 1, 2], ints(&[1, -1])),
            (&[1, 2, 2], ints(&[2, -1])),
            (&[2, 1, 1], ints(&[1, -1])),
            (&[2, 2, 1], ints(&[2, -1])),
            (&[2, 2, 2], ints(&[3, -2])),
            (&[1, 2, 1], ints(&[1, -1])),
            (&[2, 1, 2], ints(&[2, -1])),
        ],
    )?;
    let rho = rows(&[&[q(1), q(1)], &[q(0), q(-1)]])?;
    Ok(alg.with_alphas(vec![rho.clone(), rho])?)
}

/// `m̃_2` over ℚ(√5) with `ρ_2(e1) = (1/√5) e1 − (2/√5) e2`,
/// `ρ_2(e2) = (3/√5) e1 − (1/√5) e2`.
pub fn twisted_total_2() -> Result<ExactAlgebra, CatalogError> {
    let s = over_sqrt5;
    let alg = table(
        "twisted_total_2",
        2,
        3,
        vec![
            (&[1, 1, 1], vec_of(&[s(1), s(-2)])),
            (&[1, 1, 2], vec_of(&[s(3), s(-1)])),
            (&[1, 2, 2], vec_of(&[s(4), s(-3)])),
            (&[2, 1, 1], vec_of(&[s(3), s(-1)])),
            (&[2, 2, 1], vec_of(&[s(4), s(-3)])),
            (&[2, 2, 2], vec_of(&[s(7), s(-4)])),
            (&[1, 2, 1], vec_of(&[s(3), s(-1)])),
            (&[2, 1, 2], vec_of(&[s(4), s(-3)])),
        ],
    )?;
    let rho = ExactMap::from_columns(vec![vec_of(&[s(1), s(-2)]), vec_of(&[s(3), s(-1)])])?;
    Ok(alg.with_alphas(vec![rho.clone(), rho])?)
}

/// `[e_i, e_j, e_k] = ε(i,j,k,l) e_l` on four basis vectors.
pub fn filippov4() -> Result<ExactAlgebra, CatalogError> {
    let mut entries = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                if i == j || j == k || i == k {
                    continue;
                }
                let l = 6 - i - j - k;
                let sign = levi_civita(&[i, j, k, l]);
                let mut coords = vec![QuadScalar::zero(); 4];
                coords[l] = q(sign);
                entries.push((vec![i, j, k], ExactVector::new(coords)));
            }
        }
    }
    Ok(ExactAlgebra::from_products("filippov4", 4, 3, entries)?)
}

fn levi_civita(p: &[usize]) -> i64 {
    let mut sign = 1;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Skew ternary bracket with `[e1,e2,e3] = e4`; `e4` is central.
pub fn heis4() -> Result<ExactAlgebra, CatalogError> {
    let mut entries = Vec::new();
    for (perm, sign) in [
        ([0, 1, 2], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([2, 1, 0], -1),
    ] {
        entries.push((perm.to_vec(), ints(&[0, 0, 0, sign])));
    }
    Ok(ExactAlgebra::from_products("heis4", 4, 3, entries)?)
}

/// One-dimensional `m(e,e,e) = e`.
pub fn sym1() -> Result<ExactAlgebra, CatalogError> {
    Ok(ExactAlgebra::from_products(
        "sym1",
        1,
        3,
        vec![(vec![0, 0, 0], ExactVector::new(vec![QuadScalar::one()]))],
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{check_symmetry, SymmetryKind};
    use crate::construct::yau_twist;

    #[test]
    fn names_sorted_and_unique() {
        let names: Vec<&str> = list_fixtures().iter().map(|f| f.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
        assert!(names.contains(&"total_assoc_2dim"));
    }

    #[test]
    fn twisted_total_1_product() {
        let a = twisted_total_1().unwrap();
        assert_eq!(a.product(&[0, 0, 1]), &ints(&[1, -1]));
    }

    #[test]
    fn abelian_is_zero() {
        let Fixture::Algebra(a) = get_fixture("abelian", &[q(3), q(3)]).unwrap() else {
            panic!()
        };
        assert_eq!(a.dim(), 3);
        assert!(a.products().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn twisted_partial_at_identity_is_base() {
        let t = twisted_partial(&q(1), &q(0)).unwrap();
        let base = partial_assoc_2dim().unwrap();
        assert_eq!(t.products(), base.products());
        assert!(t.is_classical());
        let twisted = yau_twist(&base, &partial_endo(&q(1), &q(0)).unwrap()).unwrap();
        assert_eq!(twisted.products(), base.products());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            get_fixture("partial_endo", &[q(0), q(1)]),
            Err(CatalogError::ParamDomain { .. })
        ));
        assert!(matches!(
            get_fixture("abelian", &[q(0), q(3)]),
            Err(CatalogError::ParamDomain { .. })
        ));
        assert!(matches!(
            get_fixture("sym1", &[q(1)]),
            Err(CatalogError::ParamCount { .. })
        ));
        assert!(matches!(
            get_fixture("nope", &[]),
            Err(CatalogError::Unknown(_))
        ));
    }

    #[test]
    fn spec_parsing() {
        let (name, params) = parse_fixture_spec("twisted_partial(2, -3/2)").unwrap();
        assert_eq!(name, "twisted_partial");
        assert_eq!(params, vec![q(2), QuadScalar::ratio(-3, 2)]);
        assert_eq!(parse_fixture_spec("sym1").unwrap(), ("sym1".into(), vec![]));
        assert!(parse_fixture_spec("abelian(2,3").is_err());
    }

    #[test]
    fn filippov_is_skew() {
        assert!(check_symmetry(&filippov4().unwrap(), SymmetryKind::Skew).passed());
        assert!(check_symmetry(&heis4().unwrap(), SymmetryKind::Skew).passed());
    }
}
