//! Independent ternary oracle: dense evaluation straight from the structure
//! constants and the written-out ternary identities, with plain nested loops
//! over basis tuples.

#![allow(dead_code)]

use std::sync::OnceLock;

use homnary::{
    check, check_on_vectors, ExactAlgebra, ExactMap, ExactVector, Law, QuadScalar, SignPattern,
    SymmetryKind,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub type V = Vec<QuadScalar>;

pub fn q(v: i64) -> QuadScalar {
    QuadScalar::integer(v)
}

/// `k/√5`.
pub fn s5(k: i64) -> QuadScalar {
    let sign = if k < 0 { '-' } else { '+' };
    let text = format!("0 {sign} {}/5*r", k.abs());
    QuadScalar::parse(&text, homnary::FieldContext::Quadratic(5)).unwrap()
}

pub fn vector(coords: &[QuadScalar]) -> ExactVector {
    ExactVector::new(coords.to_vec())
}

fn zero(d: usize) -> V {
    vec![QuadScalar::zero(); d]
}

fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(c: &QuadScalar, a: &V) -> V {
    a.iter().map(|x| c * x).collect()
}

pub struct Oracle<'a> {
    pub alg: &'a ExactAlgebra,
    d: usize,
}

impl<'a> Oracle<'a> {
    pub fn new(alg: &'a ExactAlgebra) -> Self {
        assert_eq!(alg.arity(), 3, "oracle is ternary only");
        Oracle { alg, d: alg.dim() }
    }

    pub fn m(&self, x: &V, y: &V, z: &V) -> V {
        let mut out = zero(self.d);
        for i in (0..self.d).filter(|&i| !x[i].is_zero()) {
            for j in (0..self.d).filter(|&j| !y[j].is_zero()) {
                for k in (0..self.d).filter(|&k| !z[k].is_zero()) {
                    let c = &(&x[i] * &y[j]) * &z[k];
                    for (l, o) in out.iter_mut().enumerate() {
                        *o = &*o + &(&c * self.alg.constant(&[i, j, k], l));
                    }
                }
            }
        }
        out
    }

    /// `α_j(x)`, `j` in `0..2`.
    pub fn a(&self, j: usize, x: &V) -> V {
        apply(&self.alg.alphas()[j], x)
    }

    pub fn basis(&self, i: usize) -> V {
        let mut v = zero(self.d);
        v[i] = q(1);
        v
    }

    /// `[α1 x1, α2 x2, [x3,x4,x5]]` and
    /// `[[x1,x2,x3], α1 x4, α2 x5] + [α1 x3, [x1,x2,x4], α2 x5] + [α1 x3, α2 x4, [x1,x2,x5]]`.
    pub fn nambu(&self, x: &[V; 5]) -> (V, V) {
        let [x1, x2, x3, x4, x5] = x;
        let lhs = self.m(&self.a(0, x1), &self.a(1, x2), &self.m(x3, x4, x5));
        let t1 = self.m(&self.m(x1, x2, x3), &self.a(0, x4), &self.a(1, x5));
        let t2 = self.m(&self.a(0, x3), &self.m(x1, x2, x4), &self.a(1, x5));
        let t3 = self.m(&self.a(0, x3), &self.a(1, x4), &self.m(x1, x2, x5));
        (lhs, add(&add(&t1, &t2), &t3))
    }

    /// The three placements of the inner product.
    pub fn placements(&self, x: &[V; 5]) -> [V; 3] {
        let [x1, x2, x3, x4, x5] = x;
        [
            self.m(&self.m(x1, x2, x3), &self.a(0, x4), &self.a(1, x5)),
            self.m(&self.a(0, x1), &self.m(x2, x3, x4), &self.a(1, x5)),
            self.m(&self.a(0, x1), &self.a(1, x2), &self.m(x3, x4, x5)),
        ]
    }

    /// `Σ_σ sgn(σ) [α1 x_σ1, α2 x_σ2, [x_σ3, x_σ4, x_σ5]]`.
    pub fn jacobi_sum(&self, x: &[V; 5]) -> V {
        static S5: OnceLock<Vec<(Vec<usize>, i64)>> = OnceLock::new();
        let mut sum = zero(self.d);
        for (perm, sign) in S5.get_or_init(|| heap_permutations(5)) {
            let p: Vec<&V> = perm.iter().map(|&i| &x[i]).collect();
            let inner = self.m(p[2], p[3], p[4]);
            if inner.iter().all(|c| c.is_zero()) {
                continue;
            }
            let term = self.m(&self.a(0, p[0]), &self.a(1, p[1]), &inner);
            sum = add(&sum, &scale(&q(*sign), &term));
        }
        sum
    }

    pub fn nambu_holds(&self, x: &[V; 5]) -> bool {
        let (l, r) = self.nambu(x);
        l == r
    }

    pub fn total_holds(&self, x: &[V; 5], weak: bool) -> bool {
        let [p0, p1, p2] = self.placements(x);
        if weak {
            p0 == p2
        } else {
            p0 == p1 && p1 == p2
        }
    }

    pub fn partial_holds(&self, x: &[V; 5], signs: [i64; 3]) -> bool {
        let [p0, p1, p2] = self.placements(x);
        let s = add(
            &add(&scale(&q(signs[0]), &p0), &scale(&q(signs[1]), &p1)),
            &scale(&q(signs[2]), &p2),
        );
        s.iter().all(|c| c.is_zero())
    }

    pub fn jacobi_holds(&self, x: &[V; 5]) -> bool {
        self.jacobi_sum(x).iter().all(|c| c.is_zero())
    }

    /// All six permutations of the three arguments, compared against the sign rule.
    pub fn symmetry_holds(&self, x: &[V; 3], skew: bool) -> bool {
        let base = self.m(&x[0], &x[1], &x[2]);
        heap_permutations(3).into_iter().all(|(p, sign)| {
            let v = self.m(&x[p[0]], &x[p[1]], &x[p[2]]);
            let expected = if skew {
                scale(&q(sign), &base)
            } else {
                base.clone()
            };
            v == expected
        })
    }

    /// Least failing 0-based basis 5-tuple in lexicographic order.
    pub fn first_failure5(&self, holds: impl Fn(&[V; 5]) -> bool + Sync) -> Option<[usize; 5]> {
        let d = self.d;
        (0..d.pow(5))
            .into_par_iter()
            .map(|t| [4, 3, 2, 1, 0].map(|p| t / d.pow(p) % d))
            .find_first(|idx| !holds(&idx.map(|i| self.basis(i))))
    }

    pub fn first_failure3(&self, holds: impl Fn(&[V; 3]) -> bool) -> Option<[usize; 3]> {
        let d = self.d;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let x = [a, b, c].map(|i| self.basis(i));
                    if !holds(&x) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }
}

pub fn apply(m: &ExactMap, x: &V) -> V {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .filter(|&c| !x[c].is_zero())
                .fold(QuadScalar::zero(), |acc, c| &acc + &(m.get(r, c) * &x[c]))
        })
        .collect()
}

/// Heap's algorithm, with signs tracked per swap.
pub fn heap_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    let mut out = vec![(a.clone(), sign)];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Algebra fixtures (default parameters), in listing order.
pub fn algebra_fixtures() -> Vec<ExactAlgebra> {
    homnary::catalog::list_fixtures()
        .iter()
        .filter_map(
            |info| match homnary::catalog::get_fixture(info.name, &[]).unwrap() {
                homnary::catalog::Fixture::Algebra(a) => Some(a),
                homnary::catalog::Fixture::Map { .. } => None,
            },
        )
        .collect()
}

/// Same dimension, arity, products and twist maps; names are ignored.
pub fn same_structure(a: &ExactAlgebra, b: &ExactAlgebra) -> bool {
    a.dim() == b.dim()
        && a.arity() == b.arity()
        && a.products() == b.products()
        && a.alphas() == b.alphas()
}

pub fn all_laws() -> Vec<Law> {
    vec![
        Law::Symmetry(SymmetryKind::Symmetric),
        Law::Symmetry(SymmetryKind::Skew),
        Law::HomNambu,
        Law::HomJacobi,
        Law::TotalAssoc { weak: false },
        Law::TotalAssoc { weak: true },
        Law::PartialAssoc(SignPattern::all_plus(3)),
        Law::PartialAssoc(SignPattern::new(vec![1, -1, 1]).unwrap()),
    ]
}

/// Algebra fixtures plus the twisted ones with identity alphas.
pub fn multilinearity_subjects() -> Vec<ExactAlgebra> {
    let mut out = algebra_fixtures();
    for name in ["twisted_total_1", "twisted_total_2"] {
        let a = homnary::catalog::algebra(name).unwrap();
        out.push(ExactAlgebra::new(name, a.dim(), a.arity(), a.products().to_vec()).unwrap());
    }
    out
}

fn random_vector(rng: &mut impl Rng, dim: usize) -> ExactVector {
    ExactVector::new(
        (0..dim)
            .map(|_| QuadScalar::integer(rng.random_range(-2..=2)))
            .collect(),
    )
}

/// Compares every law's basis verdict with its verdict on `samples` random
/// integer vector tuples; returns one line per disagreement and the number of
/// (algebra, law) pairs examined.
pub fn multilinearity_mismatches(samples: usize, seed: u64) -> (Vec<String>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    let mut pairs = 0;
    for alg in multilinearity_subjects() {
        for law in all_laws() {
            pairs += 1;
            let basis = check(&alg, &law).unwrap().passed();
            let len = law.arguments(alg.arity());
            let failures = (0..samples)
                .filter(|_| {
                    let xs: Vec<ExactVector> = (0..len)
                        .map(|_| random_vector(&mut rng, alg.dim()))
                        .collect();
                    check_on_vectors(&alg, &law, &xs).unwrap().is_some()
                })
                .count();
            if basis != (failures == 0) {
                mismatches.push(format!(
                    "{} {law:?}: basis pass={basis}, random failures={failures}",
                    alg.name()
                ));
            }
        }
    }
    (mismatches, pairs)
}
