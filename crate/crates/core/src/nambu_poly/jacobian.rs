use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Poly3, PolyError, Var};
use crate::exactnum::Scalar;

/// A polynomial transformation `γ = (γ1, γ2, γ3)` of three variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap3<T> {
    components: [Poly3<T>; 3],
}

impl<T: Scalar> PolyMap3<T> {
    pub fn new(g1: Poly3<T>, g2: Poly3<T>, g3: Poly3<T>) -> Self {
        PolyMap3 {
            components: [g1, g2, g3],
        }
    }

    pub fn identity() -> Self {
        Self::new(
            Poly3::var(Var::X1),
            Poly3::var(Var::X2),
            Poly3::var(Var::X3),
        )
    }

    pub fn components(&self) -> &[Poly3<T>; 3] {
        &self.components
    }

    /// `ρ_γ(f) = f ∘ γ`.
    pub fn pull_back(&self, f: &Poly3<T>) -> Poly3<T> {
        compose(f, self)
    }
}

/// Substitutes `γ` into `f`.
pub fn compose<T: Scalar>(f: &Poly3<T>, gamma: &PolyMap3<T>) -> Poly3<T> {
    let mut max = [0u32; 3];
    for (e, _) in f.terms() {
        for i in 0..3 {
            max[i] = max[i].max(e[i]);
        }
    }
    let powers: Vec<Vec<Poly3<T>>> = (0..3)
        .map(|i| {
            let mut ps = vec![Poly3::one()];
            for k in 1..=max[i] as usize {
                let next = &ps[k - 1] * &gamma.components[i];
                ps.push(next);
            }
            ps
        })
        .collect();
    let mut out = Poly3::zero();
    for (e, c) in f.terms() {
        let term =
            &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize]) * &powers[2][e[2] as usize];
        out = &out + &term.scale(c);
    }
    out
}

fn det3<T: Scalar>(m: &[[Poly3<T>; 3]; 3]) -> Poly3<T> {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let a = &m[0][0] * &minor(1, 2, 1, 2);
    let b = &m[0][1] * &minor(1, 2, 0, 2);
    let c = &m[0][2] * &minor(1, 2, 0, 1);
    &(&a - &b) + &c
}

fn jacobian_matrix<T: Scalar>(fs: [&Poly3<T>; 3]) -> [[Poly3<T>; 3]; 3] {
    fs.map(|f| Var::ALL.map(|v| f.partial(v)))
}

/// `[f1, f2, f3] = det(∂f_i/∂x_j)`.
pub fn jacobian_bracket<T: Scalar>(f1: &Poly3<T>, f2: &Poly3<T>, f3: &Poly3<T>) -> Poly3<T> {
    det3(&jacobian_matrix([f1, f2, f3]))
}

/// `det J(γ)`.
pub fn jacobian_det<T: Scalar>(gamma: &PolyMap3<T>) -> Poly3<T> {
    let [g1, g2, g3] = &gamma.components;
    jacobian_bracket(g1, g2, g3)
}

/// First failing identity of one sample.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyWitness<T> {
    pub identity: &'static str,
    pub lhs: Poly3<T>,
    pub rhs: Poly3<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleOutcome<T> {
    pub index: usize,
    pub failure: Option<PolyWitness<T>>,
}

/// Result of [`check_nambu_sampled`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledReport<T> {
    pub seed: u64,
    pub degree_bound: u32,
    /// `det J(γ)` when a transformation was given.
    pub gamma_det: Option<Poly3<T>>,
    pub outcomes: Vec<SampleOutcome<T>>,
}

impl<T> SampledReport<T> {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failure.is_none())
    }

    pub fn passed_count(&self) -> usize {
        self.outcomes.iter().filter(|o| o.failure.is_none()).count()
    }
}

/// Random polynomial of total degree at most `degree`, integer coefficients
/// drawn uniformly from `[-3, 3]` for every monomial.
pub fn random_poly<T: Scalar>(rng: &mut impl Rng, degree: u32) -> Poly3<T> {
    let mut terms = Vec::new();
    for total in 0..=degree {
        for a in 0..=total {
            for b in 0..=total - a {
                let c = total - a - b;
                terms.push(([a, b, c], T::from_i64(rng.random_range(-3..=3))));
            }
        }
    }
    Poly3::from_terms(terms)
}

/// Sampled exact verification of the ternary Nambu identity for the
/// Jacobian bracket, or, with `gamma`, of the Hom-Nambu identity for the
/// twisted bracket `ρ_γ ∘ [·,·,·]` with `α_1 = α_2 = ρ_γ`.
///
/// Each sample also checks skew-symmetry of the bracket in use and, with
/// `gamma`, the morphism identity `ρ_γ[f1,f2,f3] = [ρ_γ f1, ρ_γ f2, ρ_γ f3]`.
/// Sample `i` draws from its own ChaCha stream, so outcomes do not depend on
/// scheduling.
pub fn check_nambu_sampled<T: Scalar>(
    gamma: Option<&PolyMap3<T>>,
    samples: usize,
    degree_bound: u32,
    seed: u64,
) -> Result<SampledReport<T>, PolyError> {
    let gamma_det = match gamma {
        Some(g) => {
            let det = jacobian_det(g);
            if det != Poly3::one() {
                return Err(PolyError::NotUnimodular);
            }
            Some(det)
        }
        None => None,
    };
    let outcomes = (0..samples)
        .into_par_iter()
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index as u64);
            let fs: Vec<Poly3<T>> = (0..5)
                .map(|_| random_poly(&mut rng, degree_bound))
                .collect();
            SampleOutcome {
                index,
                failure: verify_sample(gamma, &fs),
            }
        })
        .collect();
    Ok(SampledReport {
        seed,
        degree_bound,
        gamma_det,
        outcomes,
    })
}

fn verify_sample<T: Scalar>(
    gamma: Option<&PolyMap3<T>>,
    fs: &[Poly3<T>],
) -> Option<PolyWitness<T>> {
    let twist = |f: &Poly3<T>| match gamma {
        Some(g) => g.pull_back(f),
        None => f.clone(),
    };
    let bracket = |a: &Poly3<T>, b: &Poly3<T>, c: &Poly3<T>| twist(&jacobian_bracket(a, b, c));
    let fail = |identity, lhs: Poly3<T>, rhs: Poly3<T>| {
        (lhs != rhs).then_some(PolyWitness { identity, lhs, rhs })
    };
    let [f1, f2, f3, f4, f5] = [&fs[0], &fs[1], &fs[2], &fs[3], &fs[4]];

    let b123 = bracket(f1, f2, f3);
    let skew = fail("skew", bracket(f2, f1, f3), -&b123)
        .or_else(|| fail("skew", bracket(f1, f3, f2), -&b123));
    if skew.is_some() {
        return skew;
    }

    if let Some(g) = gamma {
        let lhs = g.pull_back(&jacobian_bracket(f1, f2, f3));
        let rhs = jacobian_bracket(&g.pull_back(f1), &g.pull_back(f2), &g.pull_back(f3));
        if let Some(w) = fail("morphism", lhs, rhs) {
            return Some(w);
        }
    }

    // [α f1, α f2, [f3,f4,f5]] = [[f1,f2,f3], α f4, α f5]
    //                          + [α f3, [f1,f2,f4], α f5] + [α f3, α f4, [f1,f2,f5]]
    let (a1, a2, a3, a4, a5) = (twist(f1), twist(f2), twist(f3), twist(f4), twist(f5));
    let lhs = bracket(&a1, &a2, &bracket(f3, f4, f5));
    let rhs = &(&bracket(&b123, &a4, &a5) + &bracket(&a3, &bracket(f1, f2, f4), &a5))
        + &bracket(&a3, &a4, &bracket(f1, f2, f5));
    fail("nambu", lhs, rhs)
}
