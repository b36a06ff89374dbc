//! The ternary Nambu-Lie bracket given by Jacobian determinants of
//! polynomials in three variables, and its twists by unimodular
//! substitutions `f ↦ f ∘ γ`.

mod jacobian;
mod poly;

use thiserror::Error;

pub use jacobian::{
    check_nambu_sampled, compose, jacobian_bracket, jacobian_det, random_poly, PolyMap3,
    PolyWitness, SampleOutcome, SampledReport,
};
pub use poly::{Exponents, Poly3, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("det J(gamma) is not the constant 1")]
    NotUnimodular,
}

impl PolyMap3<crate::exactnum::Rational> {
    /// Parses three comma-separated polynomials, e.g. `x1+x2^2, x2, x3`.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let parts: Vec<&str> = text.split(',').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(PolyError::Parse(format!(
                "expected three components in `{text}`"
            )));
        };
        Ok(PolyMap3::new(
            Poly3::parse(a)?,
            Poly3::parse(b)?,
            Poly3::parse(c)?,
        ))
    }
}
