//! Exact arithmetic: prime fields, extension towers, dense univariate
//! polynomials, quotient-ring inversion, square roots, and factoring.
//!
//! All values are immutable after construction and safe to share across
//! threads; no operation mutates its inputs.

pub mod factor;
mod field;
pub mod fp;
mod poly;
mod tower;

pub use factor::{factor, is_irreducible, roots};
pub use field::{Field, FieldElement};
pub use poly::{Modulus, Polynomial};

#[derive(Debug, Clone, thiserror::Error)]
pub enum AlgebraError {
    #[error("characteristic must be an odd prime greater than 3, got {0}")]
    BadCharacteristic(u64),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("not invertible modulo the given polynomial; gcd degree {}", .0.degree().unwrap_or(0))]
    NotInvertible(Polynomial),
    #[error("extension modulus must be monic of degree at least 2 over the current level")]
    BadModulus,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element does not lie in the requested subfield")]
    NotInSubfield,
    #[error("coordinate {0} out of range for the field characteristic")]
    BadCoordinate(u64),
}

impl AlgebraError {
    /// The gcd witness carried by a failed quotient-ring inversion.
    pub fn into_gcd(self) -> Option<Polynomial> {
        match self {
            AlgebraError::NotInvertible(g) => Some(g),
            _ => None,
        }
    }
}
