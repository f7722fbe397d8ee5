//! Exact arithmetic and linear algebra over finite fields.

mod field;
mod matrix;
mod poly;
mod subspace;

use thiserror::Error;

pub use field::{
    gcd, is_prime, lcm, least_irreducible, prime_factors, Elem, Field, FieldSpec, MAX_FIELD_ORDER,
};
pub use matrix::Matrix;
pub use poly::{expand, Poly};
pub use subspace::{DependencyFinder, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field F_{{{p}^{k}}} exceeds the supported order")]
    TooLarge { p: u32, k: u32 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("coefficient vector does not describe a field element")]
    BadCoefficients,
    #[error("modulus does not match the canonical one")]
    ModulusMismatch,
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
}

/// Smallest `k` such that `exponent` divides `p^k - 1`; `None` when `p`
/// divides `exponent`.
pub fn splitting_degree(p: u32, exponent: u64) -> Option<u32> {
    if exponent <= 1 {
        return Some(1);
    }
    if exponent % p as u64 == 0 {
        return None;
    }
    let mut k = 1;
    let mut pk = p as u64 % exponent;
    loop {
        if pk == 1 {
            return Some(k);
        }
        pk = pk * p as u64 % exponent;
        k += 1;
    }
}
