//! Betti number vectors.

use thiserror::Error;

use crate::diamond::HodgeDiamond;
use crate::scalar::{binomial, Scalar};
use crate::Int;

/// The Betti numbers `b_0, ..., b_{4n}` of a manifold of complex dimension
/// `2n`.
///
/// Construction only fixes the length; nonnegativity, `b_0 = 1` and Poincaré
/// duality are checked by [`crate::validate`] on the inducing diamond, so
/// that arbitrary integer vectors (including counterexamples) can be fed to
/// [`crate::salamon_residual`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector<T = Int> {
    half_dim: usize,
    b: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("a half-dimension-{half_dim} Betti vector needs {expected} entries, got {found}")]
pub struct BettiLengthError {
    pub half_dim: usize,
    pub expected: usize,
    pub found: usize,
}

impl<T: Scalar> BettiVector<T> {
    pub fn new(half_dim: usize, b: Vec<T>) -> Result<Self, BettiLengthError> {
        assert!(half_dim >= 1, "half_dim must be at least 1");
        let expected = 4 * half_dim + 1;
        if b.len() != expected {
            return Err(BettiLengthError {
                half_dim,
                expected,
                found: b.len(),
            });
        }
        Ok(BettiVector { half_dim, b })
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    /// `b_k`.
    pub fn get(&self, k: usize) -> &T {
        &self.b[k]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.b
    }

    /// Primitive part of the fourth Betti number, `b_4 - C(b_2 + 1, 2)`,
    /// i.e. what is left of `b_4` after the image of `Sym^2 H^2`. May be
    /// negative for vectors violating that lower bound.
    pub fn b4_prime(&self) -> T {
        let b2 = self.b[2].clone();
        self.b[4].clone() - binomial(b2 + T::one(), 2)
    }

    /// Whether `b_k = b_{4n-k}` for all `k`.
    pub fn is_poincare_dual(&self) -> bool {
        let top = 4 * self.half_dim;
        (0..=top / 2).all(|k| self.b[k] == self.b[top - k])
    }
}

/// Betti numbers of a diamond, by summing Hodge numbers along anti-diagonals.
pub fn betti_from_diamond<T: Scalar>(diamond: &HodgeDiamond<T>) -> BettiVector<T> {
    diamond.betti_vector()
}
