//! Dense tables indexed by Hodge bidegree.

use crate::scalar::Scalar;
use crate::Int;

/// A table of integers indexed by bidegrees `(p, q)` with `0 <= p, q <= 2n`.
///
/// Used for module layouts inside a Hodge diamond and for residuals of
/// decompositions; entries of a layout are nonnegative, residual entries may
/// be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidegreeMap<T = Int> {
    half_dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> BidegreeMap<T> {
    /// The zero table for a manifold of complex dimension `2 * half_dim`.
    pub fn zero(half_dim: usize) -> Self {
        assert!(half_dim >= 1, "half_dim must be at least 1");
        let side = 2 * half_dim + 1;
        BidegreeMap {
            half_dim,
            entries: vec![T::zero(); side * side],
        }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    fn index(&self, p: usize, q: usize) -> usize {
        let side = 2 * self.half_dim + 1;
        assert!(p < side && q < side, "bidegree ({p},{q}) out of range");
        p * side + q
    }

    pub fn get(&self, p: usize, q: usize) -> &T {
        &self.entries[self.index(p, q)]
    }

    pub fn set(&mut self, p: usize, q: usize, value: T) {
        let i = self.index(p, q);
        self.entries[i] = value;
    }

    pub fn add_at(&mut self, p: usize, q: usize, value: T) {
        let i = self.index(p, q);
        self.entries[i] = self.entries[i].clone() + value;
    }

    /// Adds `factor` times `other` entrywise.
    pub fn add_scaled(&mut self, other: &Self, factor: &T) {
        assert_eq!(self.half_dim, other.half_dim, "mismatched half dimensions");
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a = a.clone() + b.clone() * factor.clone();
        }
    }

    /// Iterates over all `((p, q), value)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let side = 2 * self.half_dim + 1;
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, v)| ((i / side, i % side), v))
    }

    /// Sum of the entries in total degree `k`, i.e. over `p + q = k`.
    pub fn degree_sum(&self, k: usize) -> T {
        let mut total = T::zero();
        for ((p, q), v) in self.iter() {
            if p + q == k {
                total = total + v.clone();
            }
        }
        total
    }

    /// Sum of all entries.
    pub fn total(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, v| acc + v.clone())
    }

    /// Sum of the absolute values of all entries; zero iff the table is zero.
    pub fn abs_total(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, v| acc + v.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    /// Whether the table is symmetric under `(p, q) -> (q, p)`.
    pub fn is_hodge_symmetric(&self) -> bool {
        let side = 2 * self.half_dim + 1;
        (0..side).all(|p| (0..p).all(|q| self.get(p, q) == self.get(q, p)))
    }

    /// Whether the table is symmetric under `(p, q) -> (2n - p, 2n - q)`.
    pub fn is_serre_symmetric(&self) -> bool {
        let side = 2 * self.half_dim + 1;
        (0..side).all(|p| (0..side).all(|q| self.get(p, q) == self.get(side - 1 - p, side - 1 - q)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_and_sums() {
        let mut m: BidegreeMap<i64> = BidegreeMap::zero(2);
        m.set(1, 1, 5);
        m.add_at(1, 1, 2);
        m.set(2, 0, 1);
        m.set(0, 2, 1);
        assert_eq!(*m.get(1, 1), 7);
        assert_eq!(m.degree_sum(2), 9);
        assert_eq!(m.total(), 9);
        assert!(!m.is_zero());
        assert!(m.is_hodge_symmetric());
        assert!(!m.is_serre_symmetric());
    }

    #[test]
    fn scaled_accumulation() {
        let mut a: BidegreeMap<i64> = BidegreeMap::zero(1);
        let mut b: BidegreeMap<i64> = BidegreeMap::zero(1);
        b.set(1, 1, 3);
        a.add_scaled(&b, &-2);
        assert_eq!(*a.get(1, 1), -6);
        assert_eq!(a.abs_total(), 6);
    }
}
