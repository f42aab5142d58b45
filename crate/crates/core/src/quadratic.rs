//! Exact arithmetic in Z[s] with s^2 = D, for a fixed nonnegative integer D.
//!
//! Values are `a + b*s`, compared through the real embedding `s = sqrt(D)`;
//! signs are decided by exact integer squaring, never by floating point.
//! D may be a perfect square, in which case the embedding is rational and
//! `is_zero`/`sign` still agree with it.

use std::cmp::Ordering;

use crate::scalar::Scalar;
use crate::Int;

/// `a + b * sqrt(d)` with integer `a`, `b` and fixed radicand `d >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadInt<T = Int> {
    a: T,
    b: T,
    d: T,
}

impl<T: Scalar> QuadInt<T> {
    pub fn new(a: T, b: T, d: T) -> Self {
        assert!(!d.is_negative(), "radicand must be nonnegative");
        QuadInt { a, b, d }
    }

    pub fn from_int(a: T, d: T) -> Self {
        QuadInt::new(a, T::zero(), d)
    }

    pub fn rational_part(&self) -> &T {
        &self.a
    }

    pub fn radical_part(&self) -> &T {
        &self.b
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "mismatched radicands");
        QuadInt::new(
            self.a.clone() + other.a.clone(),
            self.b.clone() + other.b.clone(),
            self.d.clone(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "mismatched radicands");
        QuadInt::new(
            self.a.clone() * other.a.clone() + self.b.clone() * other.b.clone() * self.d.clone(),
            self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone(),
            self.d.clone(),
        )
    }

    pub fn add_int(&self, value: T) -> Self {
        QuadInt::new(self.a.clone() + value, self.b.clone(), self.d.clone())
    }

    /// Sign of `a + b*sqrt(d)` as a real number: -1, 0 or 1.
    pub fn sign(&self) -> i32 {
        let a_sign = sign_of(&self.a);
        // b*sqrt(d) vanishes when b = 0 or d = 0.
        if self.b.is_zero() || self.d.is_zero() {
            return a_sign;
        }
        let b_sign = sign_of(&self.b);
        if a_sign == 0 {
            return b_sign;
        }
        if a_sign == b_sign {
            return a_sign;
        }
        // Opposite signs: compare a^2 with b^2 * d.
        let a2 = self.a.clone() * self.a.clone();
        let b2d = self.b.clone() * self.b.clone() * self.d.clone();
        match a2.cmp(&b2d) {
            Ordering::Greater => a_sign,
            Ordering::Less => b_sign,
            Ordering::Equal => 0,
        }
    }

    pub fn is_zero_real(&self) -> bool {
        self.sign() == 0
    }
}

fn sign_of<T: Scalar>(v: &T) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Sign of `t + sqrt(w1) - sqrt(w2)` for integers `t` and `w1, w2 >= 0`.
///
/// Used to compare roots drawn from different quadratic factors; resolved by
/// squaring twice, all in exact integers.
pub fn sign_with_two_radicals<T: Scalar>(t: T, w1: T, w2: T) -> i32 {
    assert!(!w1.is_negative() && !w2.is_negative(), "radicands must be nonnegative");
    if w1 == w2 {
        return sign_of(&t);
    }
    let radical_sign = if w1 > w2 { 1 } else { -1 };
    let t_sign = sign_of(&t);
    if t_sign == 0 {
        return radical_sign;
    }
    if t_sign == radical_sign {
        return t_sign;
    }
    // |t| versus |sqrt(w1) - sqrt(w2)|: square both, leaving one radical.
    // t^2 - (w1 + w2) + 2*sqrt(w1*w2) has the sign of |t| - |radical|
    // exactly when t > 0; the opposite when t < 0.
    let x = t.clone() * t - (w1.clone() + w2.clone());
    let q = QuadInt::new(x, T::from(2), w1 * w2);
    t_sign * q.sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> QuadInt<i64> {
        QuadInt::new(a, b, d)
    }

    #[test]
    fn signs_by_exact_squaring() {
        assert_eq!(q(-26, 1, 721).sign(), 1); // sqrt(721) > 26
        assert_eq!(q(-27, 1, 721).sign(), -1); // sqrt(721) < 27
        assert_eq!(q(-50, 2, 625).sign(), 0); // 2*25 = 50 exactly
        assert_eq!(q(0, 0, 7).sign(), 0);
        assert_eq!(q(0, -3, 7).sign(), -1);
        assert_eq!(q(5, 0, 7).sign(), 1);
        assert_eq!(q(5, -3, 0).sign(), 1);
    }

    #[test]
    fn ring_operations() {
        // (1 + s)(1 - s) = 1 - D
        let product = q(1, 1, 721).mul(&q(1, -1, 721));
        assert_eq!(product, q(1 - 721, 0, 721));
        let sum = q(3, 2, 5).add(&q(-1, 7, 5));
        assert_eq!(sum, q(2, 9, 5));
        assert_eq!(q(3, 2, 5).add_int(4), q(7, 2, 5));
    }

    #[test]
    fn root_of_its_own_minimal_polynomial() {
        // x = (21 + s)/2 with s^2 = 721 satisfies x^2 - 21x - 70 = 0;
        // scaled by 4: (21 + s)^2 - 42*(21 + s) - 280 = 0.
        let y = q(21, 1, 721);
        let value = y
            .mul(&y)
            .add(&y.mul(&q(-42, 0, 721)))
            .add_int(-280);
        assert!(value.is_zero_real());
        assert_eq!(value, q(0, 0, 721));
    }

    #[test]
    fn two_radical_comparisons() {
        // 1 + sqrt(2) - sqrt(5) < 0 since sqrt(5) - sqrt(2) > 0.82 + ...
        assert_eq!(sign_with_two_radicals(1i64, 2, 5), 1); // 1 + 1.414 - 2.236 = 0.178
        assert_eq!(sign_with_two_radicals(0i64, 2, 5), -1);
        assert_eq!(sign_with_two_radicals(-1i64, 5, 2), -1); // -1 + 2.236 - 1.414 < 0? -0.178 < 0
        assert_eq!(sign_with_two_radicals(-3i64, 25, 4), 0); // -3 + 5 - 2 = 0
        assert_eq!(sign_with_two_radicals(7i64, 4, 4), 1);
    }
}
