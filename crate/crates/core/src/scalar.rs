//! Integer scalar abstraction used throughout the crate.
//!
//! All arithmetic in this crate is exact. The [`Scalar`] trait collects the
//! integer capabilities the algorithms need (ring operations, ordering,
//! integer square roots, parsing and display), so every public type and
//! function is generic over the scalar. The canonical instantiation is
//! [`crate::Int`] (arbitrary precision); machine integers such as `i64`
//! satisfy the same bounds and are handy in tests, at the usual risk of
//! overflow on large inputs.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_traits::Signed;

/// Exact integer scalar: ring arithmetic, ordering, floor square roots,
/// conversion from small constants, parsing and printing.
pub trait Scalar:
    Integer + Roots + Signed + Clone + Debug + Display + FromStr + From<i32>
{
}

impl<T> Scalar for T where
    T: Integer + Roots + Signed + Clone + Debug + Display + FromStr + From<i32>
{
}

/// Binomial coefficient `C(n, k)` with a machine-sized `k`.
///
/// Returns zero for `n < k` (in particular whenever `n` is negative and `k > 0`).
pub fn binomial<T: Scalar>(n: T, k: usize) -> T {
    if n < T::zero() {
        return T::zero();
    }
    let k = i32::try_from(k).expect("binomial index fits in i32");
    num_integer::binomial(n, T::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    #[test]
    fn small_values() {
        assert_eq!(binomial(Int::from(24), 2), Int::from(276));
        assert_eq!(binomial(Int::from(25), 3), Int::from(2300));
        assert_eq!(binomial(Int::from(7), 0), Int::from(1));
        assert_eq!(binomial(Int::from(0), 0), Int::from(1));
        assert_eq!(binomial(Int::from(2), 3), Int::from(0));
        assert_eq!(binomial(Int::from(-1), 2), Int::from(0));
    }

    #[test]
    fn machine_scalars_work_too() {
        assert_eq!(binomial(24i64, 2), 276);
        assert_eq!(binomial(8i64, 3), 56);
    }

    #[test]
    fn pascal_recurrence() {
        for n in 1..30i64 {
            for k in 1..=n as usize {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "C({n},{k})"
                );
            }
        }
    }
}
