//! Salamon's linear relation on the Betti numbers of a compact hyperkähler
//! manifold of complex dimension `2n`:
//!
//! ```text
//! 2 * sum_{j=1}^{2n} (-1)^j (3j^2 - n) b_{2n-j}  =  n * b_{2n}
//! ```

use num_traits::Zero;

use crate::betti::BettiVector;
use crate::scalar::Scalar;
use crate::Int;

/// The relation for one half dimension, as explicit integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SalamonForm<T = Int> {
    half_dim: usize,
    lhs: Vec<T>,
    rhs: T,
}

impl<T: Scalar> SalamonForm<T> {
    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    /// Coefficient of `b_{2n-j}` on the left side, `1 <= j <= 2n`.
    pub fn lhs_coefficient(&self, j: usize) -> &T {
        assert!((1..=2 * self.half_dim).contains(&j), "j={j} out of range");
        &self.lhs[j - 1]
    }

    /// Coefficient of `b_k` on the left side, `0 <= k <= 2n - 1`.
    pub fn coefficient_of_betti(&self, k: usize) -> &T {
        assert!(k < 2 * self.half_dim, "b_{k} does not appear on the left");
        self.lhs_coefficient(2 * self.half_dim - k)
    }

    /// Coefficient of `b_{2n}` on the right side (the half dimension itself).
    pub fn rhs_coefficient(&self) -> &T {
        &self.rhs
    }

    /// Left side minus right side, evaluated on a Betti vector of matching
    /// half dimension. Zero exactly when the relation holds.
    pub fn residual(&self, betti: &BettiVector<T>) -> T {
        assert_eq!(
            betti.half_dim(),
            self.half_dim,
            "Betti vector has the wrong half dimension"
        );
        let n = self.half_dim;
        let mut total = T::zero();
        for j in 1..=2 * n {
            total = total + self.lhs[j - 1].clone() * betti.get(2 * n - j).clone();
        }
        total - self.rhs.clone() * betti.get(2 * n).clone()
    }
}

/// Builds the relation for half dimension `n >= 1`.
pub fn salamon_form<T: Scalar>(n: usize) -> SalamonForm<T> {
    assert!(n >= 1, "half_dim must be at least 1");
    let n_i32 = i32::try_from(n).expect("half dimension fits in i32");
    let lhs = (1..=2 * n)
        .map(|j| {
            let j = i32::try_from(j).expect("index fits in i32");
            let magnitude = T::from(3) * T::from(j) * T::from(j) - T::from(n_i32);
            let sign = if j % 2 == 0 { T::one() } else { -T::one() };
            T::from(2) * sign * magnitude
        })
        .collect();
    SalamonForm {
        half_dim: n,
        lhs,
        rhs: T::from(n_i32),
    }
}

/// Residual of the relation on a Betti vector, using the form of the
/// vector's own half dimension.
pub fn salamon_residual<T: Scalar>(betti: &BettiVector<T>) -> T {
    salamon_form(betti.half_dim()).residual(betti)
}

fn render_terms<T: Scalar>(terms: &[(T, Option<usize>)]) -> String {
    let mut out = String::new();
    for (coeff, index) in terms {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        match index {
            Some(k) => out.push_str(&format!("{magnitude}*b{k}")),
            None => out.push_str(&magnitude.to_string()),
        }
    }
    out
}

/// The relation for half dimension `n` as text, with `b_0 = 1` and `b_1 = 0`
/// substituted and zero terms dropped, e.g.
/// `18*b4 - 48*b3 + 90*b2 + 210 = 3*b6` for `n = 3`.
pub fn specialized_relation_text(n: usize) -> String {
    let form: SalamonForm<Int> = salamon_form(n);
    let mut terms = Vec::new();
    for j in 1..=2 * n {
        let k = 2 * n - j;
        let coeff = form.lhs_coefficient(j).clone();
        if k == 1 || coeff.is_zero() {
            continue;
        }
        let index = if k == 0 { None } else { Some(k) };
        terms.push((coeff, index));
    }
    format!(
        "{} = {}*b{}",
        render_terms(&terms),
        form.rhs_coefficient(),
        2 * n
    )
}

/// The relation with every term written out, zero coefficients included.
pub fn raw_relation_text(n: usize) -> String {
    let form: SalamonForm<Int> = salamon_form(n);
    let terms: Vec<(Int, Option<usize>)> = (1..=2 * n)
        .map(|j| (form.lhs_coefficient(j).clone(), Some(2 * n - j)))
        .collect();
    format!(
        "{} = {}*b{}",
        render_terms(&terms),
        form.rhs_coefficient(),
        2 * n
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_from_diamond;
    use crate::diamond::parse_diamond;
    use proptest::prelude::*;

    fn vector(n: usize, values: &[i64]) -> BettiVector<Int> {
        BettiVector::new(n, values.iter().map(|&v| Int::from(v)).collect()).unwrap()
    }

    #[test]
    fn fourfold_coefficients() {
        let form: SalamonForm<Int> = salamon_form(2);
        let coeffs: Vec<Int> = (1..=4).map(|j| form.lhs_coefficient(j).clone()).collect();
        assert_eq!(
            coeffs,
            vec![Int::from(-2), Int::from(20), Int::from(-50), Int::from(92)]
        );
        assert_eq!(*form.rhs_coefficient(), Int::from(2));
        assert_eq!(*form.coefficient_of_betti(3), Int::from(-2));
        assert_eq!(*form.coefficient_of_betti(0), Int::from(92));
    }

    #[test]
    fn sixfold_coefficients() {
        let form: SalamonForm<Int> = salamon_form(3);
        let coeffs: Vec<Int> = (1..=6).map(|j| form.lhs_coefficient(j).clone()).collect();
        let expected: Vec<Int> = [0, 18, -48, 90, -144, 210]
            .iter()
            .map(|&v| Int::from(v))
            .collect();
        assert_eq!(coeffs, expected);
        assert_eq!(*form.rhs_coefficient(), Int::from(3));
    }

    #[test]
    fn eightfold_coefficients() {
        let form: SalamonForm<Int> = salamon_form(4);
        let coeffs: Vec<Int> = (1..=8).map(|j| form.lhs_coefficient(j).clone()).collect();
        let expected: Vec<Int> = [2, 16, -46, 88, -142, 208, -286, 376]
            .iter()
            .map(|&v| Int::from(v))
            .collect();
        assert_eq!(coeffs, expected);
    }

    #[test]
    fn formula_recomputation_up_to_twenty() {
        for n in 1..=20usize {
            let form: SalamonForm<i64> = salamon_form(n);
            for j in 1..=2 * n {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let expected = 2 * sign * (3 * (j as i64) * (j as i64) - n as i64);
                assert_eq!(*form.lhs_coefficient(j), expected, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn sixfold_residual_vanishes_on_hilbert_scheme() {
        let d = parse_diamond::<Int>(include_str!("../../../data/Hilb3-K3.hodge")).unwrap();
        assert_eq!(salamon_residual(&betti_from_diamond(&d)), Int::from(0));
    }

    #[test]
    fn fourfold_residual_vanishes_on_kummer() {
        let b = vector(2, &[1, 0, 7, 8, 108, 8, 7, 0, 1]);
        assert_eq!(salamon_residual(&b), Int::from(0));
    }

    #[test]
    fn degenerate_vector_leaves_residual() {
        let b = vector(1, &[1, 0, 0, 0, 1]);
        assert_eq!(salamon_residual(&b), Int::from(22));
    }

    #[test]
    fn specialized_text_matches_known_forms() {
        assert_eq!(specialized_relation_text(2), "-2*b3 + 20*b2 + 92 = 2*b4");
        assert_eq!(
            specialized_relation_text(3),
            "18*b4 - 48*b3 + 90*b2 + 210 = 3*b6"
        );
        assert_eq!(
            specialized_relation_text(4),
            "2*b7 + 16*b6 - 46*b5 + 88*b4 - 142*b3 + 208*b2 + 376 = 4*b8"
        );
        assert_eq!(specialized_relation_text(1), "22 = 1*b2");
    }

    #[test]
    fn raw_text_keeps_low_terms() {
        assert_eq!(
            raw_relation_text(3),
            "0*b5 + 18*b4 - 48*b3 + 90*b2 - 144*b1 + 210*b0 = 3*b6"
        );
    }

    proptest! {
        #[test]
        fn residual_is_linear(
            n in 1usize..=4,
            seed_u in proptest::collection::vec(-50i64..50, 17),
            seed_v in proptest::collection::vec(-50i64..50, 17),
            a in -5i64..5,
            c in -5i64..5,
        ) {
            let len = 4 * n + 1;
            let u = vector(n, &seed_u[..len]);
            let v = vector(n, &seed_v[..len]);
            let mixed: Vec<Int> = (0..len)
                .map(|k| {
                    Int::from(a) * u.get(k).clone() + Int::from(c) * v.get(k).clone()
                })
                .collect();
            let w = BettiVector::new(n, mixed).unwrap();
            prop_assert_eq!(
                salamon_residual(&w),
                Int::from(a) * salamon_residual(&u) + Int::from(c) * salamon_residual(&v)
            );
        }
    }
}
