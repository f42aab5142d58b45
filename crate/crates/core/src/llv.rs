//! Even-cohomology decomposition of hyperkähler sixfolds into modules of the
//! Looijenga–Lunts–Verbitsky algebra `so(b_2 + 2)`.
//!
//! For complex dimension six the even cohomology splits as the subring
//! generated by `H^2` plus `c` copies of a module supported in degrees 4-8,
//! `d` copies of one supported in degrees 4-8 with smaller Hodge spread, and
//! `e` copies of a one-dimensional module in the middle; the multiplicities
//! `(c, d, e)` are pinned down by `h^{3,1}`, `h^{2,2}` and `b_6`, with `b_4`
//! as an independent cross-check.

use thiserror::Error;

use crate::bidegree::BidegreeMap;
use crate::diamond::HodgeDiamond;
use crate::scalar::{binomial, Scalar};
use crate::validate::{validate, ValidationMode};
use crate::Int;

/// The three nontrivial module types beyond the subring generated by `H^2`.
///
/// Dimensions and degree contributions are functions of `b_2`; highest
/// weights sit at the indicated bidegree of the containing diamond.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LlvModule {
    /// The second exterior power of the defining representation.
    V2,
    /// The defining representation.
    V3,
    /// The trivial representation.
    V5,
}

impl LlvModule {
    pub const ALL: [LlvModule; 3] = [LlvModule::V2, LlvModule::V3, LlvModule::V5];

    /// Bidegree of the highest-weight vector inside a sixfold diamond.
    pub fn highest_weight(self) -> (usize, usize) {
        match self {
            LlvModule::V2 => (3, 1),
            LlvModule::V3 => (2, 2),
            LlvModule::V5 => (3, 3),
        }
    }

    /// Total dimension as a function of `b_2`.
    pub fn total_dim<T: Scalar>(self, b2: &T) -> T {
        let b2 = b2.clone();
        match self {
            LlvModule::V2 => (b2.clone() + T::from(2)) * (b2 + T::one()) / T::from(2),
            LlvModule::V3 => b2 + T::from(2),
            LlvModule::V5 => T::one(),
        }
    }

    /// Dimension contributed to `H^degree`; zero outside degrees 4, 6, 8.
    pub fn degree_contribution<T: Scalar>(self, b2: &T, degree: usize) -> T {
        let b2 = b2.clone();
        match (self, degree) {
            (LlvModule::V2, 4) | (LlvModule::V2, 8) => b2,
            (LlvModule::V2, 6) => (b2.clone() * b2.clone() - b2 + T::from(2)) / T::from(2),
            (LlvModule::V3, 4) | (LlvModule::V3, 8) => T::one(),
            (LlvModule::V3, 6) => b2,
            (LlvModule::V5, 6) => T::one(),
            _ => T::zero(),
        }
    }
}

/// Dimension of the degree-`2k` piece of the subring generated by `H^2`,
/// `C(b_2 + k - 1, k)`, for `k <= n`.
pub fn sym_subring_dim<T: Scalar>(b2: &T, k: usize) -> T {
    assert!(*b2 >= T::from(3), "b2 must be at least 3");
    binomial(b2.clone() + T::from(k as i32) - T::one(), k)
}

/// Hodge bidegree layout of `Sym^k H^2` inside a sixfold diamond, `k <= 3`.
///
/// `H^2` has graded pieces of dimensions `1, b_2 - 2, 1` in bidegrees
/// `(2,0), (1,1), (0,2)`; a monomial with exponent pattern `(i, m, j)`,
/// `i + m + j = k`, lands in bidegree `(2i + m, m + 2j)` and there are
/// `C(b_2 - 3 + m, m)` of them, summed over coinciding bidegrees.
pub fn sym_subring_hodge<T: Scalar>(b2: &T, k: usize) -> BidegreeMap<T> {
    assert!(*b2 >= T::from(3), "b2 must be at least 3");
    assert!(k <= 3, "only k <= 3 occurs in complex dimension six");
    let mut map = BidegreeMap::zero(3);
    for i in 0..=k {
        for j in 0..=k - i {
            let m = k - i - j;
            let count = binomial(b2.clone() - T::from(3) + T::from(m as i32), m);
            map.add_at(2 * i + m, m + 2 * j, count);
        }
    }
    map
}

/// Full bidegree layout of the subring generated by `H^2` across all even
/// degrees of a sixfold: `Sym^k H^2` in degree `2k` for `k <= 3`, mirrored
/// by Serre duality into degrees 8, 10 and 12.
pub fn sym_subring_full_hodge<T: Scalar>(b2: &T) -> BidegreeMap<T> {
    let mut map = BidegreeMap::zero(3);
    for k in 0..=3usize {
        let piece = sym_subring_hodge(b2, k);
        for ((p, q), v) in piece.iter() {
            if v.is_zero() {
                continue;
            }
            map.add_at(p, q, v.clone());
            if k < 3 {
                map.add_at(6 - p, 6 - q, v.clone());
            }
        }
    }
    map
}

/// Hodge bidegree layout of one copy of `module` inside a sixfold diamond.
pub fn module_layout<T: Scalar>(module: LlvModule, b2: &T) -> BidegreeMap<T> {
    assert!(*b2 >= T::from(3), "b2 must be at least 3");
    let mut map = BidegreeMap::zero(3);
    let b2 = b2.clone();
    let one = T::one();
    match module {
        LlvModule::V2 => {
            let middle_row = (b2.clone() * b2.clone() - T::from(5) * b2.clone() + T::from(10))
                / T::from(2);
            map.set(3, 1, one.clone());
            map.set(2, 2, b2.clone() - T::from(2));
            map.set(1, 3, one.clone());
            map.set(4, 2, b2.clone() - T::from(2));
            map.set(3, 3, middle_row);
            map.set(2, 4, b2.clone() - T::from(2));
            map.set(5, 3, one.clone());
            map.set(4, 4, b2 - T::from(2));
            map.set(3, 5, one);
        }
        LlvModule::V3 => {
            map.set(2, 2, one.clone());
            map.set(4, 2, one.clone());
            map.set(3, 3, b2 - T::from(2));
            map.set(2, 4, one.clone());
            map.set(4, 4, one);
        }
        LlvModule::V5 => {
            map.set(3, 3, one);
        }
    }
    map
}

/// Multiplicities of the three nontrivial modules in the even cohomology of
/// a sixfold: `c` copies of `V2`, `d` of `V3`, `e` of `V5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTuple<T = Int> {
    pub c: T,
    pub d: T,
    pub e: T,
}

/// Why a diamond admits no consistent decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LlvError<T: std::fmt::Debug + std::fmt::Display> {
    #[error("expected a sixfold diamond (half dimension 3), got half dimension {0}")]
    NotSixfold(usize),
    #[error("diamond fails strict validation: {0}")]
    NotStrictlyValid(String),
    #[error(
        "diamond inconsistent with LLV even-cohomology structure: multiplicity {name} = {value} is negative"
    )]
    NegativeMultiplicity { name: &'static str, value: T },
    #[error(
        "diamond inconsistent with LLV even-cohomology structure: d = {via_hodge} from h^{{2,2}} but {via_betti} from b_4"
    )]
    MultiplicityMismatch { via_hodge: T, via_betti: T },
    #[error("b_4 = {b4} is below C(b_2 + 1, 2) = {floor}, violating the symmetric-power lower bound")]
    PrimitiveNegative { b4: T, floor: T },
}

/// Predicted `(b_4, b_6)` of a sixfold with the given `b_2` and module
/// multiplicities:
/// `b_4 = C(b_2+1, 2) + c b_2 + d` and
/// `b_6 = C(b_2+2, 3) + c (b_2^2 - b_2 + 2)/2 + d b_2 + e`.
pub fn predicted_betti<T: Scalar>(b2: &T, c: &T, d: &T, e: &T) -> (T, T) {
    let sym4 = binomial(b2.clone() + T::one(), 2);
    let sym6 = binomial(b2.clone() + T::from(2), 3);
    let b4 = sym4 + c.clone() * LlvModule::V2.degree_contribution(b2, 4)
        + d.clone() * LlvModule::V3.degree_contribution(b2, 4);
    let b6 = sym6
        + c.clone() * LlvModule::V2.degree_contribution(b2, 6)
        + d.clone() * LlvModule::V3.degree_contribution(b2, 6)
        + e.clone();
    (b4, b6)
}

/// Reads the multiplicities `(c, d, e)` off a strictly valid sixfold diamond
/// and cross-checks `d` along two independent routes.
pub fn extract_multiplicities<T: Scalar>(
    diamond: &HodgeDiamond<T>,
) -> Result<MultiplicityTuple<T>, LlvError<T>> {
    if diamond.half_dim() != 3 {
        return Err(LlvError::NotSixfold(diamond.half_dim()));
    }
    let report = validate(diamond, ValidationMode::Strict);
    if !report.passed() {
        let failed: Vec<&str> = report.findings.iter().map(|f| f.check).collect();
        return Err(LlvError::NotStrictlyValid(failed.join(", ")));
    }

    let betti = diamond.betti_vector();
    let b2 = betti.get(2).clone();

    let c = diamond.h(3, 1).clone() - (b2.clone() - T::from(2));
    if c.is_negative() {
        return Err(LlvError::NegativeMultiplicity {
            name: "c",
            value: c,
        });
    }

    let sym_22 = binomial(b2.clone() - T::one(), 2) + T::one();
    let d = diamond.h(2, 2).clone() - sym_22 - c.clone() * (b2.clone() - T::from(2));
    let d_via_betti =
        betti.get(4).clone() - binomial(b2.clone() + T::one(), 2) - c.clone() * b2.clone();
    if d != d_via_betti {
        return Err(LlvError::MultiplicityMismatch {
            via_hodge: d,
            via_betti: d_via_betti,
        });
    }
    if d.is_negative() {
        return Err(LlvError::NegativeMultiplicity {
            name: "d",
            value: d,
        });
    }

    let e = betti.get(6).clone()
        - binomial(b2.clone() + T::from(2), 3)
        - c.clone() * LlvModule::V2.degree_contribution(&b2, 6)
        - d.clone() * b2;
    if e.is_negative() {
        return Err(LlvError::NegativeMultiplicity {
            name: "e",
            value: e,
        });
    }

    Ok(MultiplicityTuple { c, d, e })
}

/// Residual of the even-cohomology decomposition: for every even bidegree,
/// `h^{p,q}` minus the subring layout minus the extracted multiples of the
/// three module layouts. Identically zero iff the decomposition reproduces
/// the diamond cell by cell.
pub fn verify_even_decomposition<T: Scalar>(
    diamond: &HodgeDiamond<T>,
) -> Result<BidegreeMap<T>, LlvError<T>> {
    let tuple = extract_multiplicities(diamond)?;
    let b2 = diamond.b2();

    let mut expected = sym_subring_full_hodge(&b2);
    expected.add_scaled(&module_layout(LlvModule::V2, &b2), &tuple.c);
    expected.add_scaled(&module_layout(LlvModule::V3, &b2), &tuple.d);
    expected.add_scaled(&module_layout(LlvModule::V5, &b2), &tuple.e);

    let mut residual = BidegreeMap::zero(3);
    for p in 0..=6usize {
        for q in 0..=6usize {
            if (p + q) % 2 == 0 {
                residual.set(p, q, diamond.h(p, q).clone() - expected.get(p, q).clone());
            }
        }
    }
    Ok(residual)
}

/// Primitive part of `b_4` for a fourfold: `b_4 - C(b_2 + 1, 2)`, rejecting
/// values that would contradict the symmetric-power injection.
pub fn extract_primitive_b4<T: Scalar>(b2: &T, b4: &T) -> Result<T, LlvError<T>> {
    let floor = binomial(b2.clone() + T::one(), 2);
    let prime = b4.clone() - floor.clone();
    if prime.is_negative() {
        return Err(LlvError::PrimitiveNegative {
            b4: b4.clone(),
            floor,
        });
    }
    Ok(prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamond::parse_diamond;
    use num_traits::Zero;

    fn bundled(text: &str) -> HodgeDiamond<Int> {
        parse_diamond(text).unwrap()
    }

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn module_dimensions_and_contributions() {
        let b2 = int(23);
        assert_eq!(LlvModule::V2.total_dim(&b2), int(300));
        assert_eq!(LlvModule::V3.total_dim(&b2), int(25));
        assert_eq!(LlvModule::V5.total_dim(&b2), int(1));
        assert_eq!(LlvModule::V2.degree_contribution(&b2, 4), int(23));
        assert_eq!(LlvModule::V2.degree_contribution(&b2, 6), int(254));
        assert_eq!(LlvModule::V2.degree_contribution(&b2, 8), int(23));
        assert_eq!(LlvModule::V3.degree_contribution(&b2, 6), int(23));
        assert_eq!(LlvModule::V5.degree_contribution(&b2, 4), int(0));
        assert_eq!(LlvModule::V5.degree_contribution(&b2, 6), int(1));
    }

    #[test]
    fn contributions_sum_to_total_dim() {
        for b2 in 3i64..=60 {
            let b2 = int(b2);
            for module in LlvModule::ALL {
                let sum = module.degree_contribution(&b2, 4)
                    + module.degree_contribution(&b2, 6)
                    + module.degree_contribution(&b2, 8);
                assert_eq!(sum, module.total_dim(&b2));
            }
        }
    }

    #[test]
    fn subring_dimensions() {
        assert_eq!(sym_subring_dim(&int(23), 2), int(276));
        assert_eq!(sym_subring_dim(&int(23), 3), int(2300));
        assert_eq!(sym_subring_dim(&int(7), 0), int(1));
    }

    #[test]
    fn subring_hodge_layout_matches_known_cells() {
        let sym2 = sym_subring_hodge(&int(23), 2);
        assert_eq!(*sym2.get(2, 2), int(232));
        assert_eq!(*sym2.get(3, 1), int(21));
        assert_eq!(*sym2.get(4, 0), int(1));
        assert_eq!(sym2.total(), sym_subring_dim(&int(23), 2));

        let sym3 = sym_subring_hodge(&int(23), 3);
        assert_eq!(*sym3.get(3, 3), int(1792));
        assert_eq!(*sym3.get(4, 2), int(232));
        assert_eq!(*sym3.get(5, 1), int(21));
        assert_eq!(*sym3.get(6, 0), int(1));
        assert_eq!(sym3.total(), sym_subring_dim(&int(23), 3));

        let sym1 = sym_subring_hodge(&int(23), 1);
        assert_eq!(*sym1.get(1, 1), int(21));
        assert_eq!(*sym1.get(2, 0), int(1));
        assert_eq!(*sym1.get(0, 2), int(1));
    }

    #[test]
    fn layouts_match_displayed_arrays() {
        let v2 = module_layout(LlvModule::V2, &int(23));
        assert_eq!(*v2.get(3, 1), int(1));
        assert_eq!(*v2.get(2, 2), int(21));
        assert_eq!(*v2.get(3, 3), int(212));
        assert_eq!(*v2.get(4, 2), int(21));
        assert_eq!(v2.degree_sum(4), int(23));
        assert_eq!(v2.degree_sum(6), int(254));
        assert_eq!(v2.degree_sum(8), int(23));
        assert_eq!(v2.total(), int(300));

        let v3 = module_layout(LlvModule::V3, &int(7));
        assert_eq!(*v3.get(2, 2), int(1));
        assert_eq!(*v3.get(3, 3), int(5));
        assert_eq!(v3.degree_sum(6), int(7));
        assert_eq!(v3.total(), int(9));

        let v5 = module_layout(LlvModule::V5, &int(8));
        assert_eq!(*v5.get(3, 3), int(1));
        assert_eq!(v5.total(), int(1));
    }

    #[test]
    fn layouts_are_symmetric() {
        for b2 in [3i64, 7, 8, 23, 101] {
            let b2 = int(b2);
            for module in LlvModule::ALL {
                let layout = module_layout(module, &b2);
                assert!(layout.is_hodge_symmetric());
                assert!(layout.is_serre_symmetric());
                let (p, q) = module.highest_weight();
                assert!(!layout.get(p, q).is_zero());
            }
            let full = sym_subring_full_hodge(&b2);
            assert!(full.is_hodge_symmetric());
            assert!(full.is_serre_symmetric());
        }
    }

    #[test]
    fn predictions_match_known_manifolds() {
        assert_eq!(
            predicted_betti(&int(23), &int(1), &int(0), &int(0)),
            (int(299), int(2554))
        );
        assert_eq!(
            predicted_betti(&int(7), &int(1), &int(16), &int(240)),
            (int(51), int(458))
        );
        assert_eq!(
            predicted_betti(&int(8), &int(6), &int(115), &int(290)),
            (int(199), int(1504))
        );
    }

    #[test]
    fn extraction_on_bundled_sixfolds() {
        let d = bundled(include_str!("../../../data/Hilb3-K3.hodge"));
        let t = extract_multiplicities(&d).unwrap();
        assert_eq!((t.c, t.d, t.e), (int(1), int(0), int(0)));

        let d = bundled(include_str!("../../../data/Kummer-3.hodge"));
        let t = extract_multiplicities(&d).unwrap();
        assert_eq!((t.c, t.d, t.e), (int(1), int(16), int(240)));

        let d = bundled(include_str!("../../../data/OGrady-6.hodge"));
        let t = extract_multiplicities(&d).unwrap();
        assert_eq!((t.c, t.d, t.e), (int(6), int(115), int(290)));
    }

    #[test]
    fn extraction_round_trips_through_prediction() {
        for text in [
            include_str!("../../../data/Hilb3-K3.hodge"),
            include_str!("../../../data/Kummer-3.hodge"),
            include_str!("../../../data/OGrady-6.hodge"),
        ] {
            let d = bundled(text);
            let betti = d.betti_vector();
            let t = extract_multiplicities(&d).unwrap();
            let (b4, b6) = predicted_betti(&d.b2(), &t.c, &t.d, &t.e);
            assert_eq!(&b4, betti.get(4));
            assert_eq!(&b6, betti.get(6));
        }
    }

    #[test]
    fn decomposition_residual_vanishes() {
        let d = bundled(include_str!("../../../data/Hilb3-K3.hodge"));
        let residual = verify_even_decomposition(&d).unwrap();
        assert!(residual.is_zero());
    }

    #[test]
    fn perturbed_diamond_is_rejected() {
        // Bump h^{2,2} and its Serre dual so every diamond symmetry still
        // holds; the decomposition arithmetic is what catches it.
        let d = bundled(include_str!("../../../data/Hilb3-K3.hodge"));
        let bumped = d
            .with_entry(2, 2, int(254))
            .with_entry(4, 4, int(254));
        let err = verify_even_decomposition(&bumped).unwrap_err();
        assert!(matches!(
            err,
            LlvError::NegativeMultiplicity { name: "e", .. }
        ));
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let d = bundled(include_str!("../../../data/Hilb2-K3.hodge"));
        assert!(matches!(
            extract_multiplicities(&d),
            Err(LlvError::NotSixfold(2))
        ));
    }

    #[test]
    fn primitive_b4_extraction() {
        assert_eq!(extract_primitive_b4(&int(23), &int(276)).unwrap(), int(0));
        assert_eq!(extract_primitive_b4(&int(7), &int(108)).unwrap(), int(80));
        let err = extract_primitive_b4(&int(7), &int(27)).unwrap_err();
        assert!(matches!(err, LlvError::PrimitiveNegative { .. }));
    }

    #[test]
    fn generic_over_machine_scalars() {
        let sym2 = sym_subring_hodge(&23i64, 2);
        assert_eq!(*sym2.get(2, 2), 232);
        assert_eq!(sym_subring_dim(&23i64, 3), 2300);
    }
}
