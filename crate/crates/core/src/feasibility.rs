//! Exhaustive search for invariant tuples compatible with the sixfold
//! identity at a fixed `b_2`.
//!
//! The identity `L_3(b_2) = 3c(b_2^2 - 13 b_2 + 2) + 6d(b_2 - 6) + 6e + 96 b_3`
//! pins a two-parameter family of Diophantine solutions once `b_2` is fixed.
//! [`enumerate_feasible`] either streams every solution under user-supplied
//! caps (lexicographically by `(c, d, e, b_3)`) or, when the left side is
//! negative and every right-side coefficient is nonnegative, returns an
//! infeasibility certificate instead of an empty search.

use std::collections::VecDeque;

use num_integer::Integer;

use crate::betti::BettiVector;
use crate::bound::{bound_polynomial, rhs_coefficients};
use crate::llv::predicted_betti;
use crate::scalar::Scalar;
use crate::Int;

/// Inclusive upper limits for the search coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationCaps<T = Int> {
    pub max_c: T,
    pub max_d: T,
    pub max_e: T,
    pub max_b3: T,
}

impl<T: Scalar> EnumerationCaps<T> {
    pub fn uniform(cap: T) -> Self {
        assert!(!cap.is_negative(), "caps must be nonnegative");
        EnumerationCaps {
            max_c: cap.clone(),
            max_d: cap.clone(),
            max_e: cap.clone(),
            max_b3: cap,
        }
    }
}

/// One solution of the identity at the ambient `b_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleTuple<T = Int> {
    pub c: T,
    pub d: T,
    pub e: T,
    pub b3: T,
}

impl<T: Scalar> FeasibleTuple<T> {
    /// The full Betti vector this tuple predicts: even part from the module
    /// multiplicities, `b_3` mirrored by duality, `b_5 = 0`.
    pub fn betti_vector(&self, b2: &T) -> BettiVector<T> {
        let (b4, b6) = predicted_betti(b2, &self.c, &self.d, &self.e);
        BettiVector::new(
            3,
            vec![
                T::one(),
                T::zero(),
                b2.clone(),
                self.b3.clone(),
                b4.clone(),
                T::zero(),
                b6,
                T::zero(),
                b4,
                self.b3.clone(),
                b2.clone(),
                T::zero(),
                T::one(),
            ],
        )
        .expect("thirteen entries")
    }
}

/// Witness that the search space is empty without enumeration: the left
/// side is negative while every coefficient multiplying a nonnegative
/// unknown is nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityEvidence<T = Int> {
    pub b2: T,
    /// `L_3(b_2)`, strictly negative.
    pub lhs: T,
    /// The four right-side coefficients, all nonnegative.
    pub coefficients: [(&'static str, T); 4],
}

/// Streaming enumerator over solutions, ascending in `(c, d, e, b_3)`.
///
/// For each `(c, d)` the residual target `t = L - c*A - d*B` must be split
/// as `6e + 96 b_3`; both terms are multiples of six, so solutions exist
/// only when `6 | t`, and then `b_3` determines `e` exactly. Walking `b_3`
/// downward across its admissible window visits `e` in ascending order.
#[derive(Debug, Clone)]
pub struct FeasibleTuples<T = Int> {
    lhs: T,
    caps: EnumerationCaps<T>,
    coef_c: T,
    coef_d: T,
    c: T,
    d: T,
    exhausted: bool,
    buffer: VecDeque<FeasibleTuple<T>>,
}

impl<T: Scalar> FeasibleTuples<T> {
    fn new(b2: &T, caps: &EnumerationCaps<T>) -> Self {
        let lhs = bound_polynomial(3)
            .expect("half dimension 3 is supported")
            .eval(b2);
        let [(_, coef_c), (_, coef_d), _, _] = rhs_coefficients(b2);
        FeasibleTuples {
            lhs,
            caps: caps.clone(),
            coef_c,
            coef_d,
            c: T::zero(),
            d: T::zero(),
            exhausted: false,
            buffer: VecDeque::new(),
        }
    }

    // Solutions above the current (c, d), pushed in ascending e order.
    fn fill_buffer_for_cursor(&mut self) {
        let target =
            self.lhs.clone() - self.coef_c.clone() * self.c.clone()
                - self.coef_d.clone() * self.d.clone();
        if target.is_negative() || !Integer::div_mod_floor(&target, &T::from(6)).1.is_zero() {
            return;
        }
        let b3_hi = std::cmp::min(
            self.caps.max_b3.clone(),
            Integer::div_floor(&target, &T::from(96)),
        );
        let shifted = target.clone() - T::from(6) * self.caps.max_e.clone();
        let b3_lo = std::cmp::max(T::zero(), Integer::div_ceil(&shifted, &T::from(96)));
        let mut b3 = b3_hi;
        while b3 >= b3_lo {
            let e = Integer::div_floor(
                &(target.clone() - T::from(96) * b3.clone()),
                &T::from(6),
            );
            self.buffer.push_back(FeasibleTuple {
                c: self.c.clone(),
                d: self.d.clone(),
                e,
                b3: b3.clone(),
            });
            b3 = b3 - T::one();
        }
    }

    // Move the (c, d) cursor one step in lexicographic order, pruning
    // whole tails once a positive coefficient has driven the target
    // permanently negative.
    fn advance_cursor(&mut self) {
        let target_c = self.lhs.clone() - self.coef_c.clone() * self.c.clone();
        let target = target_c.clone() - self.coef_d.clone() * self.d.clone();
        let d_tail_dead = target.is_negative() && !self.coef_d.is_negative();
        if self.d < self.caps.max_d && !d_tail_dead {
            self.d = self.d.clone() + T::one();
            return;
        }
        let c_tail_dead = target_c.is_negative()
            && !self.coef_c.is_negative()
            && !self.coef_d.is_negative();
        if self.c < self.caps.max_c && !c_tail_dead {
            self.c = self.c.clone() + T::one();
            self.d = T::zero();
            return;
        }
        self.exhausted = true;
    }
}

impl<T: Scalar> Iterator for FeasibleTuples<T> {
    type Item = FeasibleTuple<T>;

    fn next(&mut self) -> Option<FeasibleTuple<T>> {
        loop {
            if let Some(tuple) = self.buffer.pop_front() {
                return Some(tuple);
            }
            if self.exhausted {
                return None;
            }
            self.fill_buffer_for_cursor();
            self.advance_cursor();
        }
    }
}

/// Outcome of a feasibility search at fixed `b_2`.
#[derive(Debug, Clone)]
pub enum FeasibilitySearch<T = Int> {
    /// The identity is unsatisfiable by nonnegative tuples; no caps needed.
    Infeasible(InfeasibilityEvidence<T>),
    /// A streaming enumerator over the capped solution set.
    Search(FeasibleTuples<T>),
}

/// Searches for all `(c, d, e, b_3)` with `rhs = L_3(b_2)` under the caps.
/// Requires `b_2 >= 3`.
pub fn enumerate_feasible<T: Scalar>(
    b2: &T,
    caps: &EnumerationCaps<T>,
) -> FeasibilitySearch<T> {
    assert!(*b2 >= T::from(3), "b_2 must be at least 3");
    let lhs = bound_polynomial(3)
        .expect("half dimension 3 is supported")
        .eval(b2);
    let coefficients = rhs_coefficients(b2);
    if lhs.is_negative() && coefficients.iter().all(|(_, v)| !v.is_negative()) {
        return FeasibilitySearch::Infeasible(InfeasibilityEvidence {
            b2: b2.clone(),
            lhs,
            coefficients,
        });
    }
    FeasibilitySearch::Search(FeasibleTuples::new(b2, caps))
}

/// Fully resolved outcome, with the solution list materialized up to a
/// tuple budget.
#[derive(Debug, Clone)]
pub enum SearchOutcome<T = Int> {
    Infeasible(InfeasibilityEvidence<T>),
    Feasible {
        tuples: Vec<FeasibleTuple<T>>,
        /// True when the enumeration finished within the budget, so
        /// `tuples` is the complete solution set.
        complete: bool,
    },
}

/// A feasibility verdict for one `b_2`, suitable for rendering.
#[derive(Debug, Clone)]
pub struct BoundCertificate<T = Int> {
    pub b2: T,
    pub caps: EnumerationCaps<T>,
    pub outcome: SearchOutcome<T>,
}

impl<T: Scalar> BoundCertificate<T> {
    /// True when the search proves no tuple exists at all.
    pub fn is_infeasible(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Infeasible(_))
    }
}

/// Runs [`enumerate_feasible`] and collects at most `tuple_limit` solutions.
pub fn certify<T: Scalar>(
    b2: &T,
    caps: &EnumerationCaps<T>,
    tuple_limit: usize,
) -> BoundCertificate<T> {
    let outcome = match enumerate_feasible(b2, caps) {
        FeasibilitySearch::Infeasible(evidence) => SearchOutcome::Infeasible(evidence),
        FeasibilitySearch::Search(mut search) => {
            let mut tuples = Vec::new();
            let mut complete = true;
            while let Some(tuple) = search.next() {
                if tuples.len() == tuple_limit {
                    complete = false;
                    break;
                }
                tuples.push(tuple);
            }
            SearchOutcome::Feasible { tuples, complete }
        }
    };
    BoundCertificate {
        b2: b2.clone(),
        caps: caps.clone(),
        outcome,
    }
}
