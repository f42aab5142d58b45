//! Structural and strict validation of Hodge diamonds.

use std::fmt;

use crate::diamond::HodgeDiamond;
use crate::scalar::{binomial, Scalar};

/// How much to check.
///
/// `Structural` covers what any compact Kähler manifold satisfies: Hodge
/// symmetry, Serre duality and `h^{0,0} = 1`. `Strict` adds the constraints
/// of an irreducible hyperkähler manifold: `h^{1,0} = 0`, `h^{2,0} = 1`,
/// `b_2 >= 3`, and on the induced Betti numbers `b_0 = 1`, Poincaré duality,
/// `b_1 = 0` and the symmetric-power lower bounds `b_{2k} >= C(b_2+k-1, k)`
/// for `1 <= k <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    Structural,
    Strict,
}

/// A failed check: its stable name and the indices that witness the failure.
///
/// Offenders are bidegrees `(p, q)` for diamond-level checks, and degree
/// pairs `(k, 4n-k)` (or `(2k, 2k)` for the symmetric-power bounds) for
/// Betti-level checks; scalar checks leave the list empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub check: &'static str,
    pub passed: bool,
    pub offenders: Vec<(usize, usize)>,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "check={} verdict={}",
            self.check,
            if self.passed { "pass" } else { "fail" }
        )?;
        if self.offenders.is_empty() {
            write!(f, " offenders=-")
        } else {
            let list: Vec<String> = self
                .offenders
                .iter()
                .map(|(p, q)| format!("({p},{q})"))
                .collect();
            write!(f, " offenders={}", list.join(","))
        }
    }
}

/// Outcome of [`validate`]: the mode that ran and one [`Finding`] per failed
/// check. Empty findings means every check of the mode passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub mode: ValidationMode,
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }
}

fn fail(check: &'static str, offenders: Vec<(usize, usize)>) -> Finding {
    Finding {
        check,
        passed: false,
        offenders,
    }
}

/// Checks the invariants of the selected mode and reports every failure.
pub fn validate<T: Scalar>(diamond: &HodgeDiamond<T>, mode: ValidationMode) -> ValidationReport {
    let n = diamond.half_dim();
    let side = 2 * n + 1;
    let mut findings = Vec::new();

    let mut hodge_offenders = Vec::new();
    for p in 0..side {
        for q in 0..p {
            if diamond.h(p, q) != diamond.h(q, p) {
                hodge_offenders.push((p, q));
                hodge_offenders.push((q, p));
            }
        }
    }
    if !hodge_offenders.is_empty() {
        findings.push(fail("hodge-symmetry", hodge_offenders));
    }

    let mut serre_offenders = Vec::new();
    for p in 0..side {
        for q in 0..side {
            let dual = (side - 1 - p, side - 1 - q);
            if (p, q) < dual && diamond.h(p, q) != diamond.h(dual.0, dual.1) {
                serre_offenders.push((p, q));
                serre_offenders.push(dual);
            }
        }
    }
    if !serre_offenders.is_empty() {
        findings.push(fail("serre-duality", serre_offenders));
    }

    if !diamond.h(0, 0).is_one() {
        findings.push(fail("h00-is-one", vec![(0, 0)]));
    }

    if mode == ValidationMode::Strict {
        if !diamond.h(1, 0).is_zero() {
            findings.push(fail("h10-vanishes", vec![(1, 0)]));
        }
        if !diamond.h(2, 0).is_one() {
            findings.push(fail("h20-is-one", vec![(2, 0)]));
        }
        if diamond.b2() < T::from(3) {
            findings.push(fail("b2-at-least-3", Vec::new()));
        }

        let betti = diamond.betti_vector();
        if !betti.get(0).is_one() {
            findings.push(fail("b0-is-one", Vec::new()));
        }
        let top = 4 * n;
        let mut duality_offenders = Vec::new();
        for k in 0..=top / 2 {
            if betti.get(k) != betti.get(top - k) {
                duality_offenders.push((k, top - k));
            }
        }
        if !duality_offenders.is_empty() {
            findings.push(fail("betti-poincare-duality", duality_offenders));
        }
        if !betti.get(1).is_zero() {
            findings.push(fail("b1-is-zero", Vec::new()));
        }

        let b2 = betti.get(2).clone();
        let mut verbitsky_offenders = Vec::new();
        for k in 1..=n {
            let lower = binomial(b2.clone() + T::from(k as i32) - T::one(), k);
            if *betti.get(2 * k) < lower {
                verbitsky_offenders.push((2 * k, 2 * k));
            }
        }
        if !verbitsky_offenders.is_empty() {
            findings.push(fail("verbitsky-lower-bound", verbitsky_offenders));
        }
    }

    ValidationReport { mode, findings }
}
