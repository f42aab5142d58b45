//! Exact arithmetic for the cohomology of compact hyperkähler manifolds.
//!
//! A compact hyperkähler (irreducible holomorphic symplectic) manifold of
//! complex dimension `2n` has a tightly constrained Hodge diamond: Salamon's
//! linear relation ties its Betti numbers together, and the
//! Looijenga–Lunts–Verbitsky (LLV) Lie algebra organizes its even cohomology
//! into a small list of modules determined by `b_2` alone. This crate turns
//! those constraints into checkable arithmetic:
//!
//! * parsing, validation and serialization of Hodge diamonds
//!   ([`parse_diamond`], [`validate`]);
//! * Salamon's relation as an exact linear form with residuals
//!   ([`salamon_form`], [`salamon_residual`]);
//! * the LLV module bookkeeping for sixfolds — multiplicity extraction and
//!   a cell-by-cell decomposition check ([`extract_multiplicities`],
//!   [`verify_even_decomposition`]);
//! * the resulting upper bounds on the second Betti number in dimensions
//!   four, six and eight — `b_2 <= 23`, `b_2 <= 23` and `b_2 <= 24` — with
//!   every inequality certified by integer evaluation ([`betti_bound`],
//!   [`bound_polynomial`]);
//! * exhaustive feasibility searches over the remaining invariants at a
//!   fixed `b_2` ([`enumerate_feasible`]);
//! * bundled reference diamonds with independently recorded invariants
//!   ([`list_examples`], [`verify_all`]).
//!
//! All computation is exact: scalars are arbitrary-precision integers by
//! default (see [`Int`]), quadratic irrationalities are handled in
//! `Z[sqrt(D)]` ([`QuadInt`]), and decimal expansions appear only in
//! display strings. Every public structure is generic over an integer-like
//! scalar implementing [`Scalar`], so fixed-width integers can be
//! substituted where their range is known to suffice.
//!
//! ```
//! use hkbound::{betti_bound, parse_diamond, salamon_residual, Int};
//!
//! // The fourfold and sixfold bounds, certified exactly.
//! assert_eq!(betti_bound::<Int>(2).unwrap(), Int::from(23));
//! assert_eq!(betti_bound::<Int>(3).unwrap(), Int::from(23));
//!
//! // A K3 surface satisfies the degenerate dimension-two relation.
//! let k3 = parse_diamond::<Int>("n 1\n1\n0 0\n1 20 1\n0 0\n1\n").unwrap();
//! assert_eq!(salamon_residual(&k3.betti_vector()), Int::from(0));
//! ```

pub mod betti;
pub mod bidegree;
pub mod bound;
pub mod certificate;
pub mod dataset;
pub mod diamond;
pub mod feasibility;
pub mod llv;
pub mod quadratic;
pub mod salamon;
pub mod scalar;
pub mod validate;

/// Canonical exact scalar: arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

pub use betti::{betti_from_diamond, BettiLengthError, BettiVector};
pub use bidegree::BidegreeMap;
pub use bound::{
    betti_bound, bound_polynomial, conjecture_check, dim4_identity, identity_check,
    largest_root_bracket, rhs_coefficients, rhs_value, BoundError, BoundFactor, BoundPolynomial,
    RootDescriptor,
};
pub use certificate::CheckLine;
pub use dataset::{
    expected_tsv, list_examples, parse_expected, verify_all, verify_example, verify_record,
    CertificateReport, ExampleId, ExampleRecord, ExpectedStats,
};
pub use diamond::{parse_diamond, serialize_diamond, DiamondParseError, HodgeDiamond};
pub use feasibility::{
    certify, enumerate_feasible, BoundCertificate, EnumerationCaps, FeasibilitySearch,
    FeasibleTuple, FeasibleTuples, InfeasibilityEvidence, SearchOutcome,
};
pub use llv::{
    extract_multiplicities, extract_primitive_b4, module_layout, predicted_betti,
    sym_subring_dim, sym_subring_full_hodge, sym_subring_hodge, verify_even_decomposition,
    LlvError, LlvModule, MultiplicityTuple,
};
pub use quadratic::{sign_with_two_radicals, QuadInt};
pub use salamon::{
    raw_relation_text, salamon_form, salamon_residual, specialized_relation_text, SalamonForm,
};
pub use scalar::{binomial, Scalar};
pub use validate::{validate, Finding, ValidationMode, ValidationReport};
