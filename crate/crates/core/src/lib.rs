//! Finite-structure toolkit for the stit logic of justification
//! announcements: formulas and proof polynomials, temporal/stit/jstit
//! frames and their classifiers, jstit models and their constraint
//! validators, the satisfaction relation, a Hilbert proof checker, and the
//! explicit falsifying-model constructions for non-mixsucc and non-regular
//! frames.

pub mod bits;
pub mod calculus;
pub mod countermodels;
pub mod diag;
pub mod frames;
pub mod gen;
pub mod json;
pub mod models;
pub mod semantics;
pub mod syntax;

pub use bits::Bits;
pub use calculus::{
    match_axiom, match_axiom_with, match_rd, verify_proof, CalculusOptions, Justification, Proof,
    Scheme, Verdict,
};
pub use countermodels::{
    build_jstit_countermodel, build_stit_countermodel, build_temporal_countermodel, Built,
    WitnessError,
};
pub use diag::{Constraint, Diagnostics, Violation};
pub use frames::{
    classify, is_mixsucc, is_regular, theta, Classification, FrameError, JstitFrame,
    MixsuccWitness, RegWitness, Relation, StitFrame, TemporalFrame,
};
pub use models::{
    validate_model, ConstantSpecification, EvidenceSet, JstitModel, ModelError, Universe,
};
pub use semantics::{
    find_countermodel, satisfies, valid_in_model, Bounds, Countermodel, EvidenceMode, Index,
    SearchError, SemanticsError,
};
pub use syntax::{
    parse_formula, parse_formula_for, parse_polynomial, render, render_polynomial, subformulas,
    subpolynomials, Agent, Formula, Polynomial, SyntaxError,
};
