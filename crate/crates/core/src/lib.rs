//! Exact analysis of p-adic entire and meromorphic functions.
//!
//! The crate works with functions given through the p-adic valuations of
//! their coefficients and decides everything with exact rational
//! arithmetic: Newton polygons and zero counts, growth classification,
//! primeness certification from coefficient-ratio criteria, and
//! permutability of entire functions with polynomials.

pub mod arith;
pub mod error;
pub mod permutability;
pub mod polygon;
pub mod primeness;
pub mod roots;
pub mod series;

pub use arith::{floor_int, val_p, ExtValuation, LogRadius, Prime, Rat};
pub use error::{Error, Result};
pub use polygon::{
    CoefficientModel, Growth, ModelKind, ModulusPoint, NewtonPolygon, TailCertificate, ZeroCounts,
};
pub use primeness::{
    build_family_pair, check_dominates, check_dominates_on_grid, check_ratio_condition,
    derive_tail_start, multiple_zero_localization, rule_engine, Certificate, Evidence, Hypothesis,
    HypothesisCheck, HypothesisKind, MeromorphicModel, Rule, Target, Verdict, WindowRange,
};
pub use series::{Poly, TruncatedSeries};
