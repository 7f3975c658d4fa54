//! Linear extensions of Zadeh fuzzy orders on finite sets.
//!
//! A Zadeh fuzzy order is a fuzzy relation that is reflexive (`r(x, x) = 1`),
//! antisymmetric (for `x ≠ y`, `r(x, y) > 0` forces `r(y, x) = 0`) and max-min
//! transitive (`r(x, z) ≥ max_y min(r(x, y), r(y, z))`). This crate
//!
//! - validates the axioms with complete counterexample witnesses ([`axioms`]),
//! - extends an order one incomparable pair at a time until it is linear
//!   ([`extension`]),
//! - builds linear extensions that keep a chosen grade fixed, and a finite
//!   family of linear extensions whose pointwise minimum is the original
//!   order ([`preserve`]),
//! - provides an independent brute-force checker and a seeded random order
//!   generator for tests ([`oracle`]),
//! - reads and writes CSV/JSON matrices ([`io`]) and drives the
//!   `fuzzy-linext` binary ([`cli`]).
//!
//! Grades are `f64` but only ever compared, min'd and max'd, so every output
//! grade is bit-identical to an input grade, 0 or 1.
//!
//! ```
//! use fuzzy_linext::{linearize, FuzzyRelation, is_linear};
//!
//! let r = FuzzyRelation::from_rows(
//!     &["a", "b", "c"],
//!     &[[1.0, 0.0, 0.4], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
//! )
//! .unwrap();
//! let res = linearize(&r).unwrap();
//! assert!(is_linear(&res.relation));
//! assert_eq!(res.k, 2);
//! ```

pub mod axioms;
pub mod cli;
pub mod error;
pub mod extension;
pub mod io;
pub mod membership;
pub mod oracle;
pub mod preserve;
pub mod relation;

pub use axioms::{check_order, is_linear, is_order, AxiomReport};
pub use error::{Error, Result};
pub use extension::{
    linearize, linearize_with, pivot_extend, LinearizationResult, PivotPolicy, PivotStep,
};
pub use membership::Membership;
pub use preserve::{
    certifying_family, clamp_extend, verify_intersection, Certificate, ClampResult,
    ExtensionFamily, IntersectionReport,
};
pub use relation::{extends, pointwise_inf, Element, FuzzyRelation, Pair};
