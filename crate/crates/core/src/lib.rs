//! Finite permutation groups, conjugacy-class products and the derived
//! length of centralizer sections.
//!
//! Groups are enumerated in full (see [`Group`]); everything else is built
//! from exhaustive sweeps over element ids. The [`harness`] module checks
//! the structural statements about class products on concrete groups, and
//! [`search`] collects data for the questions that are still open.

pub mod catalog;
pub mod classes;
pub mod constructions;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod harness;
pub mod ingest;
pub mod perm;
pub mod quotient;
pub mod search;
pub mod section;
pub mod series;
pub mod subgroup;

pub use catalog::{catalog, CatalogProfile};
pub use classes::{
    all_conjugacy_classes, conjugacy_class_of, decompose_normal_subset, eta, inverse_class,
    product_of_subsets, ClassProductReport, ConjugacyClass, NormalSubset,
};
pub use error::{GroupError, Result};
pub use group::{closure_enumerate, ElemId, Group, OrderGuard, DEFAULT_MAX_ORDER};
pub use groupspec::{parse_group_spec, GroupSpec, SpecExpr};
pub use harness::{CounterexampleRecord, TheoremId, Verdict, VerificationReport};
pub use perm::{compose, Permutation};
pub use quotient::{quotient, QuotientGroup};
pub use series::{SeriesKind, SeriesReport};
pub use subgroup::{
    center, centralizer_of_subset, commutator_subgroup, is_normal, subgroup_generated, Subgroup,
};
