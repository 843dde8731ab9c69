//! Checks of the structure theory for p-groups with `|G' : G''| = p^3`,
//! and the constructive procedures behind it.

pub mod checklist;
pub mod classify;
pub mod context;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod hypothesis;
pub mod invariants;
pub mod theorems;

pub use checklist::{Check, Checklist, Status};
pub use classify::{classify_derived_subgroup, verify_power_central, Classification, DerivedType};
pub use context::Context;
pub use decomposition::{
    central_decomposition, check_decomposition, hyperplane_minimality, subset_minimality, test_with_centralizer,
    Decomposition,
};
pub use error::{Result, VerifyError};
pub use generators::{
    check_normalized, is_standard_pair, normalize_generating_set, reduce_generators, standard_pair,
    standard_pair_of, Normalized, Reduction, ReductionCase,
};
pub use hypothesis::{hypothesis_check, require, HypothesisReport};
pub use invariants::{compare, first_difference, invariants, Invariants};
pub use theorems::{verify_hall_bounds, verify_theorem_1, verify_transfer_lemma};
