//! Finite p-groups given by power-commutator presentations: collection,
//! subgroup computations and the p-quotient algorithm.

pub mod centralizer;
pub mod collect;
pub mod consistency;
pub mod enumerate;
pub mod error;
pub mod fp;
pub mod identities;
pub mod limits;
pub mod linalg;
pub mod pcp;
pub mod quotient;
pub mod subgroup;
pub mod word;

pub use centralizer::{center_of, centralizer_brute_force, centralizer_in, centralizer_lifting};
pub use consistency::{CheckId, Violation};
pub use error::{Error, Result};
pub use fp::FpPresentation;
pub use linalg::FpMatrix;
pub use pcp::{Definition, PcPresentation, PcpBuilder, PcpJson};
pub use quotient::{enforce, p_cover, p_quotient, Cover, QuotientResult, QuotientStep};
pub use subgroup::{
    commutator_subgroup, derived_series_of, is_elementary_abelian_section, lower_central_series_of,
    InducedSequence, Section, Sift, SubgroupReport,
};
pub use word::{FreeWord, Letter, NormalWord};
