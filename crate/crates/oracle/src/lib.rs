//! Reference implementations that share no code with the pc machinery:
//! coset enumeration and computations on explicit multiplication tables.

pub mod group;
pub mod todd_coxeter;

pub use group::{compose, Elem, FiniteGroup};
pub use todd_coxeter::{enumerate, CosetTable};
