//! Graded Stone duality for finite structures.
//!
//! The crate builds finite Γ-graded inverse ∧-semigroups and finite Γ-graded
//! groupoids, computes the functors between them, and checks the natural
//! isomorphisms by exhaustive computation.

pub mod cli;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod grading;
pub mod groupoid;
pub mod invsemi;
pub mod lemmas;
pub mod order;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
pub use grading::{AnyGroup, GradedGroup, IntVectorGroup, TableGroup};
pub use invsemi::{Compatibility, GradedInverseSemigroup, SemigroupMorphism};
pub use order::{FilterSet, FinitePoset};
pub use report::Report;
