//! Finite p-groups, exact character tables, and the table-only decision of
//! whether a p-group has an irreducible representation in which no
//! primitive element fixes a nonzero vector.

pub mod chartab;
pub mod coset;
pub mod cover;
pub mod cyclotomic;
pub mod group;
pub mod io;
pub mod perm;
pub mod propii;
pub mod workflow;
mod util;

pub use cyclotomic::Cyclotomic;
pub use group::{generate_group, Classes, ConjugacyClass, Group, GroupError, PowerMap, Subgroup};
pub use perm::{PermError, Permutation};
pub use coset::{enumerate_group, evaluate_word, CosetError, Presentation, Word};
pub use chartab::{character_table, CharacterTable, ChartabError};
pub use propii::{decide_property_ii, PropertyIIReport, PropiiError, Provenance};
