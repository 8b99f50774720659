//! Verification toolkit for finite BO/BH/Z-algebras and rough-set
//! approximations over them.
//!
//! Carriers are always `{0, .., n-1}` with `n <= 64`; subsets are bitsets.
//! Every operation is a pure function of its inputs, so all values can be
//! shared freely across threads.
//!
//! ```
//! use roughalg::{fixtures, Label};
//!
//! let t2 = fixtures::table2();
//! assert!(roughalg::classify(&t2).contains(&Label::BO));
//! ```

pub mod algebra;
pub mod cli;
mod error;
pub mod fixtures;
pub mod format;
pub mod gas;
pub mod ideals;
pub mod relations;
pub mod rough;
pub mod search;
mod subset;
mod verdict;

pub use algebra::{
    check_axiom, check_axiom_with, classify, classify_with, find_identities,
    find_identities_with, product_set, AxiomId, AxiomReport, AxiomSets, FiniteAlgebra,
    Identities, IdentityScope, Label, WitnessLimit, ZProfile,
};
pub use error::{Error, Result};
pub use gas::SetValuedMap;
pub use ideals::{enumerate_ideals, is_ideal, is_strong_ideal, IdealReport};
pub use relations::{Partition, RelationPairs};
pub use rough::{ApproximationSpace, PropertyId, RoughPair};
pub use search::{SearchSpec, Target};
pub use subset::{Subset, MAX_ORDER};
pub use verdict::Verdict;
