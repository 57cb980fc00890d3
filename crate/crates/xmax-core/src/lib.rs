//! Finite-group computation engine: exact permutation-group arithmetic,
//! whole-lattice subgroup enumeration, decidable classes of finite groups,
//! conjugacy classes of relatively maximal (X-maximal) subgroups and the
//! class-number reduction machinery built on them, plus a named-group
//! catalog and verification suites.

pub mod caps;
pub mod catalog;
pub mod classes;
pub mod error;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod perm;
pub mod reduction;
pub mod report;
pub mod specfile;
pub mod structure;
pub mod suites;

mod bsgs;
mod table;

pub use caps::Caps;
pub use classes::GroupClassDescriptor;
pub use error::{Error, Result};
pub use group::{PermutationGroup, Subgroup};
pub use perm::Permutation;
