//! Subgroup lattices of finite groups: modular and S-quasinormal subgroups,
//! `n`-maximal subgroups, chief-factor based group classes, and a checker for
//! structure theorems relating them.
//!
//! Groups are stored as dense Cayley tables with the identity at index 0 and
//! are capped at [`group::DEFAULT_MAX_ORDER`] elements unless a caller raises
//! the cap.

pub mod bitset;
pub mod catalog;
pub mod cli;
pub mod classify;
pub mod error;
pub mod group;
pub mod io;
pub mod lattice;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Group, Subgroup};
pub use lattice::{SubgroupId, SubgroupLattice};
