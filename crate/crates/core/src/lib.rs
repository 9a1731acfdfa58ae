//! Exact combinatorics of nilpotent orbits, their invariants, and character
//! sheaf label sets for the classical symmetric pairs.
//!
//! The crate enumerates signed Young diagrams per pair type, computes
//! component groups, Richardson criteria and allowed-character data, builds
//! the support sets and full label sets of character sheaves, and verifies
//! every counting identity against exact truncated power series.
//!
//! All values are immutable after construction and all operations are pure;
//! everything here is safe to use concurrently without coordination.

pub mod atlas;
pub mod component;
pub mod diagram;
pub mod error;
pub mod hecke;
pub mod partition;
pub mod richardson;
pub mod series;
pub mod support;
pub mod weyl;

pub use component::{component_group, orbital_complex_count, ComponentGroup};
pub use diagram::{
    enumerate_syd, join_diagrams, Decoration, OrbitLabel, RowGroup, SignedYoungDiagram,
    SymmetricPair,
};
pub use error::Error;
pub use partition::{enumerate_partitions, Partition};
pub use richardson::{
    is_richardson, nilpotent_support_count, omega_data, pi_characters, sl_nilpotent_labels, syd0,
    OmegaData, PiCharacter,
};
pub use series::{Rat, Series1, Series2};
pub use support::{
    fundamental_group_descriptor, support_set, BraidFactor, BraidFamily, FundGroupDescriptor,
    SupportLabel, SupportShape,
};
