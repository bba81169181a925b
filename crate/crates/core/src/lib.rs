//! Exact-arithmetic toolkit for 2-local representation rings of `C_{2^n}` and
//! `Q_8`, integer-lattice periodicity computations, symbolic norm/transfer
//! differential families, and a replay engine for the `C_4` slice spectral
//! sequence of the periodic height-2 theory, with chart output.

pub mod bredon;
pub mod chart;
pub mod engine;
pub mod groups;
pub mod lattice;
pub mod periodicity;
pub mod render;
pub mod symbolic;

pub use groups::{GroupId, SubgroupRef, VirtualRep};
pub use lattice::{IntMatrix, IntegerLattice, InvariantFactors};
pub use periodicity::{FiniteSubgroupDescriptor, HeightGroupPair, PeriodicityReport};
