//! Exact computations for generalized open sets on finite and symbolic
//! topological spaces.
//!
//! The finite engine ([`setcore`], [`operators`], [`classes`]) works on
//! explicit topologies of at most [`setcore::MAX_POINTS`] points. [`symbolic`]
//! decides the same notions on a handful of countably infinite spaces using a
//! closed algebra of eventually periodic sets. [`bitop`] covers spaces with two
//! topologies, and [`registry`] ties everything into exhaustive theorem checks,
//! a counterexample miner and report builders for the CLI.

pub mod bitop;
pub mod classes;
pub mod error;
pub mod operators;
pub mod registry;
pub mod setcore;
pub mod symbolic;

pub use error::{Result, TopoError};
pub use setcore::{FiniteSpace, PointSet};
