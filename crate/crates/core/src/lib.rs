//! Hausdorff numbers of topological spaces.
//!
//! The finite side covers validation of topologies on up to 64 points, the
//! correspondence with preorders, separability of point sets, the Hausdorff
//! number (closed form and exhaustive oracle), classical separation axioms,
//! and exhaustive enumeration of topologies on up to 7 points with
//! homeomorphism classes and counts by Hausdorff number.
//!
//! The [`symbolic`] module models a family of uncountable compact
//! non-Hausdorff spaces exactly, with checkable separation witnesses.

pub mod cache;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod pointset;
pub mod separation;
pub mod symbolic;
pub mod topology;

pub use enumeration::{CanonicalForm, CountFilter, CountsTable};
pub use error::{Error, Result, Violation};
pub use pointset::PointSet;
pub use separation::{
    AnalysisReport, AxiomsReport, HausdorffNumber, SeparationDecision, SeparationWitness,
};
pub use topology::{FiniteTopology, Preorder};
