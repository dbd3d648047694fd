//! Intersection invariants for free homotopy classes of closed curves on
//! surfaces with free (or finite) fundamental group.
//!
//! Curves are given as words in the surface generators; surfaces are given
//! combinatorially as one-vertex fat graphs (plus the plane, the sphere and
//! the projective plane as special cases). On top of that model the crate
//! computes:
//!
//! * minimal intersection and self-intersection numbers, in the ordered
//!   (parameterized) and the geometric (unordered) sense,
//! * Nielsen numbers and their geometric variants,
//! * Reidemeister class counts and class structure,
//! * per-point Nielsen class data for user-supplied intersection points.
//!
//! The counting engine works in the boundary circle order of the universal
//! cover; an independent numeric engine repeats the counts with explicit
//! hyperbolic isometries so the two can be checked against each other.

pub mod cosets;
pub mod error;
pub mod geodesic;
pub mod oracle;
pub mod reports;
pub mod surface;
pub mod words;

pub use error::{Error, Result};
pub use reports::{
    classify_curve, classify_pair, pair_report, self_report, Branch, ClassInventory, Count,
    CurveClass, PairClassification, PairReport, SelfReport,
};
pub use words::{
    conjugate_eq, cyclic_reduce, free_reduce, is_primitive, primitive_root, CyclicWord, Letter,
    PrimitiveDecomposition, Word,
};
pub use surface::{orientation_character, Dart, Fatgraph, Pi1, SurfaceProfile, SurfaceSpec};
