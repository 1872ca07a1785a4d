//! Enumeration and classification of combinatorial manifolds with
//! vertex-transitive symmetry.
//!
//! The pipeline starts from a permutation group acting on vertex labels,
//! computes orbits of candidate facets, searches for orbit unions that close
//! up into pseudomanifolds, and then runs the resulting complexes through
//! manifold tests, isomorphism classification, homology, and bistellar-flip
//! heuristics for sphere recognition.

pub mod bistellar;
pub mod census;
pub mod classify;
pub mod complex;
pub mod enumerate;
pub mod groups;
pub mod homology;
pub mod orbits;
pub mod perm;
pub mod reference;
pub mod vertex_set;

pub use complex::SimplicialComplex;
pub use groups::PermutationGroup;
pub use perm::Permutation;
pub use vertex_set::VertexSet;
