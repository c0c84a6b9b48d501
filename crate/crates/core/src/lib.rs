//! Exact computations with squarefree powers of squarefree monomial ideals.
//!
//! The crate computes graded Betti numbers of quotients by squarefree
//! monomial ideals from first principles (reduced simplicial cohomology of
//! induced subcomplexes of the Stanley-Reisner complex), derives projective
//! dimension, depth and the normalized depth profile of every squarefree
//! power, and provides the graph-theoretic side of the story: edge ideals,
//! chordality, matchings and the complexes whose non-faces are matching
//! vertex sets. A `families` module builds ideals and graphs realizing
//! prescribed normalized depth profiles, and `verify` bundles the
//! acceptance suites behind the `sqfpow` binary.
//!
//! All arithmetic is exact: ranks over the rationals use fraction-free
//! integer elimination (with a big-integer fallback), ranks over prime
//! fields use modular elimination.

pub mod betti;
pub mod complex;
pub mod error;
pub mod families;
pub mod graph;
pub mod homology;
pub mod io;
pub mod monomial;
pub mod verify;

pub use betti::{BettiTable, GProfile, LinearityCheck, SplittingReport};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use families::{Construction, ProfileTarget};
pub use graph::{Graph, Matching};
pub use homology::{FieldSpec, HomologyDims};
pub use monomial::{MonomialIdeal, SquarefreeMonomial};
